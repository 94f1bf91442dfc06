#include "gonal/atlas.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include "gonal/errors.hpp"
#include "gonal/parallel.hpp"

namespace gonal {

namespace {

void require_space_within(const CoverParams& params, std::uint64_t cap, const char* what) {
  const std::uint64_t size = checked_space_size(params.q(), params.n());
  if (size > cap)
    throw CapExceeded(std::string(what) + " refused for " + params.label() + ": q^n exceeds cap",
                      cap, to_decimal(params.group_size()));
}

// Leading-one vectors with the lead at position `lead` occupy the code range
// [q^(n-1-lead), 2 q^(n-1-lead)); walking leads from n-1 down to 0 visits
// every normalized normal in increasing code, hence lexicographic, order.
template <class Visit>
void walk_normal_codes(std::size_t n, Residue q, Visit&& visit) {
  std::uint64_t block = 1;
  for (std::size_t lead = n; lead-- > 0;) {
    for (std::uint64_t code = block; code < 2 * block; ++code) visit(code);
    block *= q;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Hyperplane Hyperplane::from_normal(Vector normal, Residue modulus) {
  const PrimeField f(modulus);
  std::size_t lead = 0;
  while (lead < normal.size() && normal[lead] % modulus == 0) ++lead;
  if (lead == normal.size())
    throw Error(ErrorKind::invalid_parameters, "hyperplane normal must be nonzero");
  const Residue s = f.inv(normal[lead] % modulus);
  for (auto& x : normal) x = f.mul(x % modulus, s);
  return Hyperplane(std::move(normal), modulus);
}

Hyperplane Hyperplane::from_subspace(const Subspace& s) {
  if (s.dim() + 1 != s.ambient_dim())
    throw Error(ErrorKind::invalid_parameters,
                "not a hyperplane: dimension " + std::to_string(s.dim()) + " in ambient " +
                    std::to_string(s.ambient_dim()));
  const Subspace ann = s.annihilator();
  return from_normal(ann.basis().row_vector(0), s.modulus());
}

Subspace Hyperplane::kernel() const {
  return gonal::kernel(FqMatrix::from_rows(modulus_, normal_.size(), {normal_}));
}

Residue Hyperplane::evaluate(const Vector& x) const {
  if (x.size() != normal_.size())
    throw Error(ErrorKind::ambient_mismatch, "hyperplane: vector length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = (acc + std::uint64_t{normal_[i]} * x[i]) % modulus_;
  return static_cast<Residue>(acc);
}

// ---------------------------------------------------------------------------

void for_each_hyperplane(const CoverParams& params, std::uint64_t cap,
                         const std::function<void(const Hyperplane&)>& visit) {
  require_space_within(params, cap, "hyperplane enumeration");
  const std::size_t n = params.n();
  const Residue q = params.q();
  walk_normal_codes(n, q, [&](std::uint64_t code) {
    visit(Hyperplane::from_normal(decode_vector(code, n, q), q));
  });
}

std::vector<Hyperplane> enumerate_hyperplanes(const CoverParams& params, std::uint64_t cap) {
  std::vector<Hyperplane> out;
  for_each_hyperplane(params, cap, [&](const Hyperplane& h) { out.push_back(h); });
  return out;
}

Hyperplane conjugate_hyperplane(const Hyperplane& h, const AdaptedAction& action,
                                Conjugation convention) {
  const FqMatrix& m =
      convention == Conjugation::kernel_image ? action.inverse() : action.matrix();
  return Hyperplane::from_normal(m.apply_left(h.normal()), h.modulus());
}

std::vector<Hyperplane> hyperplane_orbit(const Hyperplane& h, const AdaptedAction& action,
                                         Conjugation convention) {
  std::vector<Hyperplane> orbit{h};
  for (Hyperplane next = conjugate_hyperplane(h, action, convention); next != h;
       next = conjugate_hyperplane(next, action, convention)) {
    orbit.push_back(next);
    if (orbit.size() > action.params().p())
      throw Error(ErrorKind::internal_inconsistency, "hyperplane orbit longer than p");
  }
  return orbit;
}

namespace {

Subspace core_of_members(const std::vector<Hyperplane>& members) {
  std::vector<Vector> normals;
  normals.reserve(members.size());
  for (const auto& m : members) normals.push_back(m.normal());
  const auto& first = members.front();
  return kernel(FqMatrix::from_rows(first.modulus(), first.ambient_dim(), normals));
}

}  // namespace

Subspace core(const Hyperplane& h, const AdaptedAction& action) {
  return core_of_members(hyperplane_orbit(h, action));
}

std::vector<OrbitClass> orbit_classes(const AdaptedAction& action, const AtlasOptions& options) {
  const auto& params = action.params();
  require_space_within(params, options.cap, "orbit classification");
  const std::size_t n = params.n();
  const Residue q = params.q();
  const unsigned p = params.p();

  struct Pending {
    std::vector<Hyperplane> members;
  };
  std::vector<Pending> pending;
  std::vector<std::uint8_t> seen(checked_space_size(q, n), 0);
  walk_normal_codes(n, q, [&](std::uint64_t code) {
    if (seen[code]) return;
    auto members = hyperplane_orbit(Hyperplane::from_normal(decode_vector(code, n, q), q), action,
                                    options.convention);
    if (members.size() != p)
      throw Error(ErrorKind::invariant_hyperplane,
                  "orbit of size " + std::to_string(members.size()) + " for normal " +
                      format_vector(members.front().normal()));
    for (const auto& m : members) seen[encode_vector(m.normal(), q)] = 1;
    pending.push_back({std::move(members)});
  });

  std::vector<Subspace> cores(pending.size(), Subspace::zero(q, n));
  const unsigned threads = options.threads ? options.threads : default_thread_count();
  parallel_for(pending.size(), threads,
               [&](std::size_t i) { cores[i] = core_of_members(pending[i].members); });

  std::vector<OrbitClass> out;
  out.reserve(pending.size());
  for (std::size_t i = 0; i < pending.size(); ++i) {
    Hyperplane rep = pending[i].members.front();
    out.push_back({std::move(rep), std::move(pending[i].members), std::move(cores[i])});
  }
  return out;
}

// ---------------------------------------------------------------------------

BigInt gaussian_count(unsigned n, unsigned k, unsigned q) {
  if (k > n) return 0;
  BigInt num = 1, den = 1;
  for (unsigned j = 0; j < k; ++j) {
    num *= big_pow(q, n - j) - 1;
    den *= big_pow(q, k - j) - 1;
  }
  return num / den;
}

std::vector<Subspace> enumerate_subgroups_brute(unsigned n, unsigned k, Residue q,
                                                std::uint64_t cap) {
  PrimeField{q};
  if (k > n) return {};
  const std::uint64_t size = checked_space_size(q, n);
  if (size > cap)
    throw CapExceeded("subspace enumeration refused: q^n exceeds cap", cap,
                      to_decimal(big_pow(q, n)));

  std::set<Subspace> level{Subspace::zero(q, n)};
  for (unsigned d = 1; d <= k; ++d) {
    std::set<Subspace> next;
    for (const auto& v : level) {
      // Extend only by vectors already reduced modulo v (zero on its pivot
      // columns) with a leading one; every other choice spans a subspace
      // reached from one of these.
      std::vector<std::size_t> free_cols;
      for (std::size_t c = 0; c < n; ++c)
        if (std::find(v.pivots().begin(), v.pivots().end(), c) == v.pivots().end()) free_cols.push_back(c);
      const std::uint64_t choices = checked_space_size(q, free_cols.size());
      const auto rows = v.basis_vectors();
      for (std::uint64_t code = 1; code < choices; ++code) {
        const Vector digits = decode_vector(code, free_cols.size(), q);
        auto lead = std::find_if(digits.begin(), digits.end(), [](Residue e) { return e != 0; });
        if (*lead != 1) continue;
        Vector x(n, 0);
        for (std::size_t i = 0; i < free_cols.size(); ++i) x[free_cols[i]] = digits[i];
        auto gens = rows;
        gens.push_back(std::move(x));
        next.insert(Subspace::span(q, n, gens));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

// ---------------------------------------------------------------------------

std::string semidirect_descriptor(unsigned q, std::size_t k, unsigned p) {
  return "Z_" + std::to_string(q) + "^" + std::to_string(k) + " ⋊ Z_" + std::to_string(p);
}

GaloisReport galois_closure(const Hyperplane& h, const AdaptedAction& action) {
  const auto& params = action.params();
  if (h.ambient_dim() != params.n() || h.modulus() != params.q())
    throw Error(ErrorKind::ambient_mismatch, "hyperplane does not live in Z_q^n for " + params.label());
  if (conjugate_hyperplane(h, action) == h)
    throw Error(ErrorKind::invariant_hyperplane,
                "hyperplane " + format_vector(h.normal()) + " is invariant under the action");

  GaloisReport report{params, h};
  report.is_composite_galois = false;
  report.core_dim = core(h, action).dim();
  report.k = params.n() - report.core_dim;
  report.group = semidirect_descriptor(params.q(), report.k, params.p());
  report.group_order = BigInt(params.p()) * big_pow(params.q(), report.k);
  report.order_congruence = pow_mod(params.q(), report.k, params.p()) == 1;
  report.exceeds_p_minus_1 = report.k > params.p() - 1;
  if (!report.order_congruence)
    throw Error(ErrorKind::internal_inconsistency,
                "Galois kernel rank " + std::to_string(report.k) + " violates q^k = 1 mod p");
  return report;
}

// ---------------------------------------------------------------------------

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const CoverParams& params)
      : s_(text), params_(params), f_(params.q()), v_(params.n(), 0) {}

  Vector parse() {
    skip_separators();
    if (pos_ == s_.size()) fail("empty word");
    while (pos_ < s_.size()) {
      parse_factor();
      skip_separators();
    }
    return v_;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::parse_error,
                "malformed word '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_separators() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*'))
      ++pos_;
  }

  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // digits, or {digits}; `signed_ok` admits a leading '-'.
  std::int64_t integer(bool signed_ok) {
    const bool braced = accept('{');
    bool negative = false;
    if (signed_ok && accept('-')) negative = true;
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
    if (ec != std::errc()) fail("integer out of range");
    if (braced && !accept('}')) fail("expected '}'");
    return negative ? -value : value;
  }

  void parse_factor() {
    if (!accept('a')) fail("expected generator symbol 'a'");
    accept('_');
    const std::int64_t index = integer(false);
    std::int64_t exponent = 1;
    if (accept('^')) exponent = integer(true);

    const std::int64_t p = params_.p();
    const std::int64_t symbols = p * (params_.r() - 2);
    if (index < 1 || index > symbols)
      throw Error(ErrorKind::parse_error, "generator index a_" + std::to_string(index) +
                                              " out of range 1.." + std::to_string(symbols));
    const std::size_t block = static_cast<std::size_t>((index - 1) / p);
    const std::size_t slot = static_cast<std::size_t>((index - 1) % p);
    const std::size_t base = block * static_cast<std::size_t>(p - 1);
    const Residue e = f_.reduce(exponent);
    if (slot + 1 < static_cast<std::size_t>(p)) {
      v_[base + slot] = f_.add(v_[base + slot], e);
    } else {
      for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(p); ++i)
        v_[base + i] = f_.sub(v_[base + i], e);
    }
  }

  std::string_view s_;
  const CoverParams& params_;
  PrimeField f_;
  Vector v_;
  std::size_t pos_ = 0;
};

}  // namespace

Vector parse_word(std::string_view word, const CoverParams& params) {
  return WordParser(word, params).parse();
}

Subspace parse_generator_words(std::string_view text, const CoverParams& params) {
  std::vector<Vector> gens;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      gens.push_back(parse_word(line, params));
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return Subspace::span(params.q(), params.n(), gens);
}

}  // namespace gonal
