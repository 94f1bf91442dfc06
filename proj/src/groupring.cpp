#include "gonal/groupring.hpp"

#include <numeric>
#include <random>
#include <set>

#include "gonal/errors.hpp"
#include "gonal/parallel.hpp"

namespace gonal {

namespace {

using Rational = mpq_class;
using RationalRow = std::vector<Rational>;

// In-place reduced row-echelon form; returns pivot columns.
std::vector<std::size_t> rational_rref(std::vector<RationalRow>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Rational s = rows[rank][c];
    for (auto& x : rows[rank]) x /= s;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

// Scales a rational vector to coprime integers with a positive leading entry.
RegularVector primitive(const RationalRow& v) {
  BigInt lcm = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  RegularVector out(v.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (lcm / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g != 0)
    for (auto& x : out) x /= g;
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : out) y = -y;
    break;
  }
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string describe(const FrobeniusGroup& group, ElementId id) {
  const auto e = group.element(id);
  return "(" + format_vector(e.translation) + ", Φ^" + std::to_string(e.twist) + ")";
}

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::verification_failure, what); }

}  // namespace

// ---------------------------------------------------------------------------

FrobeniusGroup::FrobeniusGroup(const AdaptedAction& action) : action_(action) {}

FrobeniusGroup FrobeniusGroup::build(const AdaptedAction& action, std::uint64_t cap) {
  const auto& params = action.params();
  const std::uint64_t kernel = checked_space_size(params.q(), params.n());
  if (kernel > cap || kernel * params.p() > cap)
    throw CapExceeded("group table refused for " + params.label(), cap,
                      to_decimal(params.group_size() * params.p()));

  FrobeniusGroup g(action);
  g.kernel_order_ = kernel;
  g.order_ = kernel * params.p();
  const std::size_t n = params.n();
  const Residue q = params.q();
  const unsigned p = params.p();

  std::vector<Vector> vectors(kernel);
  for (std::uint64_t c = 0; c < kernel; ++c) vectors[c] = decode_vector(c, n, q);
  // twisted[e][c] = code of T^e applied to vector c
  std::vector<std::vector<std::uint64_t>> twisted(p, std::vector<std::uint64_t>(kernel));
  for (std::uint64_t c = 0; c < kernel; ++c) {
    Vector v = vectors[c];
    for (unsigned e = 0; e < p; ++e) {
      twisted[e][c] = encode_vector(v, q);
      v = action.matrix().apply(v);
    }
  }

  g.table_.resize(g.order_ * g.order_);
  Vector sum(n);
  for (std::size_t a = 0; a < g.order_; ++a) {
    const std::size_t e = a / kernel, va = a % kernel;
    for (std::size_t b = 0; b < g.order_; ++b) {
      const std::size_t f = b / kernel;
      const Vector& w = vectors[twisted[e][b % kernel]];
      for (std::size_t i = 0; i < n; ++i) sum[i] = (vectors[va][i] + w[i]) % q;
      g.table_[a * g.order_ + b] =
          static_cast<ElementId>(((e + f) % p) * kernel + encode_vector(sum, q));
    }
  }

  for (std::size_t a = 0; a < g.order_; ++a)
    if (g.multiply(0, static_cast<ElementId>(a)) != a || g.multiply(static_cast<ElementId>(a), 0) != a)
      fail("identity axiom fails at " + describe(g, static_cast<ElementId>(a)));

  g.inverse_.assign(g.order_, 0);
  for (std::size_t a = 0; a < g.order_; ++a) {
    std::size_t found = 0;
    for (std::size_t b = 0; b < g.order_; ++b)
      if (g.multiply(static_cast<ElementId>(a), static_cast<ElementId>(b)) == 0) {
        g.inverse_[a] = static_cast<ElementId>(b);
        ++found;
      }
    if (found != 1 || g.multiply(g.inverse_[a], static_cast<ElementId>(a)) != 0)
      fail("inverse axiom fails at " + describe(g, static_cast<ElementId>(a)));
  }

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order_ - 1));
  for (int trial = 0; trial < 4096; ++trial) {
    const ElementId x = pick(rng), y = pick(rng), z = pick(rng);
    if (g.multiply(g.multiply(x, y), z) != g.multiply(x, g.multiply(y, z)))
      fail("associativity fails at " + describe(g, x) + ", " + describe(g, y) + ", " + describe(g, z));
  }
  return g;
}

ElementId FrobeniusGroup::id_of(const GroupElement& e) const {
  return static_cast<ElementId>((e.twist % action_.params().p()) * kernel_order_ +
                                encode_vector(e.translation, action_.params().q()));
}

GroupElement FrobeniusGroup::element(ElementId id) const {
  return {decode_vector(id % kernel_order_, action_.params().n(), action_.params().q()),
          static_cast<unsigned>(id / kernel_order_)};
}

ElementId FrobeniusGroup::translation(const Vector& v) const { return id_of({v, 0}); }

ElementId FrobeniusGroup::phi_power(unsigned k) const {
  return static_cast<ElementId>((k % action_.params().p()) * kernel_order_);
}

unsigned FrobeniusGroup::element_order(ElementId a) const {
  unsigned k = 1;
  for (ElementId x = a; x != 0; x = multiply(x, a)) ++k;
  return k;
}

// ---------------------------------------------------------------------------

FrobeniusReport frobenius_check(const FrobeniusGroup& group) {
  FrobeniusReport r;
  r.group_order = group.order();
  const unsigned p = group.action().params().p();
  const ElementId phi = group.phi_power(1);
  const ElementId phi_inv = group.inverse(phi);
  const auto note = [&](const std::string& what) {
    if (r.counterexample.empty()) r.counterexample = what;
  };

  bool orders_ok = true;
  for (std::size_t a = group.kernel_order(); a < group.order(); ++a) {
    ++r.elements_outside_kernel;
    if (group.element_order(static_cast<ElementId>(a)) != p) {
      orders_ok = false;
      note("element " + describe(group, static_cast<ElementId>(a)) + " does not have order p");
    }
  }

  r.centralizer_trivial = true;
  for (std::size_t v = 1; v < group.kernel_order(); ++v) {
    const auto x = static_cast<ElementId>(v);
    if (group.multiply(phi, x) == group.multiply(x, phi)) {
      r.centralizer_trivial = false;
      note("Φ centralizes " + describe(group, x));
    }
  }

  r.all_orbits_size_p = true;
  std::vector<bool> seen(group.kernel_order(), false);
  for (std::size_t v = 1; v < group.kernel_order(); ++v) {
    ++r.nontrivial_kernel_elements;
    if (seen[v]) continue;
    ++r.conjugation_orbits;
    std::size_t size = 0;
    auto x = static_cast<ElementId>(v);
    do {
      seen[x] = true;
      ++size;
      x = group.multiply(group.multiply(phi, x), phi_inv);
    } while (x != v);
    if (size != p) {
      r.all_orbits_size_p = false;
      note("conjugation orbit of " + describe(group, static_cast<ElementId>(v)) + " has size " +
           std::to_string(size));
    }
  }

  r.no_commuting_pairs = true;
  for (std::size_t a = group.kernel_order(); a < group.order() && r.no_commuting_pairs; ++a)
    for (std::size_t v = 1; v < group.kernel_order(); ++v) {
      const auto g = static_cast<ElementId>(a), x = static_cast<ElementId>(v);
      if (group.multiply(g, x) == group.multiply(x, g)) {
        r.no_commuting_pairs = false;
        note(describe(group, g) + " commutes with " + describe(group, x));
        break;
      }
    }

  r.passed = orders_ok && r.centralizer_trivial && r.all_orbits_size_p && r.no_commuting_pairs;
  return r;
}

// ---------------------------------------------------------------------------

GroupRingOperator GroupRingOperator::element(ElementId g, BigInt coefficient) {
  GroupRingOperator op;
  op.add(g, coefficient);
  return op;
}

GroupRingOperator GroupRingOperator::sum_of(const std::vector<ElementId>& elements) {
  GroupRingOperator op;
  for (auto g : elements) op.add(g, 1);
  return op;
}

void GroupRingOperator::add(ElementId g, const BigInt& c) {
  auto& slot = terms_[g];
  slot += c;
  if (slot == 0) terms_.erase(g);
}

GroupRingOperator GroupRingOperator::compose(const GroupRingOperator& rhs,
                                             const FrobeniusGroup& group) const {
  GroupRingOperator out;
  for (const auto& [g, a] : terms_)
    for (const auto& [h, b] : rhs.terms_) out.add(group.multiply(g, h), a * b);
  return out;
}

RegularVector GroupRingOperator::apply(const RegularVector& z, const FrobeniusGroup& group) const {
  if (z.size() != group.order())
    throw Error(ErrorKind::ambient_mismatch, "regular vector has wrong dimension");
  RegularVector out(z.size(), 0);
  for (const auto& [g, c] : terms_)
    for (std::size_t x = 0; x < z.size(); ++x)
      if (z[x] != 0) out[group.multiply(g, static_cast<ElementId>(x))] += c * z[x];
  return out;
}

RegularVector act(const FrobeniusGroup& group, ElementId g, const RegularVector& z) {
  return GroupRingOperator::element(g).apply(z, group);
}

// ---------------------------------------------------------------------------

FixedSubspace fixed_subspace(const FrobeniusGroup& group, const Hyperplane& h,
                             const Vector& transversal) {
  const auto& params = group.action().params();
  if (h.ambient_dim() != params.n() || transversal.size() != params.n())
    throw Error(ErrorKind::ambient_mismatch, "hyperplane or transversal has wrong length");
  if (h.contains(transversal))
    throw Error(ErrorKind::invalid_parameters,
                "invalid transversal: " + format_vector(transversal) + " lies in the hyperplane");

  const std::size_t order = group.order();
  // hz = z for the generators of L identifies coordinates along L-orbits.
  DisjointSets sets(order);
  for (const auto& gen : h.kernel().basis_vectors()) {
    const ElementId g = group.translation(gen);
    for (std::size_t x = 0; x < order; ++x) sets.unite(x, group.multiply(g, static_cast<ElementId>(x)));
  }
  std::vector<std::size_t> cls(order);
  std::map<std::size_t, std::size_t> class_of_root;
  for (std::size_t x = 0; x < order; ++x) {
    const auto root = sets.find(x);
    auto [it, inserted] = class_of_root.try_emplace(root, class_of_root.size());
    cls[x] = it->second;
  }
  const std::size_t vars = class_of_root.size();

  // (sum_j n^j z)_y = sum_j z_{n^-j y} = 0 for every y.
  const PrimeField f(params.q());
  std::vector<ElementId> shifts;
  for (Residue j = 0; j < params.q(); ++j) {
    Vector v(transversal.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.neg(f.mul(j, transversal[i] % params.q()));
    shifts.push_back(group.translation(v));
  }
  std::set<std::vector<long>> equations;
  for (std::size_t y = 0; y < order; ++y) {
    std::vector<long> row(vars, 0);
    for (auto s : shifts) ++row[cls[group.multiply(s, static_cast<ElementId>(y))]];
    equations.insert(std::move(row));
  }

  std::vector<RationalRow> system;
  for (const auto& e : equations) system.emplace_back(e.begin(), e.end());
  const auto pivots = rational_rref(system, vars);
  std::vector<bool> is_pivot(vars, false);
  for (auto c : pivots) is_pivot[c] = true;

  FixedSubspace out{h, transversal, {}, {}};
  for (std::size_t free = 0; free < vars; ++free) {
    if (is_pivot[free]) continue;
    RationalRow w(vars, 0);
    w[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) w[pivots[i]] = -system[i][free];
    RationalRow lifted(order);
    for (std::size_t x = 0; x < order; ++x) lifted[x] = w[cls[x]];
    out.basis.push_back(primitive(lifted));
  }

  std::vector<RationalRow> canon;
  for (const auto& b : out.basis) canon.emplace_back(b.begin(), b.end());
  rational_rref(canon, order);
  for (const auto& row : canon) {
    std::vector<std::string> s;
    s.reserve(row.size());
    for (const auto& x : row) s.push_back(x.get_str());
    out.canonical.push_back(std::move(s));
  }
  return out;
}

FixedSubspace fixed_subspace(const FrobeniusGroup& group, const Hyperplane& h) {
  Vector n(h.ambient_dim(), 0);
  for (std::size_t i = 0; i < n.size(); ++i)
    if (h.normal()[i] != 0) {
      n[i] = 1;
      break;
    }
  return fixed_subspace(group, h, n);
}

namespace {

std::vector<ElementId> hyperplane_elements(const FrobeniusGroup& group, const Hyperplane& h) {
  std::vector<ElementId> out;
  const auto& params = group.action().params();
  for (std::uint64_t c = 0; c < group.kernel_order(); ++c)
    if (h.contains(decode_vector(c, params.n(), params.q()))) out.push_back(static_cast<ElementId>(c));
  return out;
}

bool is_multiple(const RegularVector& image, const RegularVector& z, const BigInt& s) {
  for (std::size_t i = 0; i < z.size(); ++i)
    if (image[i] != s * z[i]) return false;
  return true;
}

std::string witness(const FixedSubspace& fixed, std::size_t basis_index) {
  return "hyperplane " + format_vector(fixed.hyperplane.normal()) + ", basis vector " +
         std::to_string(basis_index) + " of A_L";
}

}  // namespace

BigInt verify_averaging_scalar(const FrobeniusGroup& group, const FixedSubspace& fixed) {
  const auto& params = group.action().params();
  if (fixed.basis.empty()) throw Error(ErrorKind::invalid_parameters, "A_L is zero");
  std::vector<ElementId> powers;
  for (unsigned k = 0; k < params.p(); ++k) powers.push_back(group.phi_power(k));
  const auto op = GroupRingOperator::sum_of(hyperplane_elements(group, fixed.hyperplane))
                      .compose(GroupRingOperator::sum_of(powers), group);
  const BigInt expected = big_pow(params.q(), params.n() - 1);

  BigInt scalar = 0;
  for (std::size_t b = 0; b < fixed.basis.size(); ++b) {
    const auto& z = fixed.basis[b];
    const auto image = op.apply(z, group);
    if (b == 0) {
      for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] != 0) {
          scalar = image[i] / z[i];
          break;
        }
    }
    if (!is_multiple(image, z, scalar))
      fail("operator is not scalar on " + witness(fixed, b));
  }
  if (scalar != expected)
    fail("operator acts as " + to_decimal(scalar) + ", expected " + to_decimal(expected) + " on " +
         witness(fixed, 0));
  return scalar;
}

CrossTermReport verify_cross_terms(const FrobeniusGroup& group, const FixedSubspace& fixed) {
  const auto& params = group.action().params();
  const auto elements = hyperplane_elements(group, fixed.hyperplane);
  const auto sum_l = GroupRingOperator::sum_of(elements);
  CrossTermReport r;
  r.k0_factor = static_cast<unsigned long>(elements.size());
  r.k0_scalar = true;
  for (std::size_t b = 0; b < fixed.basis.size(); ++b)
    if (!is_multiple(sum_l.apply(fixed.basis[b], group), fixed.basis[b], r.k0_factor)) {
      r.k0_scalar = false;
      fail("sum over L is not |L| on " + witness(fixed, b));
    }
  for (unsigned k = 1; k < params.p(); ++k) {
    const auto op = sum_l.compose(GroupRingOperator::element(group.phi_power(k)), group);
    for (std::size_t b = 0; b < fixed.basis.size(); ++b) {
      const auto image = op.apply(fixed.basis[b], group);
      if (std::any_of(image.begin(), image.end(), [](const BigInt& x) { return x != 0; }))
        fail("cross term k=" + std::to_string(k) + " survives on " + witness(fixed, b));
    }
    r.annihilating_k.push_back(k);
  }
  r.passed = true;
  return r;
}

// ---------------------------------------------------------------------------

GroupRingSummary verify_groupring(const AdaptedAction& action, const GroupRingOptions& options) {
  const auto& params = action.params();
  const auto group = FrobeniusGroup::build(action, options.cap);
  GroupRingSummary s{params};
  s.group_order = group.order();
  s.frobenius = frobenius_check(group);
  if (!s.frobenius.passed) fail("Frobenius property fails: " + s.frobenius.counterexample);
  s.expected_scalar = big_pow(params.q(), params.n() - 1);
  s.composite_scalar = big_pow(params.q(), params.n());

  AtlasOptions atlas;
  atlas.cap = options.cap;
  atlas.threads = 1;
  const auto classes = orbit_classes(action, atlas);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (const auto& h : classes[c].members) s.hyperplanes.push_back({h, c});

  const unsigned threads = options.threads ? options.threads : default_thread_count();
  parallel_for(s.hyperplanes.size(), threads, [&](std::size_t i) {
    auto& row = s.hyperplanes[i];
    const auto fixed = fixed_subspace(group, row.hyperplane);
    row.fixed_dim = fixed.dim();
    row.scalar = verify_averaging_scalar(group, fixed);
    row.cross_terms_vanish = verify_cross_terms(group, fixed).passed;
    row.transversal_independent = true;
    if (options.check_transversals) {
      for (std::uint64_t c = 1; c < group.kernel_order(); ++c) {
        const Vector v = decode_vector(c, params.n(), params.q());
        if (row.hyperplane.contains(v)) continue;
        if (fixed_subspace(group, row.hyperplane, v).canonical != fixed.canonical) {
          row.transversal_independent = false;
          fail("A_L depends on the transversal " + format_vector(v) + " for hyperplane " +
               format_vector(row.hyperplane.normal()));
        }
      }
    }
  });

  s.dims_constant_on_orbits = true;
  for (const auto& row : s.hyperplanes)
    for (const auto& other : s.hyperplanes)
      if (row.orbit_index == other.orbit_index && row.fixed_dim != other.fixed_dim)
        s.dims_constant_on_orbits = false;
  if (!s.dims_constant_on_orbits) fail("dim A_L differs within a Φ-orbit");
  s.passed = true;
  return s;
}

}  // namespace gonal
