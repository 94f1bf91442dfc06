#include "gonal/adapted_action.hpp"

#include <set>

#include "gonal/errors.hpp"

namespace gonal {

namespace {

FqMatrix companion_block(unsigned p, Residue q) {
  const std::size_t d = p - 1;
  FqMatrix c(q, d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) c.set(i + 1, i, 1);
  for (std::size_t k = 0; k < d; ++k) c.set(k, d - 1, -1);
  return c;
}

FqMatrix block_diagonal(const FqMatrix& block, std::size_t copies) {
  const std::size_t d = block.rows();
  FqMatrix m(block.modulus(), d * copies, d * copies);
  for (std::size_t b = 0; b < copies; ++b)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m.set(b * d + i, b * d + j, block.at(i, j));
  return m;
}

}  // namespace

AdaptedAction::AdaptedAction(CoverParams params)
    : params_(std::move(params)),
      block_(companion_block(params_.p(), params_.q())),
      matrix_(block_diagonal(block_, params_.r() - 2)),
      inverse_(matrix_.power(params_.p() - 1)) {}

Vector AdaptedAction::act(const Vector& x, std::int64_t k) const {
  const std::int64_t p = params_.p();
  std::int64_t e = ((k % p) + p) % p;
  Vector y = x;
  for (std::int64_t i = 0; i < e; ++i) y = matrix_.apply(y);
  return y;
}

AdaptedAction build_action(const CoverParams& params) { return AdaptedAction(params); }

CyclotomicFactorization cyclotomic_factor(unsigned p, Residue q) {
  CyclotomicFactorization out;
  out.p = p;
  out.q = q;
  out.s0 = order_mod(q, p);
  const Polynomial phi = Polynomial::cyclotomic_prime(p, q);

  // Every irreducible factor has degree s0, so any monic degree-s0 divisor
  // of what remains is itself one of the factors.
  if (out.s0 == p - 1) {
    out.factors.push_back(phi);
    return out;
  }
  Polynomial rest = phi;
  const std::uint64_t candidates = checked_space_size(q, out.s0);
  std::vector<std::int64_t> coeffs(out.s0 + 1, 0);
  coeffs[out.s0] = 1;
  for (std::uint64_t code = 0; code < candidates && rest.degree() > 0; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < out.s0; ++i) {
      coeffs[i] = static_cast<std::int64_t>(c % q);
      c /= q;
    }
    const Polynomial f(q, coeffs);
    auto [quot, rem] = rest.divmod(f);
    if (!rem.is_zero()) continue;
    out.factors.push_back(f);
    rest = quot;
  }
  if (rest.degree() != 0 || out.factors.size() != (p - 1) / out.s0)
    throw Error(ErrorKind::internal_inconsistency, "cyclotomic factorization incomplete");
  return out;
}

Subspace invariant_subspace_of_dim(const AdaptedAction& action, std::size_t s) {
  const auto& params = action.params();
  const std::size_t n = params.n();
  if (s > n || pow_mod(params.q(), s, params.p()) != 1)
    throw Error(ErrorKind::no_invariant_subspace,
                "no T-invariant subspace of dimension " + std::to_string(s) +
                    ": need s <= " + std::to_string(n) + " and q^s = 1 mod p");
  if (s == 0) return Subspace::zero(params.q(), n);

  const auto factorization = cyclotomic_factor(params.p(), params.q());
  const std::size_t d = params.p() - 1;
  const std::size_t s0 = factorization.s0;
  std::vector<Vector> gens;
  std::size_t pieces = s / s0;
  for (std::size_t b = 0; b + 2 <= params.r() && pieces > 0; ++b) {
    for (const auto& f : factorization.factors) {
      if (pieces == 0) break;
      const Subspace piece = kernel(f.evaluate(action.block()));
      for (const auto& v : piece.basis_vectors()) {
        Vector lifted(n, 0);
        std::copy(v.begin(), v.end(), lifted.begin() + static_cast<std::ptrdiff_t>(b * d));
        gens.push_back(std::move(lifted));
      }
      --pieces;
    }
  }
  Subspace out = Subspace::span(params.q(), n, gens);
  if (out.dim() != s || !out.is_invariant_under(action.matrix()))
    throw Error(ErrorKind::internal_inconsistency, "invariant subspace construction failed");
  return out;
}

std::vector<Subspace> enumerate_invariant_subspaces(const AdaptedAction& action,
                                                    std::uint64_t max_ambient) {
  const auto& params = action.params();
  const std::size_t n = params.n();
  const Residue q = params.q();
  const std::uint64_t size = checked_space_size(q, n);
  if (size > max_ambient)
    throw CapExceeded("invariant-subspace enumeration refused", max_ambient,
                      to_decimal(params.group_size()));

  // Cyclic submodules span{v, Tv, ..., T^(p-1) v}.
  std::set<Subspace> cyclic;
  for (std::uint64_t code = 1; code < size; ++code) {
    Vector v = decode_vector(code, n, q);
    std::vector<Vector> orbit;
    for (unsigned k = 0; k < params.p(); ++k) {
      orbit.push_back(v);
      v = action.matrix().apply(v);
    }
    cyclic.insert(Subspace::span(q, n, orbit));
  }

  std::set<Subspace> found{Subspace::zero(q, n)};
  std::vector<Subspace> frontier{Subspace::zero(q, n)};
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& v : frontier)
      for (const auto& c : cyclic) {
        Subspace w = sum(v, c);
        if (found.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

}  // namespace gonal
