#pragma once

// The order-p action of the lifted p-gonal automorphism on the homology
// group Z_q^n, written in an adapted basis.
//
// Coordinates are ordered block by block, (a_{1,1..p-1}, a_{2,1..p-1}, ...).
// Within a block the automorphism sends a_{j,i} to a_{j,i+1}; the last
// generator goes to a_{j,p} = -(a_{j,1} + ... + a_{j,p-1}). Each block is
// therefore the companion matrix of 1 + x + ... + x^(p-1).

#include <cstdint>
#include <vector>

#include "gonal/fq.hpp"
#include "gonal/params.hpp"
#include "gonal/polynomial.hpp"

namespace gonal {

class AdaptedAction {
 public:
  explicit AdaptedAction(CoverParams params);

  const CoverParams& params() const { return params_; }
  std::size_t dim() const { return params_.n(); }
  Residue modulus() const { return params_.q(); }
  // T, acting on column vectors of exponents.
  const FqMatrix& matrix() const { return matrix_; }
  const FqMatrix& inverse() const { return inverse_; }
  // The (p-1)x(p-1) block shared by every diagonal position of T.
  const FqMatrix& block() const { return block_; }

  // T^k x for any integer k.
  Vector act(const Vector& x, std::int64_t k = 1) const;

 private:
  CoverParams params_;
  FqMatrix block_;
  FqMatrix matrix_;
  FqMatrix inverse_;
};

AdaptedAction build_action(const CoverParams& params);

struct CyclotomicFactorization {
  unsigned p = 0;
  Residue q = 0;
  unsigned s0 = 0;
  // Monic irreducible factors of 1 + x + ... + x^(p-1) over F_q, each of
  // degree s0, ordered by the integer sum of c_i q^i over their coefficients.
  std::vector<Polynomial> factors;
};

CyclotomicFactorization cyclotomic_factor(unsigned p, Residue q);

// A T-invariant subspace of dimension exactly s, assembled from kernels of
// f(T) restricted to single blocks for irreducible factors f. Throws
// no-invariant-subspace when q^s != 1 mod p or s is out of range.
Subspace invariant_subspace_of_dim(const AdaptedAction& action, std::size_t s);

// Every T-invariant subspace, sorted. Works by closing the set of cyclic
// submodules under sums, so cost grows with q^n and with the number of
// invariant subspaces; q^n above `max_ambient` is refused.
std::vector<Subspace> enumerate_invariant_subspaces(const AdaptedAction& action,
                                                    std::uint64_t max_ambient);

}  // namespace gonal
