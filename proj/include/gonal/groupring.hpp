#pragma once

// Exact checks of group-ring identities in the regular representation of
// G~ = Z_q^n ⋊ <Φ>, for groups small enough to tabulate.
//
// The identities are statements in the group ring Z[G~] restricted to the
// subspace A_L = {z : hz = z for h in L, sum_j n^j z = 0}. The regular
// module is faithful, so an identity that holds on A_L there holds for any
// module on which A_L is cut out by the same conditions.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gonal/adapted_action.hpp"
#include "gonal/atlas.hpp"
#include "gonal/bigint.hpp"

namespace gonal {

inline constexpr std::uint64_t kDefaultGroupCap = 512;

struct GroupElement {
  Vector translation;   // element of N~ = Z_q^n
  unsigned twist = 0;   // power of Φ
  bool operator==(const GroupElement&) const = default;
};

using ElementId = std::uint32_t;

/// G~ with a full multiplication table. Elements are numbered
/// twist * q^n + code(translation); id 0 is the identity and
/// (v, e)(w, f) = (v + T^e w, e + f).
class FrobeniusGroup {
 public:
  // Throws cap-exceeded when p q^n > cap, verification-failure if the
  // table fails the group axioms.
  static FrobeniusGroup build(const AdaptedAction& action, std::uint64_t cap = kDefaultGroupCap);

  const AdaptedAction& action() const { return action_; }
  std::size_t order() const { return order_; }
  std::size_t kernel_order() const { return kernel_order_; }

  ElementId id_of(const GroupElement& g) const;
  GroupElement element(ElementId id) const;
  ElementId translation(const Vector& v) const;
  ElementId phi_power(unsigned k) const;
  bool in_kernel(ElementId g) const { return g < kernel_order_; }

  ElementId multiply(ElementId a, ElementId b) const { return table_[std::size_t{a} * order_ + b]; }
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  unsigned element_order(ElementId a) const;

 private:
  explicit FrobeniusGroup(const AdaptedAction& action);
  AdaptedAction action_;
  std::size_t kernel_order_ = 0;
  std::size_t order_ = 0;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
};

struct FrobeniusReport {
  bool passed = false;
  std::size_t group_order = 0;
  std::size_t elements_outside_kernel = 0;  // all of order p when passed
  bool centralizer_trivial = false;
  std::size_t nontrivial_kernel_elements = 0;
  std::size_t conjugation_orbits = 0;
  bool all_orbits_size_p = false;
  bool no_commuting_pairs = false;
  std::string counterexample;
};

FrobeniusReport frobenius_check(const FrobeniusGroup& group);

// Vector in the regular module, coordinates indexed by ElementId. The
// module is over Q; vectors are kept scaled to primitive integer form.
using RegularVector = std::vector<BigInt>;

/// Finite integer combination of group elements acting on the left.
class GroupRingOperator {
 public:
  GroupRingOperator() = default;
  static GroupRingOperator element(ElementId g, BigInt coefficient = 1);
  // Sum of the listed elements, each with coefficient 1.
  static GroupRingOperator sum_of(const std::vector<ElementId>& elements);

  const std::map<ElementId, BigInt>& terms() const { return terms_; }
  void add(ElementId g, const BigInt& c);

  // this ∘ rhs, i.e. the group-ring product (this)(rhs).
  GroupRingOperator compose(const GroupRingOperator& rhs, const FrobeniusGroup& group) const;
  RegularVector apply(const RegularVector& z, const FrobeniusGroup& group) const;

 private:
  std::map<ElementId, BigInt> terms_;
};

// g·z, permuting coordinates: (g z)[g x] = z[x].
RegularVector act(const FrobeniusGroup& group, ElementId g, const RegularVector& z);

struct FixedSubspace {
  Hyperplane hyperplane;
  Vector transversal;
  std::vector<RegularVector> basis;
  // Reduced row-echelon form over Q, as numerator/denominator strings per
  // entry; equal subspaces have equal canonical forms.
  std::vector<std::vector<std::string>> canonical;
  std::size_t dim() const { return basis.size(); }
};

// Basis of A_L for the hyperplane kernel L and the transversal generator n.
// Throws invalid-parameters if n lies in L.
FixedSubspace fixed_subspace(const FrobeniusGroup& group, const Hyperplane& h,
                             const Vector& transversal);
// Same, with the first unit vector outside L as transversal.
FixedSubspace fixed_subspace(const FrobeniusGroup& group, const Hyperplane& h);

// Checks (sum_{h in L} h)(sum_k Φ^k) z = q^(n-1) z for every basis vector
// and returns q^(n-1). Throws verification-failure with a witness otherwise.
BigInt verify_averaging_scalar(const FrobeniusGroup& group, const FixedSubspace& fixed);

struct CrossTermReport {
  // k = 0: (sum_{h in L} h) z = |L| z on every basis vector.
  bool k0_scalar = false;
  BigInt k0_factor;
  // k = 1..p-1: (sum_{h in L} h) Φ^k z = 0.
  std::vector<unsigned> annihilating_k;
  bool passed = false;
};

// Throws verification-failure with a witness if a cross term survives.
CrossTermReport verify_cross_terms(const FrobeniusGroup& group, const FixedSubspace& fixed);

struct HyperplaneVerification {
  Hyperplane hyperplane;
  std::size_t orbit_index = 0;
  std::size_t fixed_dim = 0;
  BigInt scalar;
  bool cross_terms_vanish = false;
  bool transversal_independent = false;
};

struct GroupRingSummary {
  CoverParams params;
  std::size_t group_order = 0;
  FrobeniusReport frobenius;
  std::vector<HyperplaneVerification> hyperplanes;
  BigInt expected_scalar;   // q^(n-1)
  BigInt composite_scalar;  // q^n, the product over all orbit classes
  bool dims_constant_on_orbits = false;
  bool passed = false;
};

struct GroupRingOptions {
  std::uint64_t cap = kDefaultGroupCap;
  unsigned threads = 0;
  // Recompute A_L for every transversal outside L and compare.
  bool check_transversals = true;
};

// Every hyperplane of every orbit. Throws verification-failure on the first
// failing identity.
GroupRingSummary verify_groupring(const AdaptedAction& action, const GroupRingOptions& options = {});

}  // namespace gonal
