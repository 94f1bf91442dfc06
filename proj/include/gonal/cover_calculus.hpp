#pragma once

// Exact genus and dimension bookkeeping for the tower
//   X~ (q-homology cover) -> Y_j -> X -> P^1,   X~ -> T = X~/<Φ>.

#include <map>
#include <string>
#include <vector>

#include "gonal/bigint.hpp"
#include "gonal/params.hpp"

namespace gonal {

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

BigInt genus_base(unsigned p, unsigned r);
// 1 + q^(2g) (g - 1)
BigInt genus_homology_cover(const CoverParams& params);
// 1 + q (g - 1), genus of each Y_j
BigInt genus_intermediate(const CoverParams& params);
// ((p-1)(r-2) - 2)(q^((p-1)(r-2)) - 1) / (2p); throws invalid-parameters if
// the division is not exact.
BigInt genus_quotient_T(const CoverParams& params);
// (g - 1)(q - 1)
BigInt prym_dim(const CoverParams& params);
// Genus of X~/K for a subgroup K of order q^core_dim, which acts freely.
BigInt genus_quotient_by_core(const CoverParams& params, std::size_t core_dim);

struct CoverReport {
  CoverParams params;
  BigInt g, g_tilde, g_Y, g_T, prym_dim, m, t;
  unsigned s0 = 0;
  unsigned cone_points = 0;  // r cone points of order p on T
  // Genus of X~/K keyed by dim K, for every dim K that a Φ-invariant K can have.
  std::map<std::size_t, BigInt> genus_Z;
  std::vector<IdentityCheck> checks;
};

// Throws verification-failure if any identity fails.
CoverReport decomposition_report(const CoverParams& params);

}  // namespace gonal
