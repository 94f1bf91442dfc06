#pragma once

// Census of irreducible representations of G~ = Z_q^n ⋊ Z_p by label,
// degree, count and kernel. No characters or matrices are materialized.

#include <string>
#include <vector>

#include "gonal/atlas.hpp"
#include "gonal/bigint.hpp"
#include "gonal/cover_calculus.hpp"
#include "gonal/params.hpp"

namespace gonal {

struct ComplexRep {
  std::string label;
  BigInt degree;
  BigInt count;
  std::string kernel;
};

struct RationalRep {
  std::string label;
  BigInt degree;
  BigInt count;
  std::string kernel;
  // Factor of the isotypical decomposition G~ acts on through this rep.
  std::string factor;
  BigInt factor_dim;
};

// Permutation representation on cosets of a subgroup, by constituents.
struct CosetDecomposition {
  std::string subgroup;
  BigInt index;
  std::vector<std::string> constituents;
  BigInt constituent_degree;
};

struct RepTable {
  CoverParams params;
  std::vector<ComplexRep> complex_reps;
  std::vector<RationalRep> rational_reps;
  std::vector<CosetDecomposition> coset_decompositions;
  std::vector<IdentityCheck> checks;
};

// chi_0..chi_{p-1} and the (q^n - 1)/p induced reps of degree p.
RepTable complex_table(const CoverParams& params);
// chi_0, U, and t reps U_j of degree p(q-1).
RepTable rational_table(const CoverParams& params);
// Both tables, the coset decompositions, and all consistency checks.
// Throws verification-failure if a check fails.
RepTable rep_census(const CoverParams& params);

struct IsotypicalFactor {
  std::string name;
  std::string representation;
  BigInt dim;
  BigInt multiplicity;
};

struct IsotypicalReport {
  CoverParams params;
  std::vector<IsotypicalFactor> factors;
  BigInt total_dim;
  BigInt g_tilde;
};

// JX ⊕ t copies of P(Y_j/X)^p; throws verification-failure unless the
// dimensions add up to the genus of X~.
IsotypicalReport isotypical_report(const CoverParams& params);

struct InducedKernel {
  std::size_t kernel_dim = 0;
  BigInt kernel_size;
  std::string label;
};

// The induced degree-p representation attached to an orbit has the orbit's
// core as kernel.
InducedKernel induced_rep_kernel(const CoverParams& params, const OrbitClass& orbit);

}  // namespace gonal
