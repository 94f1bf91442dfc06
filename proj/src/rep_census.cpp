#include "gonal/rep_census.hpp"

#include "gonal/errors.hpp"

namespace gonal {

namespace {

void fail_on_bad_checks(const std::vector<IdentityCheck>& checks, const CoverParams& params) {
  for (const auto& c : checks)
    if (!c.passed)
      throw Error(ErrorKind::verification_failure,
                  "representation check " + c.name + " failed for " + params.label() + " (" +
                      c.detail + ")");
}

IdentityCheck equality(std::string name, const BigInt& lhs, const BigInt& rhs, const std::string& form) {
  return {std::move(name), lhs == rhs, form + ": " + to_decimal(lhs) + " vs " + to_decimal(rhs)};
}

}  // namespace

RepTable complex_table(const CoverParams& params) {
  RepTable t{params};
  const BigInt p = params.p();
  t.complex_reps.push_back({"chi_0", 1, 1, "G~"});
  t.complex_reps.push_back({"chi_j", 1, p - 1, "N~"});
  t.complex_reps.push_back({"V~_j", p, (params.group_size() - 1) / p, "core of ker V_j"});

  BigInt sum_sq = 0, order = p * params.group_size();
  for (const auto& r : t.complex_reps) sum_sq += r.count * r.degree * r.degree;
  t.checks.push_back(equality("sum-of-squares", sum_sq, order, "sum deg^2 = |G~|"));
  return t;
}

RepTable rational_table(const CoverParams& params) {
  RepTable t{params};
  const BigInt p = params.p(), q = params.q();
  const BigInt pd = prym_dim(params);
  t.rational_reps.push_back({"chi_0", 1, 1, "G~", "JX (trivial part)", BigInt(params.g())});
  t.rational_reps.push_back({"U", p - 1, 1, "N~", "JX", BigInt(params.g())});
  t.rational_reps.push_back({"U_j", p * (q - 1), params.t(), "core of L~_j", "P(Y_j/X)^p", p * pd});
  return t;
}

RepTable rep_census(const CoverParams& params) {
  RepTable t = complex_table(params);
  t.rational_reps = rational_table(params).rational_reps;
  const BigInt p = params.p(), q = params.q(), qn = params.group_size();

  t.coset_decompositions.push_back({"N~", p, {"chi_0", "U"}, 1 + (p - 1)});
  t.coset_decompositions.push_back({"L~_j", p * q, {"chi_0", "U", "U_j"}, 1 + (p - 1) + p * (q - 1)});
  for (const auto& d : t.coset_decompositions)
    t.checks.push_back(equality("coset-rep-" + d.subgroup, d.constituent_degree, d.index,
                                "constituent degrees = index"));

  BigInt rational_degree_sum = 0, complex_degree_sum = 0;
  for (const auto& r : t.rational_reps) rational_degree_sum += r.count * r.degree;
  for (const auto& r : t.complex_reps) complex_degree_sum += r.count * r.degree;
  t.checks.push_back(equality("rational-degree-accounting", rational_degree_sum, p + qn - 1,
                              "1 + (p-1) + t*p(q-1) = p + q^n - 1"));
  t.checks.push_back(equality("complex-degree-accounting", complex_degree_sum, p + qn - 1,
                              "p + p*(q^n-1)/p = p + q^n - 1"));
  // Each U_j bundles q-1 Galois conjugate induced reps.
  t.checks.push_back(equality("induced-count-consistency", params.t() * (q - 1), (qn - 1) / p,
                              "t*(q-1) = (q^n-1)/p"));
  t.checks.push_back(equality("complex-constituent-count", 1 + (p - 1) + params.t() * (q - 1),
                              p + (qn - 1) / p, "1 + (p-1) + t(q-1) = p + (q^n-1)/p"));
  fail_on_bad_checks(t.checks, params);
  return t;
}

IsotypicalReport isotypical_report(const CoverParams& params) {
  IsotypicalReport r{params};
  const BigInt pd = prym_dim(params);
  r.factors.push_back({"JX", "U", BigInt(params.g()), 1});
  r.factors.push_back({"P(Y_j/X)^p", "U_j", BigInt(params.p()) * pd, params.t()});
  r.total_dim = 0;
  for (const auto& f : r.factors) r.total_dim += f.dim * f.multiplicity;
  r.g_tilde = genus_homology_cover(params);
  const std::vector<IdentityCheck> checks{
      equality("isotypical-dimension", r.total_dim, r.g_tilde, "g + t*p*dim P = g~"),
      equality("orbit-grouping", params.m() * pd, params.t() * params.p() * pd,
               "m*dim P = t*p*dim P")};
  fail_on_bad_checks(checks, params);
  return r;
}

InducedKernel induced_rep_kernel(const CoverParams& params, const OrbitClass& orbit) {
  InducedKernel k;
  k.kernel_dim = orbit.core_dim();
  k.kernel_size = big_pow(params.q(), k.kernel_dim);
  k.label = "V~ induced from a character with kernel " + format_vector(orbit.representative.normal()) + "^perp";
  return k;
}

}  // namespace gonal
