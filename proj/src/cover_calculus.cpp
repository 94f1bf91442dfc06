#include "gonal/cover_calculus.hpp"

#include "gonal/errors.hpp"

namespace gonal {

BigInt genus_base(unsigned p, unsigned r) {
  if (r < 2) throw Error(ErrorKind::invalid_parameters, "r must be at least 2");
  return BigInt(p - 1) * (r - 2) / 2;
}

BigInt genus_homology_cover(const CoverParams& params) {
  return 1 + params.group_size() * (BigInt(params.g()) - 1);
}

BigInt genus_intermediate(const CoverParams& params) {
  return 1 + BigInt(params.q()) * (BigInt(params.g()) - 1);
}

BigInt genus_quotient_T(const CoverParams& params) {
  const BigInt num = (BigInt(params.n()) - 2) * (params.group_size() - 1);
  const BigInt den = 2 * BigInt(params.p());
  if (num % den != 0)
    throw Error(ErrorKind::invalid_parameters,
                "genus of T is not integral for " + params.label());
  return num / den;
}

BigInt prym_dim(const CoverParams& params) {
  return (BigInt(params.g()) - 1) * (params.q() - 1);
}

BigInt genus_quotient_by_core(const CoverParams& params, std::size_t core_dim) {
  if (core_dim > params.n())
    throw Error(ErrorKind::invalid_parameters,
                "core dimension " + std::to_string(core_dim) + " exceeds n = " + std::to_string(params.n()));
  const BigInt num = genus_homology_cover(params) - 1;
  const BigInt den = big_pow(params.q(), core_dim);
  if (num % den != 0)
    throw Error(ErrorKind::internal_inconsistency, "unramified Riemann-Hurwitz quotient not integral");
  return 1 + num / den;
}

CoverReport decomposition_report(const CoverParams& params) {
  CoverReport r{params};
  r.g = params.g();
  r.g_tilde = genus_homology_cover(params);
  r.g_Y = genus_intermediate(params);
  r.g_T = genus_quotient_T(params);
  r.prym_dim = prym_dim(params);
  r.m = params.m();
  r.t = params.t();
  r.s0 = params.s0();
  r.cone_points = params.r();
  for (std::size_t d = 0; d <= params.n(); d += params.s0())
    r.genus_Z[d] = genus_quotient_by_core(params, d);

  auto check = [&](std::string name, const BigInt& lhs, const BigInt& rhs, const std::string& form) {
    r.checks.push_back({std::move(name), lhs == rhs,
                        form + ": " + to_decimal(lhs) + " vs " + to_decimal(rhs)});
  };
  check("jacobian-decomposition", r.g_tilde, r.g + r.m * r.prym_dim, "g~ = g + m*dim P");
  check("prym-sum-equals-quotient", r.t * r.prym_dim, r.g_T, "t*dim P = g_T");
  check("orbit-count", r.t * params.p(), r.m, "t*p = m");
  check("quotient-by-trivial-core", genus_quotient_by_core(params, 0), r.g_tilde, "g(X~/1) = g~");
  check("quotient-by-full-group", genus_quotient_by_core(params, params.n()), r.g, "g(X~/N) = g");
  check("intermediate-riemann-hurwitz", r.g_Y - 1, BigInt(params.q()) * (r.g - 1), "g_Y - 1 = q(g - 1)");

  for (const auto& c : r.checks)
    if (!c.passed)
      throw Error(ErrorKind::verification_failure,
                  "identity " + c.name + " failed for " + params.label() + " (" + c.detail + ")");
  return r;
}

}  // namespace gonal
