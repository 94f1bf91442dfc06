#include <optional>

#include "doctest.h"
#include "gonal/cover_calculus.hpp"
#include "gonal/errors.hpp"

using namespace gonal;

namespace {

std::vector<CoverParams> sweep() {
  std::vector<CoverParams> out;
  for (unsigned p : {3u, 5u, 7u, 11u, 13u})
    for (unsigned q : {2u, 3u, 5u, 7u})
      for (unsigned r = 3; r <= 6; ++r) {
        try {
          out.push_back(CoverParams::make(p, q, r));
        } catch (const Error& e) {
          REQUIRE(e.kind() == ErrorKind::invalid_parameters);
        }
      }
  return out;
}

}  // namespace

TEST_CASE("base genus") {
  CHECK(genus_base(13, 3) == 6);
  CHECK(genus_base(5, 3) == 2);
  CHECK(genus_base(3, 4) == 2);
}

TEST_CASE("genus of the homology cover") {
  CHECK(genus_homology_cover(CoverParams::make(13, 3, 3)) == 2657206);
  CHECK(genus_homology_cover(CoverParams::make(5, 2, 3)) == 17);
  CHECK(genus_homology_cover(CoverParams::make(3, 2, 3, true)) == 1);
}

TEST_CASE("intermediate genus") {
  CHECK(genus_intermediate(CoverParams::make(13, 3, 3)) == 16);
  CHECK(genus_intermediate(CoverParams::make(5, 2, 3)) == 3);
  CHECK(genus_intermediate(CoverParams::make(3, 2, 4)) == 3);
}

TEST_CASE("genus of the quotient by the lifted automorphism") {
  CHECK(genus_quotient_T(CoverParams::make(5, 2, 3)) == 3);
  CHECK(genus_quotient_T(CoverParams::make(13, 3, 3)) == 204400);
  CHECK(genus_quotient_T(CoverParams::make(3, 2, 4)) == 5);
}

TEST_CASE("prym dimension") {
  CHECK(prym_dim(CoverParams::make(5, 2, 3)) == 1);
  CHECK(prym_dim(CoverParams::make(13, 3, 3)) == 10);
  CHECK(prym_dim(CoverParams::make(3, 5, 3, true)) == 0);
}

TEST_CASE("genus of quotients by cores") {
  const auto params = CoverParams::make(13, 3, 3);
  CHECK(genus_quotient_by_core(params, 0) == 2657206);
  CHECK(genus_quotient_by_core(params, 3) == 98416);
  CHECK(genus_quotient_by_core(params, 6) == 3646);
  CHECK(genus_quotient_by_core(params, 9) == 136);
  CHECK(genus_quotient_by_core(params, 12) == 6);
  CHECK_THROWS_AS(genus_quotient_by_core(params, 13), Error);
}

TEST_CASE("decomposition reports") {
  const auto small = decomposition_report(CoverParams::make(5, 2, 3));
  CHECK(small.t == 3);
  CHECK(small.prym_dim == 1);
  CHECK(small.g_T == 3);
  CHECK(small.g_tilde == 17);
  CHECK(small.cone_points == 3);
  CHECK(small.genus_Z.size() == 2);  // only {0} and the full group are invariant

  const auto example = decomposition_report(CoverParams::make(13, 3, 3));
  CHECK(example.t * example.prym_dim == 204400);
  CHECK(example.g_T == 204400);
  CHECK(example.genus_Z.size() == 5);

  const auto two_blocks = decomposition_report(CoverParams::make(3, 2, 4));
  CHECK(two_blocks.m * two_blocks.prym_dim + two_blocks.g == 17);
  CHECK(two_blocks.g_tilde == 17);

  for (const auto& c : example.checks) CHECK(c.passed);
}

TEST_CASE("dimension identities across the sweep") {
  const auto all = sweep();
  CHECK(all.size() == 62);
  for (const auto& params : all) {
    CAPTURE(params.label());
    const auto r = decomposition_report(params);
    CHECK(r.g_tilde == r.g + r.m * r.prym_dim);
    CHECK(r.t * r.prym_dim == r.g_T);
    CHECK(genus_quotient_by_core(params, 0) == r.g_tilde);
    CHECK(genus_quotient_by_core(params, params.n()) == r.g);
    for (const auto& [dim, genus] : r.genus_Z) {
      CHECK(dim % params.s0() == 0);
      CHECK((genus - 1) * big_pow(params.q(), dim) == r.g_tilde - 1);
    }
  }
}
