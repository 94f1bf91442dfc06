#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "gonal/atlas.hpp"
#include "gonal/errors.hpp"
#include "gonal/fixtures.hpp"

using namespace gonal;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::internal_inconsistency;
}

std::string fixture_file(const std::string& name) {
  std::ifstream in(std::string(GONAL_FIXTURE_DIR) + "/" + name + ".gens");
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Hyperplane fixture_hyperplane(const std::string& name, const CoverParams& params) {
  return Hyperplane::from_subspace(parse_generator_words(fixture_file(name), params));
}

}  // namespace

TEST_CASE("hyperplane counts") {
  CHECK(enumerate_hyperplanes(CoverParams::make(3, 2, 4)).size() == 15);
  CHECK(enumerate_hyperplanes(CoverParams::make(5, 2, 3)).size() == 15);
  std::size_t count = 0;
  for_each_hyperplane(CoverParams::make(13, 3, 3), kDefaultEnumerationCap, [&](const Hyperplane&) { ++count; });
  CHECK(count == 265720);

  const auto big = CoverParams::make(13, 3, 4);
  CHECK(kind_of([&] { enumerate_hyperplanes(big); }) == ErrorKind::cap_exceeded);
  try {
    enumerate_hyperplanes(big);
  } catch (const CapExceeded& e) {
    CHECK(e.required() == "282429536481");
    CHECK(e.cap() == kDefaultEnumerationCap);
  }
}

TEST_CASE("hyperplanes are listed in lexicographic order with leading one") {
  const auto hs = enumerate_hyperplanes(CoverParams::make(5, 3, 3));
  CHECK(hs.size() == 40);
  CHECK(std::is_sorted(hs.begin(), hs.end()));
  for (const auto& h : hs) {
    auto lead = std::find_if(h.normal().begin(), h.normal().end(), [](Residue x) { return x != 0; });
    CHECK(*lead == 1);
    CHECK(h.kernel().dim() == 3);
  }
}

TEST_CASE("Hyperplane construction") {
  const auto h = Hyperplane::from_normal({0, 2, 1}, 3);
  CHECK(h.normal() == Vector{0, 1, 2});
  CHECK(h.contains({1, 1, 1}));
  CHECK(Hyperplane::from_subspace(h.kernel()) == h);
  CHECK(kind_of([] { Hyperplane::from_subspace(Subspace::full(2, 4)); }) == ErrorKind::invalid_parameters);
  CHECK(kind_of([] { Hyperplane::from_subspace(Subspace::zero(2, 4)); }) == ErrorKind::invalid_parameters);
  CHECK_THROWS_AS(Hyperplane::from_normal({0, 0}, 3), Error);
}

TEST_CASE("conjugation") {
  const auto params = CoverParams::make(3, 2, 4);
  const auto action = build_action(params);

  SUBCASE("orbit of the first coordinate functional has 3 members") {
    const auto h = Hyperplane::from_normal({1, 0, 0, 0}, 2);
    const auto orbit = hyperplane_orbit(h, action);
    CHECK(orbit.size() == 3);
    CHECK(std::set<Hyperplane>(orbit.begin(), orbit.end()).size() == 3);
  }

  SUBCASE("p applications return to the start") {
    for (const auto& h : enumerate_hyperplanes(params)) {
      Hyperplane g = h;
      for (unsigned k = 0; k < params.p(); ++k) g = conjugate_hyperplane(g, action);
      CHECK(g == h);
    }
  }

  SUBCASE("the conjugate's kernel is T applied to the kernel") {
    for (auto [p, q, r] : {std::tuple{3u, 2u, 4u}, std::tuple{5u, 2u, 3u}, std::tuple{5u, 3u, 3u}}) {
      const auto a = build_action(CoverParams::make(p, q, r));
      for (const auto& h : enumerate_hyperplanes(a.params())) {
        CHECK(conjugate_hyperplane(h, a).kernel() == h.kernel().image(a.matrix()));
        CHECK(conjugate_hyperplane(h, a, Conjugation::opposite).kernel() == h.kernel().image(a.inverse()));
      }
    }
  }

  SUBCASE("both conventions give the same classes and cores") {
    for (auto [p, q, r] : {std::tuple{3u, 2u, 4u}, std::tuple{5u, 2u, 3u}, std::tuple{7u, 2u, 3u}}) {
      const auto a = build_action(CoverParams::make(p, q, r));
      AtlasOptions left, right;
      right.convention = Conjugation::opposite;
      const auto x = orbit_classes(a, left), y = orbit_classes(a, right);
      REQUIRE(x.size() == y.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(x[i].representative == y[i].representative);
        CHECK(x[i].core == y[i].core);
        std::set<Hyperplane> mx(x[i].members.begin(), x[i].members.end());
        std::set<Hyperplane> my(y[i].members.begin(), y[i].members.end());
        CHECK(mx == my);
      }
    }
  }

  SUBCASE("a hyperplane with invariant kernel is its own conjugate") {
    // gcd(3, 7 - 1) = 3: the companion block of x^2+x+1 has eigenvalues 2, 4 in F_7.
    const auto a = build_action(CoverParams::make_unrestricted(3, 7, 3));
    std::size_t fixed = 0;
    for (const auto& h : enumerate_hyperplanes(a.params()))
      if (conjugate_hyperplane(h, a) == h) {
        ++fixed;
        CHECK(h.kernel().is_invariant_under(a.matrix()));
        CHECK(kind_of([&] { galois_closure(h, a); }) == ErrorKind::invariant_hyperplane);
      }
    CHECK(fixed == 2);
  }
}

TEST_CASE("orbit_classes counts") {
  CHECK(orbit_classes(build_action(CoverParams::make(5, 2, 3))).size() == 3);
  CHECK(orbit_classes(build_action(CoverParams::make(3, 2, 4))).size() == 5);
  const auto big = build_action(CoverParams::make(13, 3, 4));
  CHECK(kind_of([&] { orbit_classes(big); }) == ErrorKind::cap_exceeded);
}

TEST_CASE("orbit classification of the worked example") {
  const auto params = fixtures::example_params();
  const auto action = build_action(params);
  const auto classes = orbit_classes(action);
  CHECK(classes.size() == 20440);
  std::map<std::size_t, std::size_t> by_dim;
  std::size_t members = 0;
  for (const auto& c : classes) {
    members += c.members.size();
    ++by_dim[c.core_dim()];
    CHECK(c.members.size() == 13);
    CHECK(c.core_dim() % 3 == 0);
    CHECK(c.representative == c.members.front());
    CHECK(c.representative == *std::min_element(c.members.begin(), c.members.end()));
  }
  CHECK(members == 265720);
  CHECK(std::is_sorted(classes.begin(), classes.end(),
                       [](const OrbitClass& a, const OrbitClass& b) { return a.representative < b.representative; }));
  // Cores are intersections of invariant hyperplane kernels; every dimension 0, 3, 6, 9 occurs.
  CHECK(by_dim.size() == 4);
  CHECK(by_dim.count(0) == 1);
  CHECK(by_dim.count(9) == 1);
}

TEST_CASE("orbit structure for small parameters") {
  for (auto [p, q, r] : {std::tuple{3u, 2u, 3u}, std::tuple{3u, 2u, 4u}, std::tuple{3u, 2u, 5u},
                         std::tuple{5u, 2u, 3u}, std::tuple{5u, 3u, 3u}, std::tuple{7u, 2u, 3u},
                         std::tuple{3u, 5u, 4u}}) {
    const auto params = CoverParams::make(p, q, r, true);
    const auto action = build_action(params);
    const auto classes = orbit_classes(action);
    CAPTURE(params.label());
    CHECK(classes.size() == params.t());
    std::size_t members = 0;
    for (const auto& c : classes) {
      members += c.members.size();
      CHECK(c.members.size() == p);
      CHECK(c.core.is_invariant_under(action.matrix()));
      CHECK(c.core_dim() % params.s0() == 0);
      CHECK(c.core_dim() >= std::size_t{p - 1} * (r - 3));
      CHECK(c.core == core(c.representative, action));
      for (const auto& h : c.members) CHECK(core(h, action) == c.core);
    }
    CHECK(members == params.m());
  }
}

TEST_CASE("every core for (3,2,4) is a plane") {
  const auto action = build_action(CoverParams::make(3, 2, 4));
  for (const auto& h : enumerate_hyperplanes(action.params())) {
    CHECK(core(h, action).dim() == 2);
    const auto g = galois_closure(h, action);
    CHECK(g.group == "Z_2^2 ⋊ Z_3");
    CHECK(g.group_order == 12);
  }
}

TEST_CASE("orbit_classes is deterministic and independent of threads") {
  const auto action = build_action(CoverParams::make(3, 2, 8));
  AtlasOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const auto a = orbit_classes(action, one), b = orbit_classes(action, many), c = orbit_classes(action, many);
  REQUIRE(a.size() == b.size());
  REQUIRE(b.size() == c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].members == b[i].members);
    CHECK(a[i].core == b[i].core);
    CHECK(b[i].members == c[i].members);
  }
}

TEST_CASE("gaussian_count") {
  CHECK(gaussian_count(5, 0, 3) == 1);
  CHECK(gaussian_count(4, 1, 2) == 15);
  CHECK(gaussian_count(4, 2, 2) == 35);
  CHECK(gaussian_count(4, 1, 3) == 40);
  CHECK(gaussian_count(12, 11, 3) == 265720);
  CHECK(gaussian_count(3, 4, 2) == 0);
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned k = 0; k <= n; ++k) CHECK(gaussian_count(n, k, 5) == gaussian_count(n, n - k, 5));
}

TEST_CASE("enumerate_subgroups_brute") {
  const auto full = enumerate_subgroups_brute(4, 4, 2);
  REQUIRE(full.size() == 1);
  CHECK(full[0] == Subspace::full(2, 4));
  CHECK(enumerate_subgroups_brute(4, 2, 2).size() == 35);
  CHECK(enumerate_subgroups_brute(4, 1, 3).size() == 40);
  CHECK(enumerate_subgroups_brute(4, 0, 3).size() == 1);
  CHECK(kind_of([] { enumerate_subgroups_brute(10, 2, 3, 1000); }) == ErrorKind::cap_exceeded);
}

TEST_CASE("Gaussian counts agree with brute force for n <= 6") {
  for (Residue q : {2u, 3u})
    for (unsigned n = 1; n <= 6; ++n) {
      const auto levels = n;
      for (unsigned k = 0; k <= levels; ++k) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(gaussian_count(n, k, q) == enumerate_subgroups_brute(n, k, q).size());
      }
    }
}

TEST_CASE("hyperplane count duality") {
  for (auto [p, q, r] : {std::tuple{3u, 2u, 4u}, std::tuple{5u, 2u, 3u}, std::tuple{13u, 3u, 3u},
                         std::tuple{5u, 3u, 4u}}) {
    const auto params = CoverParams::make(p, q, r);
    const auto n = static_cast<unsigned>(params.n());
    CHECK(params.m() == gaussian_count(n, n - 1, q));
    CHECK(params.m() == gaussian_count(n, 1, q));
  }
}

TEST_CASE("generator words") {
  const auto params = fixtures::example_params();
  Vector e1(12, 0), w(12, 0);
  e1[0] = 1;
  CHECK(parse_word("a_1", params) == e1);
  w[8] = 1;
  w[11] = 2;
  CHECK(parse_word("a_9 a_12^2", params) == w);
  CHECK(parse_word("a_{9}*a12^{2}", params) == w);
  CHECK(parse_word("a_13", params) == Vector(12, 2));
  CHECK(parse_word("a_13^-1", params) == Vector(12, 1));
  CHECK(parse_word("a_1 a_1 a_1", params) == Vector(12, 0));

  for (const char* bad : {"", "b_1", "a_0", "a_14", "a_1^", "a_", "a_1 ^2x"})
    CHECK(kind_of([&] { parse_word(bad, params); }) == ErrorKind::parse_error);

  // a_{jp} closes block j, so for r = 4 index 26 is the last symbol.
  const auto two_blocks = CoverParams::make(13, 3, 4);
  Vector closing(24, 0);
  for (std::size_t i = 12; i < 24; ++i) closing[i] = 2;
  CHECK(parse_word("a_26", two_blocks) == closing);
  CHECK(kind_of([&] { parse_word("a_27", two_blocks); }) == ErrorKind::parse_error);
}

TEST_CASE("fixture parsing reports the failing line") {
  const auto params = fixtures::example_params();
  try {
    parse_generator_words("# header\na_1\na_2 a_x\n", params);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse_error);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(parse_generator_words("# only a comment\n\n", params).dim() == 0);
}

TEST_CASE("worked example fixtures") {
  const auto params = fixtures::example_params();
  const auto action = build_action(params);
  const std::pair<const char*, std::size_t> expected[] = {{"L1", 0}, {"L2", 3}, {"L3", 6}, {"L4", 9}};
  const char* groups[] = {"Z_3^12 ⋊ Z_13", "Z_3^9 ⋊ Z_13", "Z_3^6 ⋊ Z_13", "Z_3^3 ⋊ Z_13"};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto [name, dim] = expected[i];
    CAPTURE(name);
    const auto h = fixture_hyperplane(name, params);
    CHECK(h.kernel().dim() == 11);
    const auto c = core(h, action);
    CHECK(c.dim() == dim);
    CHECK(c.dim() >= std::size_t{params.p() - 1} * (params.r() - 3));
    const auto g = galois_closure(h, action);
    CHECK(g.core_dim == dim);
    CHECK(g.group == groups[i]);
    CHECK_FALSE(g.is_composite_galois);
    CHECK(g.order_congruence);
    // The embedded copy matches the file.
    CHECK(std::string(*fixtures::builtin(name)) == fixture_file(name));
  }
  for (const auto& [l, k] : {std::pair{"L2", "K2"}, std::pair{"L3", "K3"}, std::pair{"L4", "K4"}}) {
    const auto listed = parse_generator_words(fixture_file(k), params);
    CHECK(listed == core(fixture_hyperplane(l, params), action));
    CHECK(listed.is_invariant_under(action.matrix()));
  }
  CHECK_FALSE(fixtures::builtin("L9").has_value());
}

TEST_CASE("galois_closure rejects a hyperplane from another space") {
  const auto action = build_action(CoverParams::make(5, 2, 3));
  CHECK(kind_of([&] { galois_closure(Hyperplane::from_normal({1, 0, 0}, 2), action); }) ==
        ErrorKind::ambient_mismatch);
}
