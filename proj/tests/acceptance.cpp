// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "gonal/adapted_action.hpp"
#include "gonal/atlas.hpp"
#include "gonal/cover_calculus.hpp"
#include "gonal/errors.hpp"
#include "gonal/fixtures.hpp"
#include "gonal/groupring.hpp"
#include "gonal/rep_census.hpp"

using namespace gonal;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream note;

  void expect(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      note.str("");
      note << "first failure: " << what;
    }
  }
};

std::vector<CoverParams> sweep() {
  std::vector<CoverParams> out;
  for (unsigned p : {3u, 5u, 7u, 11u, 13u})
    for (unsigned q : {2u, 3u, 5u, 7u})
      for (unsigned r = 3; r <= 6; ++r) {
        try {
          out.push_back(CoverParams::make(p, q, r));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::invalid_parameters) throw;
        }
      }
  return out;
}

void worked_example(Outcome& o) {
  const auto params = fixtures::example_params();
  const auto action = build_action(params);
  const struct {
    const char* name;
    const char* core_order;
    const char* group;
    const char* genus;
  } expected[] = {
      {"L1", "1", "Z_3^12 ⋊ Z_13", "2657206"},
      {"L2", "27", "Z_3^9 ⋊ Z_13", "98416"},
      {"L3", "729", "Z_3^6 ⋊ Z_13", "3646"},
      {"L4", "19683", "Z_3^3 ⋊ Z_13", "136"},
  };
  for (const auto& want : expected) {
    const auto h = Hyperplane::from_subspace(parse_generator_words(*fixtures::builtin(want.name), params));
    const auto g = galois_closure(h, action);
    const auto order = to_decimal(big_pow(params.q(), g.core_dim));
    const auto genus = to_decimal(genus_quotient_by_core(params, g.core_dim));
    o.expect(order == want.core_order, std::string(want.name) + " core order " + order);
    o.expect(g.group == want.group, std::string(want.name) + " group " + g.group);
    o.expect(genus == want.genus, std::string(want.name) + " genus " + genus);
  }
  if (o.passed) o.note << "cores 1, 3^3, 3^6, 3^9; genera 2657206, 98416, 3646, 136";
}

void genus_identities(Outcome& o) {
  const auto all = sweep();
  for (const auto& params : all) {
    const BigInt g = params.g(), m = params.m(), t = params.t();
    const BigInt pd = prym_dim(params);
    o.expect(genus_homology_cover(params) == g + m * pd, params.label() + " g~ = g + m*dim P");
    o.expect(t * pd == genus_quotient_T(params), params.label() + " t*dim P = g_T");
  }
  if (o.passed) o.note << all.size() << " triples";
}

void five_two_example(Outcome& o) {
  const auto r = decomposition_report(CoverParams::make(5, 2, 3));
  o.expect(r.t == 3, "t = " + to_decimal(r.t));
  o.expect(r.prym_dim == 1, "dim P = " + to_decimal(r.prym_dim));
  o.expect(r.g_T == 3, "g_T = " + to_decimal(r.g_T));
  if (o.passed) o.note << "t = 3, dim P = 1, g_T = 3";
}

void counting_oracle(Outcome& o) {
  std::size_t cases = 0;
  for (Residue q : {2u, 3u})
    for (unsigned n = 1; n <= 6; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        const BigInt formula = gaussian_count(n, k, q);
        const auto found = enumerate_subgroups_brute(n, k, q).size();
        o.expect(formula == found, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " q=" +
                                       std::to_string(q) + ": " + to_decimal(formula) + " vs " +
                                       std::to_string(found));
        ++cases;
      }
  if (o.passed) o.note << cases << " (n, k, q) cases";
}

void orbit_structure(Outcome& o) {
  for (auto [p, q, r] : {std::tuple{3u, 2u, 4u}, std::tuple{5u, 2u, 3u}, std::tuple{13u, 3u, 3u}}) {
    const auto params = CoverParams::make(p, q, r);
    const auto action = build_action(params);
    const auto classes = orbit_classes(action);
    const std::string label = params.label();
    o.expect(classes.size() == params.t(), label + " class count " + std::to_string(classes.size()));
    const std::size_t bound = std::size_t{p - 1} * (r - 3);
    for (const auto& c : classes) {
      o.expect(c.members.size() == p, label + " orbit size " + std::to_string(c.members.size()));
      o.expect(c.core.is_invariant_under(action.matrix()), label + " core not invariant");
      o.expect(c.core_dim() % params.s0() == 0, label + " core dim " + std::to_string(c.core_dim()));
      o.expect(c.core_dim() >= bound, label + " core dim below bound");
    }
    o.note << label << ": " << classes.size() << " classes; ";
  }
}

void groupring_identity(Outcome& o) {
  for (auto [p, q, r] : {std::tuple{5u, 2u, 3u}, std::tuple{3u, 2u, 4u}}) {
    const auto params = CoverParams::make(p, q, r);
    const auto summary = verify_groupring(build_action(params));
    const std::string label = params.label();
    o.expect(summary.passed && summary.frobenius.passed, label + " verification");
    o.expect(summary.hyperplanes.size() == params.m(), label + " hyperplane count");
    for (const auto& row : summary.hyperplanes) {
      o.expect(row.scalar == 8, label + " scalar " + to_decimal(row.scalar));
      o.expect(row.cross_terms_vanish, label + " cross term survives");
    }
    o.note << label << ": scalar 8 on " << summary.hyperplanes.size() << " hyperplanes; ";
  }
}

void rep_census_check(Outcome& o) {
  const auto all = sweep();
  for (const auto& params : all) {
    const BigInt p = params.p(), qn = params.group_size();
    BigInt sum_sq = 0;
    for (const auto& c : complex_table(params).complex_reps) sum_sq += c.count * c.degree * c.degree;
    o.expect(sum_sq == p + p * p * ((qn - 1) / p) && sum_sq == p * qn, params.label() + " sum of squares");
  }
  for (auto [p, q, r] : {std::tuple{3u, 2u, 4u}, std::tuple{5u, 2u, 3u}}) {
    const auto params = CoverParams::make(p, q, r);
    BigInt proper = 0;
    for (const auto& rep : rational_table(params).rational_reps)
      if (rep.kernel != "G~" && rep.kernel != "N~") proper += rep.count;
    const auto classes = orbit_classes(build_action(params)).size();
    o.expect(proper == classes, params.label() + " rational count " + to_decimal(proper) + " vs " +
                                    std::to_string(classes) + " classes");
  }
  if (o.passed) o.note << "sum of squares on " << all.size() << " triples; rational counts match t";
}

void invariant_dichotomy(Outcome& o) {
  for (auto [p, q, r] : {std::tuple{3u, 2u, 4u}, std::tuple{5u, 2u, 3u}}) {
    const auto params = CoverParams::make(p, q, r);
    const auto action = build_action(params);
    std::set<std::size_t> found, allowed;
    for (unsigned k = 0; k <= params.n(); ++k) {
      for (const auto& v : enumerate_subgroups_brute(params.n(), k, q))
        if (v.is_invariant_under(action.matrix())) found.insert(k);
      if (k % params.s0() == 0) allowed.insert(k);
    }
    o.expect(found == allowed, params.label() + " invariant dimensions");
    for (auto s : allowed) {
      const auto v = invariant_subspace_of_dim(action, s);
      o.expect(v.dim() == s && v.is_invariant_under(action.matrix()),
               params.label() + " construction in dim " + std::to_string(s));
    }
    o.note << params.label() << ": dims";
    for (auto s : found) o.note << " " << s;
    o.note << "; ";
  }
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::optional<double> limit_seconds;
    std::function<void(Outcome&)> body;
  };
  const Criterion criteria[] = {
      {1, "worked example: cores, Galois groups, quotient genera", 10.0, worked_example},
      {2, "genus and dimension identities over the sweep", 5.0, genus_identities},
      {3, "p=5 q=2 r=3: three elliptic factors", std::nullopt, five_two_example},
      {4, "Gaussian counts vs brute-force enumeration", 60.0, counting_oracle},
      {5, "orbit structure and cores", 60.0, orbit_structure},
      {6, "group-ring scalar identity on every A_L", 30.0, groupring_identity},
      {7, "representation census", std::nullopt, rep_census_check},
      {8, "invariant-subspace dimensions", std::nullopt, invariant_dichotomy},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.note.str("");
      o.note << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds && seconds > *c.limit_seconds) {
      o.passed = false;
      o.note << " [over the " << *c.limit_seconds << "s limit]";
    }
    if (!o.passed) ++failures;
    std::printf("criterion %d %s: %s (%.2fs) %s\n", c.number, o.passed ? "PASS" : "FAIL", c.title, seconds,
                o.note.str().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
