#include "gonal/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "gonal/adapted_action.hpp"
#include "gonal/cover_calculus.hpp"
#include "gonal/fixtures.hpp"
#include "gonal/groupring.hpp"
#include "gonal/rep_census.hpp"

namespace gonal::cli {

using report::CheckLine;
using report::Json;
using report::ReportEnvelope;

namespace {

std::string big(const BigInt& v) { return to_decimal(v); }

report::ParamTriple triple(const CoverParams& params) {
  return {params.p(), params.q(), params.r()};
}

CheckLine line(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed ? "pass" : "fail", std::move(detail)};
}

void append_checks(ReportEnvelope& env, const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks) env.checks.push_back(line(c.name, c.passed, c.detail));
}

std::string vector_text(const Vector& v) { return format_vector(v); }

Json vectors_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_text(v));
  return out;
}

std::string read_subgroup_source(const std::string& source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    const auto name = source.substr(prefix.size());
    if (auto text = fixtures::builtin(name)) return std::string(*text);
    throw Error(ErrorKind::invalid_parameters, "no builtin fixture named " + name);
  }
  std::ifstream in(source);
  if (!in) throw Error(ErrorKind::invalid_parameters, "cannot read subgroup file " + source);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs one verification step; verification failures turn into fail lines,
// bad input and caps still propagate.
void guarded(ReportEnvelope& env, const std::string& name,
             const std::function<std::pair<bool, std::string>()>& step) {
  try {
    auto [ok, detail] = step();
    env.checks.push_back(line(name, ok, detail));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::verification_failure && e.kind() != ErrorKind::internal_inconsistency)
      throw;
    env.checks.push_back(line(name, false, e.what()));
  }
}

std::vector<CoverParams> sweep_params() {
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

// Numbers of the worked example, per fixture: core dim, Galois kernel rank,
// genus of the quotient by the core.
struct FixtureExpectation {
  const char* subgroup;
  const char* core_generators;  // nullptr when the core is trivial
  std::size_t core_dim;
  std::size_t k;
  const char* quotient_genus;
};

constexpr FixtureExpectation kExample[] = {
    {"L1", nullptr, 0, 12, "2657206"},
    {"L2", "K2", 3, 9, "98416"},
    {"L3", "K3", 6, 6, "3646"},
    {"L4", "K4", 9, 3, "136"},
};

void suite_groupring(ReportEnvelope& env, const VerifyRequest& request) {
  Json rows = Json::array();
  for (auto [p, q, r] : {std::tuple{5u, 2u, 3u}, std::tuple{3u, 2u, 4u}}) {
    const auto params = CoverParams::make(p, q, r);
    const auto action = build_action(params);
    GroupRingOptions options;
    if (request.cap) options.cap = *request.cap;
    options.threads = request.threads;
    const std::string tag = " " + params.label();
    std::optional<GroupRingSummary> result;
    guarded(env, "groupring" + tag, [&] {
      result = verify_groupring(action, options);
      return std::pair{result->passed, std::to_string(result->hyperplanes.size()) + " hyperplanes"};
    });
    if (!result) continue;
    const auto& summary = *result;

    std::set<std::string> scalars;
    std::set<std::size_t> dims;
    bool cross = true, transversal = true;
    for (const auto& h : summary.hyperplanes) {
      scalars.insert(big(h.scalar));
      dims.insert(h.fixed_dim);
      cross = cross && h.cross_terms_vanish;
      transversal = transversal && h.transversal_independent;
    }
    const bool scalar_ok = scalars.size() == 1 && *scalars.begin() == big(summary.expected_scalar);
    env.checks.push_back(line("groupring-frobenius" + tag, summary.frobenius.passed,
                              "order " + std::to_string(summary.group_order)));
    env.checks.push_back(line("groupring-scalar" + tag, scalar_ok,
                              "scalar " + big(summary.expected_scalar) + " = q^(n-1) on every A_L"));
    env.checks.push_back(line("groupring-cross-terms" + tag, cross, "k = 1..p-1 annihilate A_L"));
    env.checks.push_back(line("groupring-transversal" + tag, transversal));
    env.checks.push_back(line("groupring-orbit-dims" + tag, summary.dims_constant_on_orbits));

    Json fixed_dims = Json::array();
    for (auto d : dims) fixed_dims.push_back(d);
    rows.push_back({{"params", params.label()},
                    {"group_order", summary.group_order},
                    {"hyperplanes", summary.hyperplanes.size()},
                    {"scalar", big(summary.expected_scalar)},
                    {"composite_scalar", big(summary.composite_scalar)},
                    {"fixed_dims", fixed_dims}});
  }
  env.payload["groupring"] = rows;
}

void suite_counts(ReportEnvelope& env, const VerifyRequest& request) {
  const std::uint64_t cap = request.cap.value_or(1u << 20);
  Json rows = Json::array();
  for (Residue q : {2u, 3u})
    for (unsigned n = 1; n <= 6; ++n) {
      Json counts = Json::array();
      guarded(env, "gaussian-vs-brute q=" + std::to_string(q) + " n=" + std::to_string(n), [&] {
        for (unsigned k = 0; k <= n; ++k) {
          const BigInt expected = gaussian_count(n, k, q);
          const std::size_t found = enumerate_subgroups_brute(n, k, q, cap).size();
          counts.push_back(big(expected));
          if (expected != found)
            return std::pair{false, "k=" + std::to_string(k) + ": formula " + big(expected) +
                                        ", enumeration " + std::to_string(found)};
        }
        return std::pair{true, std::string{}};
      });
      rows.push_back({{"q", q}, {"n", n}, {"counts_by_k", counts}});
    }
  env.payload["counts"] = rows;
}

void suite_identities(ReportEnvelope& env) {
  const auto sweep = sweep_params();
  std::map<std::string, std::pair<std::size_t, std::string>> failures;  // name -> (count, first witness)
  std::vector<std::string> names;
  auto record = [&](const std::string& name, bool ok, const std::string& witness) {
    if (!failures.count(name)) names.push_back(name);
    auto& slot = failures[name];
    if (!ok) {
      if (slot.first == 0) slot.second = witness;
      ++slot.first;
    }
  };
  for (const auto& params : sweep) {
    const std::string label = params.label();
    try {
      const auto cover = decomposition_report(params);
      for (const auto& c : cover.checks) record(c.name, c.passed, label + ": " + c.detail);
      record("prym-times-orbits", params.t() * cover.prym_dim == cover.g_T,
             label + ": t*dim P = " + big(params.t() * cover.prym_dim) + ", g_T = " + big(cover.g_T));
      const auto reps = rep_census(params);
      for (const auto& c : reps.checks) record(c.name, c.passed, label + ": " + c.detail);
      const auto iso = isotypical_report(params);
      record("isotypical-dimension", iso.total_dim == iso.g_tilde, label);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::verification_failure && e.kind() != ErrorKind::invalid_parameters) throw;
      record("sweep " + label, false, e.what());
    }
  }
  for (const auto& name : names) {
    const auto& [count, witness] = failures[name];
    env.checks.push_back(line("identity " + name, count == 0,
                              count == 0 ? std::to_string(sweep.size()) + " triples" : witness));
  }
  Json labels = Json::array();
  for (const auto& params : sweep) labels.push_back(params.label());
  env.payload["identities"] = {{"triples", sweep.size()}, {"sweep", labels}};
}

void suite_fixtures(ReportEnvelope& env) {
  const auto params = fixtures::example_params();
  const auto action = build_action(params);
  Json rows = Json::array();
  for (const auto& want : kExample) {
    const std::string name = want.subgroup;
    guarded(env, "fixture " + name, [&] {
      const auto text = fixtures::builtin(name);
      if (!text) return std::pair{false, std::string("missing fixture")};
      const auto h = Hyperplane::from_subspace(parse_generator_words(*text, params));
      const auto galois = galois_closure(h, action);
      const BigInt genus = genus_quotient_by_core(params, galois.core_dim);
      rows.push_back({{"subgroup", name},
                      {"core_order", big(big_pow(params.q(), galois.core_dim))},
                      {"group", galois.group},
                      {"quotient_genus", big(genus)}});
      const bool ok = galois.core_dim == want.core_dim && galois.k == want.k &&
                      genus == from_decimal(want.quotient_genus) && !galois.is_composite_galois;
      return std::pair{ok, "core 3^" + std::to_string(galois.core_dim) + ", " + galois.group +
                               ", genus " + big(genus)};
    });
    if (!want.core_generators) continue;
    guarded(env, std::string("fixture ") + want.core_generators + " spans core of " + name, [&] {
      const auto h = Hyperplane::from_subspace(parse_generator_words(*fixtures::builtin(name), params));
      const auto listed = parse_generator_words(*fixtures::builtin(want.core_generators), params);
      return std::pair{listed == core(h, action), "dim " + std::to_string(listed.dim())};
    });
  }
  env.payload["fixtures"] = rows;
}

template <typename T>
T parse_positive(const std::string& text, const char* what) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || value == 0)
    throw Error(ErrorKind::invalid_parameters, std::string(what) + " must be a positive integer, got '" + text + "'");
  return value;
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::verification_failure:
    case ErrorKind::internal_inconsistency:
      return 1;
    case ErrorKind::cap_exceeded:
      return 3;
    default:
      return 2;
  }
}

std::uint64_t atlas_cap_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("GONAL_ATLAS_CAP");
  if (!raw || !*raw) return fallback;
  return parse_positive<std::uint64_t>(raw, "GONAL_ATLAS_CAP");
}

ReportEnvelope invariants_envelope(const CoverParams& params, bool with_factors) {
  const auto cover = decomposition_report(params);
  ReportEnvelope env{"invariants", triple(params)};
  Json genus_z = Json::object();
  for (const auto& [dim, genus] : cover.genus_Z) genus_z[std::to_string(dim)] = big(genus);
  env.payload = {{"n", params.n()},
                 {"g", big(cover.g)},
                 {"g_tilde", big(cover.g_tilde)},
                 {"g_Y", big(cover.g_Y)},
                 {"g_T", big(cover.g_T)},
                 {"prym_dim", big(cover.prym_dim)},
                 {"m", big(cover.m)},
                 {"t", big(cover.t)},
                 {"s0", cover.s0},
                 {"cone_points", cover.cone_points},
                 {"genus_by_core_dim", genus_z}};
  if (with_factors) {
    Json factors = Json::array();
    for (const auto& f : cyclotomic_factor(params.p(), params.q()).factors) factors.push_back(f.to_string());
    env.payload["cyclotomic_factors"] = factors;
  }
  append_checks(env, cover.checks);
  return env;
}

ReportEnvelope atlas_envelope(const CoverParams& params, const AtlasRequest& request) {
  const auto action = build_action(params);
  AtlasOptions options;
  options.cap = request.cap;
  options.threads = request.threads;
  const auto classes = orbit_classes(action, options);

  ReportEnvelope env{"atlas", triple(params)};
  const std::size_t shown = std::min(classes.size(), request.limit.value_or(classes.size()));
  const std::size_t lower_bound = std::size_t{params.p() - 1} * (params.r() - 3);
  std::map<std::size_t, std::size_t> by_core_dim;
  bool sizes_ok = true, invariant_ok = true, quantum_ok = true, bound_ok = true;
  Json rows = Json::array();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    const std::size_t d = c.core_dim();
    ++by_core_dim[d];
    sizes_ok = sizes_ok && c.members.size() == params.p();
    invariant_ok = invariant_ok && c.core.is_invariant_under(action.matrix());
    quantum_ok = quantum_ok && d % params.s0() == 0;
    bound_ok = bound_ok && d >= lower_bound;
    if (i >= shown) continue;
    Json row = {{"index", i},
                {"representative", vector_text(c.representative.normal())},
                {"orbit_size", c.members.size()},
                {"core_dim", d},
                {"core_order", big(big_pow(params.q(), d))},
                {"group", semidirect_descriptor(params.q(), params.n() - d, params.p())}};
    if (request.orbits) {
      std::vector<Vector> normals;
      for (const auto& h : c.members) normals.push_back(h.normal());
      row["members"] = vectors_json(normals);
    }
    if (request.cores) row["core_basis"] = vectors_json(c.core.basis_vectors());
    rows.push_back(std::move(row));
  }
  Json dims = Json::object();
  for (const auto& [d, count] : by_core_dim) dims[std::to_string(d)] = count;
  env.payload = {{"n", params.n()},
                 {"s0", params.s0()},
                 {"t", big(params.t())},
                 {"classes_total", classes.size()},
                 {"classes_listed", shown},
                 {"classes_by_core_dim", dims},
                 {"classes", rows}};
  env.checks.push_back(line("orbit-count", params.t() == classes.size(),
                            std::to_string(classes.size()) + " classes, t = " + big(params.t())));
  env.checks.push_back(line("orbit-size", sizes_ok, "every orbit has p members"));
  env.checks.push_back(line("core-invariant", invariant_ok));
  env.checks.push_back(line("core-dim-quantum", quantum_ok, "dim = 0 mod s0"));
  env.checks.push_back(line("core-dim-lower-bound", bound_ok, "dim >= " + std::to_string(lower_bound)));
  return env;
}

ReportEnvelope galois_envelope(const CoverParams& params, std::string_view text, const std::string& source) {
  const auto action = build_action(params);
  const auto h = Hyperplane::from_subspace(parse_generator_words(text, params));
  const auto galois = galois_closure(h, action);
  const auto kernel_core = core(h, action);

  ReportEnvelope env{"galois", triple(params)};
  env.payload = {{"subgroup", source},
                 {"normal", vector_text(h.normal())},
                 {"core_dim", galois.core_dim},
                 {"core_order", big(big_pow(params.q(), galois.core_dim))},
                 {"k", galois.k},
                 {"group", galois.group},
                 {"group_order", big(galois.group_order)},
                 {"composite_is_galois", galois.is_composite_galois},
                 {"k_exceeds_p_minus_1", galois.exceeds_p_minus_1},
                 {"quotient_genus", big(genus_quotient_by_core(params, galois.core_dim))}};
  env.checks.push_back(line("order-congruence", galois.order_congruence, "q^k = 1 mod p"));
  env.checks.push_back(line("core-invariant", kernel_core.is_invariant_under(action.matrix())));
  env.checks.push_back(line("core-dim-quantum", galois.core_dim % params.s0() == 0));
  return env;
}

ReportEnvelope reps_envelope(const CoverParams& params) {
  const auto table = rep_census(params);
  const auto iso = isotypical_report(params);
  ReportEnvelope env{"reps", triple(params)};

  Json complex = Json::array();
  BigInt complex_count = 0;
  for (const auto& r : table.complex_reps) {
    complex.push_back({{"label", r.label}, {"degree", big(r.degree)}, {"count", big(r.count)}, {"kernel", r.kernel}});
    complex_count += r.count;
  }
  Json rational = Json::array();
  BigInt rational_count = 0, nontrivial_on_kernel = 0;
  for (const auto& r : table.rational_reps) {
    rational.push_back({{"label", r.label},
                        {"degree", big(r.degree)},
                        {"count", big(r.count)},
                        {"kernel", r.kernel},
                        {"factor", r.factor},
                        {"factor_dim", big(r.factor_dim)}});
    rational_count += r.count;
    if (r.kernel != "G~" && r.kernel != "N~") nontrivial_on_kernel += r.count;
  }
  Json cosets = Json::array();
  for (const auto& d : table.coset_decompositions)
    cosets.push_back({{"subgroup", d.subgroup}, {"index", big(d.index)}, {"constituents", d.constituents}});
  Json factors = Json::array();
  for (const auto& f : iso.factors)
    factors.push_back({{"factor", f.name}, {"rep", f.representation}, {"dim", big(f.dim)},
                       {"multiplicity", big(f.multiplicity)}});

  env.payload = {{"complex", complex},
                 {"complex_total", big(complex_count)},
                 {"rational", rational},
                 {"rational_total", big(rational_count)},
                 {"rational_with_proper_kernel_in_N", big(nontrivial_on_kernel)},
                 {"coset_representations", cosets},
                 {"isotypical", factors},
                 {"isotypical_dim", big(iso.total_dim)}};
  append_checks(env, table.checks);
  env.checks.push_back(line("isotypical-dimension", iso.total_dim == iso.g_tilde,
                            big(iso.total_dim) + " = g~"));
  return env;
}

Suite parse_suite(std::string_view name) {
  if (name == "groupring") return Suite::groupring;
  if (name == "counts") return Suite::counts;
  if (name == "identities") return Suite::identities;
  if (name == "fixtures") return Suite::fixtures;
  if (name == "all") return Suite::all;
  throw Error(ErrorKind::invalid_parameters, "unknown suite " + std::string(name));
}

ReportEnvelope verify_envelope(const VerifyRequest& request) {
  ReportEnvelope env{"verify"};
  const bool all = request.suite == Suite::all;
  if (all || request.suite == Suite::fixtures) suite_fixtures(env);
  if (all || request.suite == Suite::identities) suite_identities(env);
  if (all || request.suite == Suite::counts) suite_counts(env, request);
  if (all || request.suite == Suite::groupring) suite_groupring(env, request);
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for q-homology covers of cyclic p-gonal curves", "gonal"};
  app.require_subcommand(1);

  unsigned p = 0, q = 0, r = 0;
  bool json = false, allow_low_genus = false;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--p", p, "odd prime, degree of the gonal map")->required();
    sub->add_option("--q", q, "prime, order of the homology coefficients")->required();
    sub->add_option("--r", r, "number of branch points")->required();
    sub->add_flag("--allow-low-genus", allow_low_genus, "accept genus-1 triples");
    sub->add_flag("--json", json, "emit JSON");
  };

  auto* invariants = app.add_subcommand("invariants", "genera, dimensions and counts");
  add_params(invariants);
  bool factors = false;
  invariants->add_flag("--factors", factors, "list the irreducible factors of 1 + x + ... + x^(p-1)");

  auto* atlas = app.add_subcommand("atlas", "orbit classes of hyperplanes");
  add_params(atlas);
  AtlasRequest atlas_request;
  std::optional<std::uint64_t> atlas_cap;
  std::size_t limit = 0;
  atlas->add_flag("--orbits", atlas_request.orbits, "list orbit members");
  atlas->add_flag("--cores", atlas_request.cores, "list a basis of each core");
  auto* limit_opt = atlas->add_option("--limit", limit, "list at most N classes");
  atlas->add_option("--cap", atlas_cap, "refuse when q^n exceeds this (default 3^13)");
  atlas->add_option("--threads", atlas_request.threads, "worker threads, 0 = all cores");

  auto* galois = app.add_subcommand("galois", "Galois closure of a composite cover");
  add_params(galois);
  std::string subgroup;
  galois->add_option("--subgroup", subgroup, "generator-word file, or builtin:L1..L4")->required();

  auto* reps = app.add_subcommand("reps", "representation census");
  add_params(reps);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite_name = "all";
  std::optional<std::uint64_t> verify_cap;
  VerifyRequest verify_request;
  verify->add_option("--suite", suite_name, "groupring|counts|identities|fixtures|all")
      ->check(CLI::IsMember({"groupring", "counts", "identities", "fixtures", "all"}));
  verify->add_option("--cap", verify_cap, "size guard for group tables and brute-force enumeration");
  verify->add_option("--threads", verify_request.threads, "worker threads, 0 = all cores");
  verify->add_flag("--json", json, "emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    ReportEnvelope env;
    auto params = [&] { return CoverParams::make(p, q, r, allow_low_genus); };
    if (invariants->parsed()) {
      env = invariants_envelope(params(), factors);
    } else if (atlas->parsed()) {
      atlas_request.cap = atlas_cap ? *atlas_cap : atlas_cap_from_env();
      if (*limit_opt) atlas_request.limit = limit;
      env = atlas_envelope(params(), atlas_request);
    } else if (galois->parsed()) {
      const auto text = read_subgroup_source(subgroup);
      env = galois_envelope(params(), text, subgroup);
    } else if (reps->parsed()) {
      env = reps_envelope(params());
    } else {
      verify_request.suite = parse_suite(suite_name);
      verify_request.cap = verify_cap;
      env = verify_envelope(verify_request);
    }
    env.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    out << (json ? report::render_json(env) : report::render_human(env));
    if (!env.all_pass()) {
      for (const auto& c : env.checks)
        if (c.status != "pass") {
          err << "error: check " << c.name << " failed";
          if (!c.detail.empty()) err << ": " << c.detail;
          err << "\n";
          break;
        }
      return 1;
    }
    return 0;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n"
        << "hint: pass --cap " << e.required() << " or set GONAL_ATLAS_CAP=" << e.required() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gonal::cli
