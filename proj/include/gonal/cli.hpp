#pragma once

// The `gonal` command line. Each command builds a ReportEnvelope; --json
// and the plain renderer both print that envelope.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input, 3 cap exceeded.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gonal/atlas.hpp"
#include "gonal/errors.hpp"
#include "gonal/params.hpp"
#include "gonal/report.hpp"

namespace gonal::cli {

int exit_code(ErrorKind kind);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// GONAL_ATLAS_CAP if set, otherwise `fallback`. A value that is not a
// positive integer is invalid-parameters.
std::uint64_t atlas_cap_from_env(std::uint64_t fallback = kDefaultEnumerationCap);

report::ReportEnvelope invariants_envelope(const CoverParams& params, bool with_factors);

struct AtlasRequest {
  bool orbits = false;  // list every member of each class
  bool cores = false;   // list a basis of each core
  std::optional<std::size_t> limit;
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned threads = 0;
};
report::ReportEnvelope atlas_envelope(const CoverParams& params, const AtlasRequest& request);

// `source` is echoed into the payload; `text` holds generator words.
report::ReportEnvelope galois_envelope(const CoverParams& params, std::string_view text,
                                       const std::string& source);

report::ReportEnvelope reps_envelope(const CoverParams& params);

enum class Suite { groupring, counts, identities, fixtures, all };
Suite parse_suite(std::string_view name);

struct VerifyRequest {
  Suite suite = Suite::all;
  std::optional<std::uint64_t> cap;  // group-ring table / brute-force guard
  unsigned threads = 0;
};
// Failures become "fail" check lines rather than exceptions.
report::ReportEnvelope verify_envelope(const VerifyRequest& request);

}  // namespace gonal::cli
