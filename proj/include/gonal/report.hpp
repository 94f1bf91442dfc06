#pragma once

// Report envelope shared by the JSON and human renderers of every command.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace gonal::report {

using Json = nlohmann::ordered_json;

struct ParamTriple {
  unsigned p = 0, q = 0, r = 0;
  bool operator==(const ParamTriple&) const = default;
};

struct CheckLine {
  std::string name;
  std::string status;  // "pass" or "fail"
  std::string detail;
  bool operator==(const CheckLine&) const = default;
};

struct ReportEnvelope {
  std::string command;
  std::optional<ParamTriple> params;
  std::vector<CheckLine> checks;
  Json payload = Json::object();
  double elapsed_ms = 0.0;

  bool all_pass() const;
  bool operator==(const ReportEnvelope&) const = default;
};

Json to_json(const ReportEnvelope& env);
// Throws Error(parse_error) on a malformed document.
ReportEnvelope from_json(const Json& doc);

std::string render_json(const ReportEnvelope& env);
// Plain text. Every scalar in the payload appears as "key: value", nested
// keys joined with '.', array positions as [i].
std::string render_human(const ReportEnvelope& env);

// Flattened scalar leaves of a payload, in document order, with the same
// paths and value spelling render_human uses.
std::vector<std::pair<std::string, std::string>> flatten(const Json& payload);

}  // namespace gonal::report
