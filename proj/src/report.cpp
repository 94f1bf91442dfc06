#include "gonal/report.hpp"

#include <sstream>

#include "gonal/errors.hpp"

namespace gonal::report {

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "null";
  return v.dump();
}

void flatten_into(const Json& v, const std::string& path,
                  std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [key, child] : v.items())
      flatten_into(child, path.empty() ? key : path + "." + key, out);
  } else if (v.is_array()) {
    if (v.empty()) out.emplace_back(path, "[]");
    for (std::size_t i = 0; i < v.size(); ++i)
      flatten_into(v[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, scalar_text(v));
  }
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::parse_error, "malformed report: " + what);
}

}  // namespace

bool ReportEnvelope::all_pass() const {
  for (const auto& c : checks)
    if (c.status != "pass") return false;
  return true;
}

Json to_json(const ReportEnvelope& env) {
  Json doc = Json::object();
  doc["command"] = env.command;
  if (env.params)
    doc["params"] = {{"p", env.params->p}, {"q", env.params->q}, {"r", env.params->r}};
  else
    doc["params"] = nullptr;
  doc["checks"] = Json::array();
  for (const auto& c : env.checks) {
    Json line = {{"name", c.name}, {"status", c.status}};
    if (!c.detail.empty()) line["detail"] = c.detail;
    doc["checks"].push_back(std::move(line));
  }
  doc["payload"] = env.payload;
  doc["timing"] = {{"elapsed_ms", env.elapsed_ms}};
  return doc;
}

ReportEnvelope from_json(const Json& doc) {
  if (!doc.is_object()) malformed("top level is not an object");
  for (const char* key : {"command", "params", "checks", "payload"})
    if (!doc.contains(key)) malformed(std::string("missing key ") + key);
  ReportEnvelope env;
  try {
    env.command = doc.at("command").get<std::string>();
    if (!doc.at("params").is_null()) {
      const auto& p = doc.at("params");
      env.params = ParamTriple{p.at("p").get<unsigned>(), p.at("q").get<unsigned>(),
                               p.at("r").get<unsigned>()};
    }
    for (const auto& c : doc.at("checks")) {
      CheckLine line{c.at("name").get<std::string>(), c.at("status").get<std::string>(), ""};
      if (c.contains("detail")) line.detail = c.at("detail").get<std::string>();
      env.checks.push_back(std::move(line));
    }
    env.payload = doc.at("payload");
    if (doc.contains("timing")) env.elapsed_ms = doc.at("timing").at("elapsed_ms").get<double>();
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
  return env;
}

std::string render_json(const ReportEnvelope& env) { return to_json(env).dump(2) + "\n"; }

std::vector<std::pair<std::string, std::string>> flatten(const Json& payload) {
  std::vector<std::pair<std::string, std::string>> out;
  flatten_into(payload, "", out);
  return out;
}

std::string render_human(const ReportEnvelope& env) {
  std::ostringstream os;
  os << "command: " << env.command << "\n";
  if (env.params) os << "params: p=" << env.params->p << " q=" << env.params->q << " r=" << env.params->r << "\n";
  for (const auto& [path, value] : flatten(env.payload)) os << path << ": " << value << "\n";
  for (const auto& c : env.checks) {
    os << "check " << c.name << ": " << c.status;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace gonal::report
