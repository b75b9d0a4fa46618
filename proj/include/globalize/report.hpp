#pragma once

// Run reports: an ordered list of named verdicts plus computed results.
//
// JSON output is byte-deterministic: keys are sorted, scalars are canonical
// strings and timing appears only when requested.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "globalize/error.hpp"

namespace globalize {

struct NamedVerdict {
  std::string name;
  bool ok = true;
  std::string witness;
};

struct RunReport {
  std::string pipeline;
  std::string input_digest;
  std::vector<NamedVerdict> verdicts;
  nlohmann::json results = nlohmann::json::object();
  std::optional<double> timing_ms;

  void add(std::string name, bool ok, std::string witness = {}) {
    verdicts.push_back({std::move(name), ok, std::move(witness)});
  }
  void add(std::string name, const Verdict& v) {
    add(std::move(name), v.ok, v.ok ? std::string{} : v.code + ": " + v.witness);
  }
  bool all_passed() const {
    for (const auto& v : verdicts)
      if (!v.ok) return false;
    return true;
  }
};

enum class ReportFormat { Json, Text };

inline nlohmann::json report_to_json(const RunReport& r) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : r.verdicts) {
    nlohmann::json e = {{"name", v.name}, {"ok", v.ok}};
    if (!v.ok) e["witness"] = v.witness;
    vs.push_back(std::move(e));
  }
  nlohmann::json j = {{"schema", 1},
                      {"pipeline", r.pipeline},
                      {"input_digest", r.input_digest},
                      {"verdicts", vs},
                      {"results", r.results},
                      {"ok", r.all_passed()}};
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

namespace detail {

inline void text_results(const nlohmann::json& j, const std::string& prefix, std::string& out) {
  for (const auto& [key, val] : j.items()) {
    if (val.is_object() && !val.empty()) {
      text_results(val, prefix + key + ".", out);
    } else {
      out += "  " + prefix + key + " = " + (val.is_string() ? val.get<std::string>() : val.dump()) + "\n";
    }
  }
}

}  // namespace detail

inline std::string emit_report(const RunReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) return report_to_json(r).dump(2) + "\n";
  std::string out = "pipeline: " + r.pipeline + "\ninput: " + r.input_digest + "\n";
  for (const auto& v : r.verdicts) {
    out += (v.ok ? "PASS " : "FAIL ") + v.name;
    if (!v.ok) out += "  [" + v.witness + "]";
    out += "\n";
  }
  if (!r.results.empty()) {
    out += "results:\n";
    detail::text_results(r.results, "", out);
  }
  if (r.timing_ms) out += "timing_ms: " + std::to_string(*r.timing_ms) + "\n";
  out += std::string("overall: ") + (r.all_passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace globalize
