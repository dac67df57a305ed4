#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace lsi {

inline constexpr const char* engine_version = "0.1.0";

using ordered_json = nlohmann::ordered_json;

// One verification or evaluation row of a run report.
struct CheckRow {
  std::string name;
  std::string status;   // "pass" | "fail" | "warn"
  ordered_json detail;  // residuals or numeric aggregates, may be empty

  static CheckRow make(std::string name, bool ok, ordered_json detail = ordered_json::object()) {
    return {std::move(name), ok ? "pass" : "fail", std::move(detail)};
  }
};

// Result of one CLI invocation. The exit-code contract keys off `failed()`:
// a "warn" row qualifies the value but does not fail the run.
struct RunReport {
  std::string command;
  std::vector<CheckRow> checks;
  double wall_ms = 0.0;

  bool failed() const {
    for (const auto& c : checks)
      if (c.status == "fail") return true;
    return checks.empty();
  }
  int passes() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == "pass";
    return n;
  }
};

// Deterministic JSON rendering; wall_ms is the only field that varies
// between identical runs and is emitted last.
ordered_json report_json(const RunReport& rep);

// One line per check ("PASS name  key=value ..."), then a summary line.
std::string report_text(const RunReport& rep);

}  // namespace lsi
