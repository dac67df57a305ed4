#include "lsi/report.hpp"

#include <sstream>

namespace lsi {

ordered_json report_json(const RunReport& rep) {
  ordered_json j;
  j["command"] = rep.command;
  j["engine_version"] = engine_version;
  j["checks"] = ordered_json::array();
  for (const auto& c : rep.checks) {
    ordered_json row;
    row["name"] = c.name;
    row["status"] = c.status;
    if (!c.detail.empty()) row["detail"] = c.detail;
    j["checks"].push_back(std::move(row));
  }
  j["passed"] = !rep.failed();
  j["wall_ms"] = rep.wall_ms;
  return j;
}

namespace {

void flatten(const ordered_json& j, const std::string& prefix, std::ostringstream& os) {
  for (const auto& [key, val] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (val.is_object()) {
      flatten(val, name, os);
    } else if (val.is_array()) {
      // Large payloads (dualization grids) stay readable in text mode; the
      // full data is available through --format json.
      if (val.size() > 4)
        os << "  " << name << "=<" << val.size() << " entries>";
      else
        os << "  " << name << "=" << val.dump();
    } else {
      os << "  " << name << "=" << val.dump();
    }
  }
}

}  // namespace

std::string report_text(const RunReport& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks) {
    std::string tag = c.status;
    for (char& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << tag << " " << c.name;
    flatten(c.detail, "", os);
    os << "\n";
  }
  os << (rep.failed() ? "FAILED" : "OK") << " " << rep.command << ": " << rep.passes() << "/"
     << rep.checks.size() << " checks passed (" << rep.wall_ms << " ms)\n";
  return os.str();
}

}  // namespace lsi
