#include "awi/report.hpp"

#include <sstream>

#include "json.hpp"

namespace awi::cli {

std::string suite_report_json(const SuiteReport& report, double budget) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["budget"] = budget;
  j["all_pass"] = report.all_pass();
  j["properties"] = nlohmann::ordered_json::array();
  for (const PropertyResult& p : report.properties) {
    nlohmann::ordered_json pj;
    pj["name"] = p.name;
    pj["pass"] = p.pass;
    pj["checks"] = p.checks;
    pj["skips"] = p.skips;
    pj["worst_residual"] = p.worst;
    pj["detail"] = p.detail;
    j["properties"].push_back(std::move(pj));
  }
  return j.dump(2) + "\n";
}

std::string suite_report_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const PropertyResult& p : report.properties) {
    os << (p.pass ? "[ ok ] " : "[FAIL] ") << report.suite << "/" << p.name
       << "  checks=" << p.checks << " skips=" << p.skips
       << " worst=" << p.worst;
    if (!p.detail.empty()) os << "  (" << p.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace awi::cli
