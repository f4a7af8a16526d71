#include "spinver/report.hpp"

#include <sstream>

namespace spinver {

bool CheckReport::checks_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string field_label(const Field& f) {
  return f.is_rational() ? "rational" : std::to_string(f.characteristic());
}

void add_check(CheckReport& r, const std::string& name,
               const std::string& claim, const std::string& expected,
               const std::string& actual) {
  r.checks.push_back(Check{name, claim, expected, actual, expected == actual});
}

void add_check(CheckReport& r, const std::string& name,
               const std::string& claim, std::size_t expected,
               std::size_t actual) {
  add_check(r, name, claim, std::to_string(expected), std::to_string(actual));
}

void add_check(CheckReport& r, const std::string& name,
               const std::string& claim, bool expected, bool actual) {
  add_check(r, name, claim, std::string(expected ? "true" : "false"),
            std::string(actual ? "true" : "false"));
}

nlohmann::ordered_json report_to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["pipeline"] = r.pipeline;
  j["field"] = r.field;
  j["seed"] = r.seed;
  j["resamples"] = r.resamples;
  j["exhausted"] = r.exhausted;
  j["pass"] = r.passed();
  j["logic_failure"] = r.logic_failure();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["claim"] = c.claim;
    jc["expected"] = c.expected;
    jc["actual"] = c.actual;
    jc["pass"] = c.pass;
    j["checks"].push_back(std::move(jc));
  }
  return j;
}

void RunSummary::absorb(const CheckReport& r) {
  if (r.exhausted)
    ++exhausted;
  else if (r.passed())
    ++passed;
  else
    ++failed;
}

nlohmann::ordered_json run_report_json(
    const std::string& tool_version, const nlohmann::ordered_json& config,
    const std::vector<std::pair<std::string, std::vector<CheckReport>>>&
        pipelines,
    const RunSummary& summary) {
  nlohmann::ordered_json j;
  j["tool_version"] = tool_version;
  j["config"] = config;
  j["pipelines"] = nlohmann::ordered_json::array();
  for (const auto& [name, trials] : pipelines) {
    nlohmann::ordered_json jp;
    jp["name"] = name;
    jp["trials"] = nlohmann::ordered_json::array();
    for (const auto& t : trials) jp["trials"].push_back(report_to_json(t));
    j["pipelines"].push_back(std::move(jp));
  }
  j["summary"] = {{"passed", summary.passed},
                  {"failed", summary.failed},
                  {"exhausted", summary.exhausted}};
  return j;
}

std::string report_to_text(const CheckReport& r) {
  std::ostringstream os;
  os << r.pipeline << " (field " << r.field << ", seed " << r.seed
     << ", resamples " << r.resamples << ")\n";
  for (const auto& c : r.checks)
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": expected "
       << c.expected << ", got " << c.actual << "\n";
  if (r.exhausted)
    os << "  -> EXHAUSTED (no general instance within the attempt cap)\n";
  else
    os << "  -> " << (r.passed() ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace spinver
