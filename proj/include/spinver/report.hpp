// Machine-readable verification reports. Each pipeline run produces a
// CheckReport: one line per asserted fact, carrying the claim being checked,
// the expected and observed values, and a pass flag. Reports serialize to
// JSON with a fixed key order and no timestamps, so identical configurations
// produce byte-identical output.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinver/field.hpp"

namespace spinver {

struct Check {
  std::string name;      // short stable identifier
  std::string claim;     // the asserted fact, in words
  std::string expected;  // rendered expected value
  std::string actual;    // rendered observed value
  bool pass = false;
};

struct CheckReport {
  std::string pipeline;
  std::string field;  // "rational" or the prime as decimal
  std::uint64_t seed = 0;
  std::size_t resamples = 0;
  // The sampler hit its attempt cap before reaching a general-position
  // instance; checks hold whatever was recorded up to that point.
  bool exhausted = false;
  std::vector<Check> checks;

  bool checks_pass() const;
  // A report counts as passed when sampling succeeded and every check holds.
  bool passed() const { return !exhausted && checks_pass(); }
  // A failed check on an instance that cleared every genericity gate; this
  // is the outcome that would falsify one of the verified claims.
  bool logic_failure() const { return !exhausted && !checks_pass(); }
};

std::string field_label(const Field& f);

// Records one check; pass is expected == actual on the rendered values.
void add_check(CheckReport& r, const std::string& name,
               const std::string& claim, const std::string& expected,
               const std::string& actual);
void add_check(CheckReport& r, const std::string& name,
               const std::string& claim, std::size_t expected,
               std::size_t actual);
void add_check(CheckReport& r, const std::string& name,
               const std::string& claim, bool expected, bool actual);
// String literals would otherwise decay to bool; route them to the string
// overload.
inline void add_check(CheckReport& r, const std::string& name,
                      const std::string& claim, const char* expected,
                      const char* actual) {
  add_check(r, name, claim, std::string(expected), std::string(actual));
}

nlohmann::ordered_json report_to_json(const CheckReport& r);

// Totals over a batch of trials.
struct RunSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t exhausted = 0;

  void absorb(const CheckReport& r);
};

// Top-level document: tool version, echoed configuration, per-pipeline
// trial lists, and the summary. Key order is fixed.
nlohmann::ordered_json run_report_json(
    const std::string& tool_version, const nlohmann::ordered_json& config,
    const std::vector<std::pair<std::string, std::vector<CheckReport>>>&
        pipelines,
    const RunSummary& summary);

// One human-readable line per check, plus a trailer with the verdict.
std::string report_to_text(const CheckReport& r);

}  // namespace spinver
