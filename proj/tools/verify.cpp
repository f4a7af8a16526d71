// Command-line runner: executes the selected verification pipelines for a
// range of seeds and emits a JSON (or human-readable) report. Exit code 0
// when every selected batch stays within its exhaustion tolerance with no
// logic failures, 1 on failure, 2 on usage errors.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "spinver/errors.hpp"
#include "spinver/pipelines.hpp"
#include "spinver/report.hpp"

namespace {

constexpr const char* kToolVersion = "spinver 0.1.0";

// linear_factors scans all of P1 over a prime field, so the field size is
// capped at 2^17.
constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 17;

bool usable_prime(std::uint64_t p) {
  if (p <= 3 || p > kMaxPrime || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

bool pipeline_allows_rational(const std::string& name) {
  return name == "genus4-odd-invariants" || name == "genus4-odd-sample";
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification pipelines for low-genus spin curve "
               "constructions"};
  app.require_subcommand(1);

  std::uint64_t prime = 10007;
  bool rational = false;
  std::uint64_t seed = 1;
  std::size_t trials = 1;
  std::size_t cap = spinver::kDefaultResampleCap;
  std::string out_path;
  bool want_json = false;
  bool want_human = false;

  app.add_option("--prime", prime, "odd prime > 3, at most 2^17 (default "
                                   "10007)");
  app.add_flag("--rational", rational,
               "work over the rationals (symbolic pipelines only)");
  app.add_option("--seed", seed, "first seed (default 1)");
  app.add_option("--trials", trials,
                 "number of consecutive seeds to run (default 1)");
  app.add_option("--resample-cap", cap,
                 "per-stage resample budget (default 50)");
  app.add_option("--out", out_path,
                 "write the report to this path instead of stdout");
  app.add_flag("--json", want_json, "emit the JSON report (default)");
  app.add_flag("--human", want_human, "emit a plain-text report");

  for (const auto& spec : spinver::pipeline_registry())
    app.add_subcommand(spec.name)->fallthrough();
  app.add_subcommand("all", "the four end-to-end pipelines")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (want_json && want_human)
    return usage_error("choose one of --json and --human");
  if (trials < 1) return usage_error("--trials must be at least 1");
  if (!rational && !usable_prime(prime))
    return usage_error("--prime must be an odd prime in (3, 2^17]");

  std::string selector = app.get_subcommands().front()->get_name();

  try {
    std::vector<std::string> names = spinver::expand_selector(selector);
    if (rational)
      for (const auto& name : names)
        if (!pipeline_allows_rational(name))
          return usage_error("pipeline " + name +
                             " samples points and needs --prime");

    spinver::Field f =
        rational ? spinver::Field::rational() : spinver::Field::prime(prime);

    std::vector<std::pair<std::string, std::vector<spinver::CheckReport>>>
        blocks;
    spinver::RunSummary summary;
    bool ok = true;
    for (const auto& name : names) {
      spinver::TrialBatch batch =
          spinver::run_trials(name, f, seed, trials, cap);
      for (const auto& r : batch.trials) summary.absorb(r);
      if (!batch.within_tolerance) ok = false;
      blocks.emplace_back(name, std::move(batch.trials));
    }

    nlohmann::ordered_json config;
    config["field"] = spinver::field_label(f);
    config["seed"] = seed;
    config["trials"] = trials;
    config["resample_cap"] = cap;
    config["selector"] = selector;

    std::string payload;
    if (want_human) {
      std::ostringstream os;
      for (const auto& [name, reports] : blocks) {
        os << "== " << name << " ==\n";
        for (const auto& r : reports) os << spinver::report_to_text(r);
      }
      os << "summary: passed " << summary.passed << ", failed "
         << summary.failed << ", exhausted " << summary.exhausted << "\n";
      payload = os.str();
    } else {
      payload =
          spinver::run_report_json(kToolVersion, config, blocks, summary)
              .dump(2) +
          "\n";
    }

    if (out_path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream file(out_path);
      if (!file) return usage_error("cannot open --out path: " + out_path);
      file << payload;
    }
    return ok ? 0 : 1;
  } catch (const spinver::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
