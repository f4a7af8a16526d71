#include "spinver/pipelines.hpp"

#include "spinver/errors.hpp"

namespace spinver {

const std::vector<PipelineSpec>& pipeline_registry() {
  static const std::vector<PipelineSpec> reg{
      {"genus4-spin3", true, 0.1},
      {"genus4-spin3-roundtrip", true, 0.1},
      {"genus4-odd-invariants", false, 0.0},
      {"genus4-odd-sample", true, 0.1},
      {"genus3-spin4-odd", true, 0.2},
      {"genus3-spin4-even", true, 0.2},
  };
  return reg;
}

std::vector<std::string> expand_selector(const std::string& selector) {
  if (selector == "all")
    return {"genus4-spin3-roundtrip", "genus4-odd-sample", "genus3-spin4-odd",
            "genus3-spin4-even"};
  for (const auto& spec : pipeline_registry())
    if (spec.name == selector) return {selector};
  throw invalid_argument_error("unknown pipeline: " + selector);
}

CheckReport run_pipeline(const std::string& name, const Field& f,
                         std::uint64_t seed, std::size_t cap) {
  if (name == "genus4-spin3") return run_genus4_spin3(f, seed, cap, false);
  if (name == "genus4-spin3-roundtrip")
    return run_genus4_spin3(f, seed, cap, true);
  if (name == "genus4-odd-invariants") return run_genus4_odd_invariants(f);
  if (name == "genus4-odd-sample")
    return run_genus4_odd_sample(f, seed, cap, true);
  if (name == "genus3-spin4-odd") return run_genus3_spin4_odd(f, seed, cap);
  if (name == "genus3-spin4-even") return run_genus3_spin4_even(f, seed, cap);
  throw invalid_argument_error("unknown pipeline: " + name);
}

TrialBatch run_trials(const std::string& name, const Field& f,
                      std::uint64_t seed0, std::size_t trials,
                      std::size_t cap) {
  const PipelineSpec* spec = nullptr;
  for (const auto& s : pipeline_registry())
    if (s.name == name) spec = &s;
  if (!spec) throw invalid_argument_error("unknown pipeline: " + name);

  TrialBatch batch;
  batch.name = name;
  std::size_t count = spec->seeded ? trials : 1;
  for (std::size_t k = 0; k < count; ++k) {
    CheckReport rep = run_pipeline(name, f, seed0 + k, cap);
    if (rep.exhausted)
      ++batch.exhausted;
    else if (rep.checks_pass())
      ++batch.passed;
    else
      ++batch.failed;
    batch.trials.push_back(std::move(rep));
  }
  batch.within_tolerance =
      batch.failed == 0 && double(batch.exhausted) <=
                               spec->exhaust_tolerance * double(count);
  return batch;
}

}  // namespace spinver
