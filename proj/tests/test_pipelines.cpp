#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "spinver/errors.hpp"
#include "spinver/pipelines.hpp"
#include "spinver/report.hpp"

using namespace spinver;

namespace {

const Field Fp = Field::prime(10007);
const Field Q = Field::rational();

bool has_check(const CheckReport& r, const std::string& name) {
  return std::any_of(r.checks.begin(), r.checks.end(),
                     [&](const Check& c) { return c.name == name; });
}

}  // namespace

TEST_CASE("genus 4 roundtrip on the first seed") {
  CheckReport r = run_genus4_spin3(Fp, 1, kDefaultResampleCap, true);
  CHECK(r.pipeline == "genus4-spin3-roundtrip");
  CHECK(r.passed());
  CHECK_FALSE(r.exhausted);
  CHECK(r.checks.size() == 20);
  for (const auto& c : r.checks) CHECK(c.pass);
  CHECK(has_check(r, "curve_discriminant"));
  CHECK(has_check(r, "contact_mod_quadric_dim"));
  CHECK(has_check(r, "section_square_kernel_span"));
  CHECK(has_check(r, "recovered_pencil_matches"));
  CHECK(has_check(r, "unique_member_containing_curve"));

  CheckReport fwd = run_genus4_spin3(Fp, 1, kDefaultResampleCap, false);
  CHECK(fwd.pipeline == "genus4-spin3");
  CHECK(fwd.passed());
  CHECK(fwd.checks.size() == 14);
  CHECK_FALSE(has_check(fwd, "recovered_pencil_matches"));
}

TEST_CASE("odd invariants pass over both fields") {
  for (const Field& f : {Q, Fp}) {
    CheckReport r = run_genus4_odd_invariants(f);
    CHECK(r.pipeline == "genus4-odd-invariants");
    CHECK(r.passed());
    CHECK(r.resamples == 0);
    CHECK(r.checks.size() == 15);
    for (const auto& c : r.checks) {
      CHECK(c.pass);
      if (c.name == "exchange_eigenspace_dims") CHECK(c.actual == "4,6");
      if (c.name == "pair_product_kernel_dim") CHECK(c.actual == "1");
    }
  }
}

TEST_CASE("odd sample carries the invariant checks when asked") {
  CheckReport full = run_genus4_odd_sample(Fp, 1, kDefaultResampleCap, true);
  CHECK(full.passed());
  CHECK(full.checks.size() == 20);
  CHECK(has_check(full, "tangency_system_dim"));
  CHECK(has_check(full, "diagonal_tangency_orders"));

  CheckReport bare = run_genus4_odd_sample(Fp, 1, kDefaultResampleCap, false);
  CHECK(bare.passed());
  CHECK(bare.checks.size() == 5);
  CHECK_FALSE(has_check(bare, "tangency_system_dim"));
}

TEST_CASE("genus 3 pipelines pass on the first seed") {
  CheckReport odd = run_genus3_spin4_odd(Fp, 1, kDefaultResampleCap);
  CHECK(odd.pipeline == "genus3-spin4-odd");
  CHECK(odd.passed());
  CHECK(odd.checks.size() == 9);
  CHECK(has_check(odd, "node_system_equivariant"));
  CHECK(has_check(odd, "node_hessian_rank"));

  CheckReport even = run_genus3_spin4_even(Fp, 1, kDefaultResampleCap);
  CHECK(even.pipeline == "genus3-spin4-even");
  CHECK(even.passed());
  CHECK(even.checks.size() == 22);
  CHECK(has_check(even, "cubic_theta_kernel"));
  CHECK(has_check(even, "two_torsion_obstruction"));
}

TEST_CASE("registry, selector and dispatch") {
  const auto& reg = pipeline_registry();
  REQUIRE(reg.size() == 6);
  std::vector<std::string> names;
  for (const auto& s : reg) names.push_back(s.name);
  std::vector<std::string> expect{
      "genus4-spin3",        "genus4-spin3-roundtrip", "genus4-odd-invariants",
      "genus4-odd-sample",   "genus3-spin4-odd",       "genus3-spin4-even"};
  CHECK(names == expect);
  for (const auto& s : reg)
    CHECK(s.seeded == (s.name != "genus4-odd-invariants"));

  std::vector<std::string> all = expand_selector("all");
  std::vector<std::string> expanded{"genus4-spin3-roundtrip",
                                    "genus4-odd-sample", "genus3-spin4-odd",
                                    "genus3-spin4-even"};
  CHECK(all == expanded);
  CHECK(expand_selector("genus4-spin3") ==
        std::vector<std::string>{"genus4-spin3"});
  CHECK_THROWS_AS(expand_selector("nonsense"), invalid_argument_error);

  CheckReport r = run_pipeline("genus3-spin4-even", Fp, 2, kDefaultResampleCap);
  CHECK(r.passed());
  CHECK_THROWS_AS(run_pipeline("nonsense", Fp, 1, kDefaultResampleCap),
                  invalid_argument_error);
}

TEST_CASE("trial batches tally and respect seeding") {
  TrialBatch fixed = run_trials("genus4-odd-invariants", Fp, 1, 5, 0);
  CHECK(fixed.trials.size() == 1);
  CHECK(fixed.passed == 1);
  CHECK(fixed.failed == 0);
  CHECK(fixed.within_tolerance);

  TrialBatch batch = run_trials("genus3-spin4-even", Fp, 1, 3,
                                kDefaultResampleCap);
  CHECK(batch.trials.size() == 3);
  CHECK(batch.passed == 3);
  CHECK(batch.exhausted == 0);
  CHECK(batch.within_tolerance);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(batch.trials[i].seed == 1 + i);
}

TEST_CASE("reports are byte-identical across reruns") {
  CheckReport a = run_pipeline("genus3-spin4-even", Fp, 2, kDefaultResampleCap);
  CheckReport b = run_pipeline("genus3-spin4-even", Fp, 2, kDefaultResampleCap);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());

  CheckReport c = run_genus4_odd_invariants(Fp);
  CheckReport d = run_genus4_odd_invariants(Fp);
  CHECK(report_to_json(c).dump() == report_to_json(d).dump());
}

TEST_CASE("a zero resample cap reports exhaustion, not failure") {
  CheckReport r = run_genus4_spin3(Fp, 1, 0, true);
  CHECK(r.exhausted);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.logic_failure());
}

TEST_CASE("sampling pipelines require a prime field") {
  CHECK_THROWS_AS(run_genus4_spin3(Q, 1, kDefaultResampleCap, true),
                  bad_characteristic_error);
  CHECK_THROWS_AS(run_genus3_spin4_odd(Q, 1, kDefaultResampleCap),
                  bad_characteristic_error);
  CHECK_THROWS_AS(run_genus3_spin4_even(Q, 1, kDefaultResampleCap),
                  bad_characteristic_error);
}
