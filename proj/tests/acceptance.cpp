// End-to-end acceptance gate. Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits nonzero when any criterion fails. All
// arithmetic is exact, so every comparison below is equality on integers,
// never a tolerance on floats.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "spinver/errors.hpp"
#include "spinver/jet.hpp"
#include "spinver/matrix.hpp"
#include "spinver/pipelines.hpp"
#include "spinver/poly.hpp"
#include "spinver/report.hpp"
#include "spinver/reptheory.hpp"
#include "spinver/rng.hpp"

using namespace spinver;

namespace {

int failures = 0;

void verdict(int criterion, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Every named check must be present and passing in every non-exhausted trial.
bool scope_passes(const TrialBatch& batch,
                  const std::vector<std::string>& names) {
  for (const auto& trial : batch.trials) {
    if (trial.exhausted) continue;
    for (const auto& name : names) {
      bool found = false;
      for (const auto& c : trial.checks)
        if (c.name == name) {
          found = true;
          if (!c.pass) return false;
        }
      if (!found) return false;
    }
  }
  return true;
}

bool no_logic_failures(const TrialBatch& batch) {
  for (const auto& trial : batch.trials)
    if (trial.logic_failure()) return false;
  return true;
}

std::size_t successes(const TrialBatch& batch) {
  std::size_t n = 0;
  for (const auto& trial : batch.trials)
    if (trial.passed()) ++n;
  return n;
}

bool property_rank_nullity() {
  for (const Field& f : {Field::rational(), Field::prime(10007)}) {
    Rng rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
      std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
      Matrix m(f, rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.element(f);
      std::vector<std::vector<Scalar>> ker = kernel_basis(m);
      if (rank(m) + ker.size() != cols) return false;
      for (const auto& v : ker) {
        std::vector<Scalar> image = m.apply(v);
        for (const auto& c : image)
          if (!c.is_zero()) return false;
      }
    }
  }
  return true;
}

bool property_representation_table() {
  const Field f = Field::prime(10007);
  std::vector<GroupElement> group = build_group(f);
  std::vector<MultiPoly> sys = tritangent_system(f);
  std::vector<Matrix> mats;
  for (const auto& g : group) mats.push_back(induced_matrix(g, sys));
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = 0; j < group.size(); ++j)
      if (induced_matrix(compose(group[i], group[j]), sys) !=
          mats[i] * mats[j])
        return false;
  return true;
}

bool property_jet_consistency() {
  for (const Field& f : {Field::rational(), Field::prime(10007)}) {
    // A smooth conic branch: the defining equation must die on its own jet.
    MultiPoly conic =
        MultiPoly::from_term(f, Ambient::P2, {1, 0, 1, 0}, Scalar::one(f)) +
        MultiPoly::from_term(f, Ambient::P2, {0, 2, 0, 0},
                             -Scalar::one(f));
    std::vector<Scalar> p{Scalar::zero(f), Scalar::zero(f), Scalar::one(f)};
    CurveJet cj = curve_jet({conic}, p);
    if (!evaluate_on_jet(conic, cj).is_zero()) return false;

    // Same on the diagonal of P1 x P1 through a marked point.
    MultiPoly diag = diagonal_form(f);
    std::vector<Scalar> m{Scalar::one(f), Scalar::one(f), Scalar::one(f),
                          Scalar::one(f)};
    CurveJet dj = curve_jet({diag}, m);
    if (!evaluate_on_jet(diag, dj).is_zero()) return false;
  }
  return true;
}

bool property_deterministic_reruns() {
  const Field f = Field::prime(10007);
  CheckReport a = run_pipeline("genus3-spin4-even", f, 3, kDefaultResampleCap);
  CheckReport b = run_pipeline("genus3-spin4-even", f, 3, kDefaultResampleCap);
  if (report_to_json(a).dump() != report_to_json(b).dump()) return false;
  CheckReport c = run_genus4_odd_invariants(f);
  CheckReport d = run_genus4_odd_invariants(f);
  return report_to_json(c).dump() == report_to_json(d).dump();
}

}  // namespace

int main() {
  const Field fp = Field::prime(10007);

  // 1: symbolic invariant suite over both fields, under five seconds.
  {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport over_q = run_genus4_odd_invariants(Field::rational());
    CheckReport over_p = run_genus4_odd_invariants(fp);
    double dt = seconds_since(t0);
    verdict(1, over_q.passed() && over_p.passed() && dt < 5.0,
            "invariant and decomposition checks pass over the rationals and "
            "F_10007 in under 5 seconds");
  }

  // One 20-seed roundtrip batch feeds criteria 2, 3 and 4.
  TrialBatch roundtrip =
      run_trials("genus4-spin3-roundtrip", fp, 1, 20, kDefaultResampleCap);
  std::size_t ok = successes(roundtrip);

  // 2: the forward construction itself.
  {
    std::vector<std::string> forward{
        "curve_discriminant",    "twist_order",
        "t_distinct",            "t_class_sum",
        "contact_cubics_dim",    "quadric_multiples_inside",
        "contact_mod_quadric_dim", "curve_member_smooth",
        "contact_orders",        "t_noncoplanar"};
    bool rate = 10 * (roundtrip.trials.size() - roundtrip.exhausted) >=
                9 * roundtrip.trials.size();
    verdict(2,
            rate && no_logic_failures(roundtrip) &&
                scope_passes(roundtrip, forward) && ok + roundtrip.exhausted ==
                roundtrip.trials.size(),
            "forward construction at p = 10007, seeds 1-20: at least 90% of "
            "seeds build an instance and every construction check passes");
  }

  // 3: section-count checks on the same instances.
  {
    std::vector<std::string> bundle{
        "section_square_kernel_dim", "section_square_kernel_span",
        "twisted_section_count", "contact_mod_quadric_full"};
    verdict(3, scope_passes(roundtrip, bundle),
            "section-space dimension checks pass on every built instance");
  }

  // 4: inverse reconstruction on the same instances.
  {
    std::vector<std::string> inverse{
        "recovered_pencil_dim",   "recovered_pencil_matches",
        "quadric_in_recovered",   "unique_member_containing_curve",
        "recovered_t_noncoplanar", "recovered_contact_orders"};
    verdict(4, scope_passes(roundtrip, inverse) && no_logic_failures(roundtrip),
            "inverse reconstruction recovers the quadric pencil on every "
            "built instance with zero failed checks");
  }

  // 5: tritangent sampling.
  {
    TrialBatch batch =
        run_trials("genus4-odd-sample", fp, 1, 10, kDefaultResampleCap);
    bool rate = 10 * (batch.trials.size() - batch.exhausted) >=
                9 * batch.trials.size();
    verdict(5, rate && no_logic_failures(batch) && batch.within_tolerance,
            "tritangent-member sampling at p = 10007, seeds 1-10: at least "
            "90% success and no failed checks");
  }

  // 6: nodal bidegree-(3,3) pipeline.
  {
    TrialBatch batch =
        run_trials("genus3-spin4-odd", fp, 1, 10, kDefaultResampleCap);
    bool rate = 10 * (batch.trials.size() - batch.exhausted) >=
                8 * batch.trials.size();
    verdict(6, rate && no_logic_failures(batch) && batch.within_tolerance,
            "nodal-curve pipeline at p = 10007, seeds 1-10: at least 80% "
            "success and no failed checks");
  }

  // 7: plane-quartic pipeline.
  {
    TrialBatch batch =
        run_trials("genus3-spin4-even", fp, 1, 10, kDefaultResampleCap);
    bool rate = 10 * (batch.trials.size() - batch.exhausted) >=
                8 * batch.trials.size();
    verdict(7, rate && no_logic_failures(batch) && batch.within_tolerance,
            "plane-quartic pipeline at p = 10007, seeds 1-10: at least 80% "
            "success and no failed checks");
  }

  // 8: structural property suites.
  {
    bool rn = property_rank_nullity();
    bool rep = property_representation_table();
    bool jets = property_jet_consistency();
    bool det = property_deterministic_reruns();
    verdict(8, rn && rep && jets && det,
            "property suites hold: rank plus nullity on random matrices, the "
            "144-entry representation table, jet self-consistency, and "
            "byte-identical reruns");
  }

  return failures == 0 ? 0 : 1;
}
