// Seed-driven end-to-end verification pipelines. Each run turns (field,
// seed) into a concrete instance, records one Check per asserted fact, and
// distinguishes two bad outcomes: exhaustion (no general-position instance
// found within the resample cap; tolerated at a configured rate) and logic
// failure (a must-hold claim failing on an instance that cleared every
// genericity gate; never tolerated).
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "spinver/elliptic.hpp"
#include "spinver/report.hpp"

namespace spinver {

inline constexpr std::size_t kDefaultResampleCap = 50;

// Per-stage attempt budget with a run-wide resample counter. Each stage may
// try at most cap times; every failed attempt counts one resample.
class Resampler {
 public:
  explicit Resampler(std::size_t cap) : cap_(cap) {}

  std::size_t total() const { return total_; }

  // attempt returns an optional; empty means resample. Throws
  // search_exhausted_error once the stage spends the cap.
  template <typename F>
  auto run(const char* stage, F&& attempt) ->
      typename std::invoke_result_t<F>::value_type {
    for (std::size_t k = 0; k < cap_; ++k) {
      auto r = attempt();
      if (r) return std::move(*r);
      ++total_;
    }
    throw search_exhausted_error(std::string("resample cap hit at stage: ") +
                                 stage);
  }

 private:
  std::size_t cap_;
  std::size_t total_ = 0;
};

// ---- genus 4, 3-spin --------------------------------------------------------

// A quartic elliptic curve in P3 with a 3-torsion twist divisor and the
// complete-intersection curve built from it.
struct Genus4Spin3Instance {
  EllipticCurve curve;
  ECPoint tau;               // exact order 3
  std::array<ECPoint, 4> t;  // distinct, class sum tau
  std::vector<MultiPoly> pencil;   // degree-2 ideal of the embedded curve
  MultiPoly quadric;               // smooth pencil member cutting the curve
  std::vector<MultiPoly> contact_cubics;  // cubics meeting the curve
                                          // triply at every point of t
  MultiPoly cubic;  // the chosen member; the curve is V(quadric, cubic)
};

// Builds the instance, recording the forward checks. Throws
// search_exhausted_error when a genericity gate cannot be satisfied.
Genus4Spin3Instance genus4_spin3_instance(const Field& f, std::uint64_t seed,
                                          Resampler& rs, CheckReport& rep);

// Fiberwise rank checks on a built instance: the quadric pencil as a
// multiplication-map kernel of dimension 2, the dimension-4 count for the
// twisted degree-4 sections, and dimension 5 with vanishing h^1 for the
// cubics modulo quadric multiples.
void genus4_bundle_checks(const Genus4Spin3Instance& inst, CheckReport& rep);

// Reconstruction from the curve and its contact divisor alone: the quadrics
// doubly containing the divisor form a pencil recovering the degree-2 ideal,
// with the chosen quadric its unique member containing the curve.
void genus4_inverse_checks(const Genus4Spin3Instance& inst, CheckReport& rep);

CheckReport run_genus4_spin3(const Field& f, std::uint64_t seed,
                             std::size_t cap, bool with_inverse);

// ---- genus 4, odd theta characteristic -------------------------------------

// Field-level symbolic checks on the 10-dimensional tritangent system: its
// dimension, the single quadratic relation among the diagonal and pair
// conics, the full summand decomposition, the six-line divisor of the
// distinguished member, and faithfulness on a 2-dimensional summand.
void genus4_odd_invariant_checks(const Field& f, CheckReport& rep);

CheckReport run_genus4_odd_invariants(const Field& f);

// Samples a certified-smooth member of the tritangent system and checks the
// double contact with the diagonal at the three marked points.
CheckReport run_genus4_odd_sample(const Field& f, std::uint64_t seed,
                                  std::size_t cap, bool include_invariants);

// ---- genus 3, 4-spin --------------------------------------------------------

// Odd case: nodal (3,3) curves on P1 x P1. Samples a node position off the
// diagonal, builds the 5-dimensional system of curves with double contact
// at the marked points, a double point at the node, and triple ruling
// contact there; samples a member whose only singularity is that node; and
// checks the auxiliary plane-quartic system with conic and line tangencies.
CheckReport run_genus3_spin4_odd(const Field& f, std::uint64_t seed,
                                 std::size_t cap);

// Even case: plane quartics through a 4-torsion configuration on a cubic,
// with the section counts in degrees 4, 3, 2, the theta certificates on a
// sampled smooth quartic, and the torsion certificates on a pencil of
// cubics with a length-9 curvilinear base scheme.
CheckReport run_genus3_spin4_even(const Field& f, std::uint64_t seed,
                                  std::size_t cap);

// ---- trial runner -----------------------------------------------------------

struct PipelineSpec {
  std::string name;
  bool seeded;                 // false: one deterministic report
  double exhaust_tolerance;    // tolerated fraction of exhausted trials
};

// The selectable pipelines, in registry order. "all" expands to the four
// end-to-end pipelines (the roundtrip variant subsumes the plain forward
// run, and the sample variant carries the invariant checks).
const std::vector<PipelineSpec>& pipeline_registry();
std::vector<std::string> expand_selector(const std::string& selector);

CheckReport run_pipeline(const std::string& name, const Field& f,
                         std::uint64_t seed, std::size_t cap);

struct TrialBatch {
  std::string name;
  std::vector<CheckReport> trials;
  std::size_t passed = 0, failed = 0, exhausted = 0;
  bool within_tolerance = false;  // no logic failures, exhaustion rate ok
};

TrialBatch run_trials(const std::string& name, const Field& f,
                      std::uint64_t seed0, std::size_t trials,
                      std::size_t cap);

}  // namespace spinver
