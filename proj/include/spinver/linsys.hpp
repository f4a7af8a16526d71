// Linear systems of forms cut out by geometric conditions, and the exact
// multiplication-map kernels used for quadratic relations.
//
// A condition contributes rows to an exact matrix over the monomial basis of
// the requested degree: prescribed vanishing order along a curve jet, point
// multiplicity via chart partials, or proportionality of a ruling
// restriction to a fixed binary form (linearized through cross products).
// After the kernel is computed every solution is rechecked against every
// condition through an independent evaluation path, so a wrong row build
// cannot slip through as a wrong dimension count.
#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "spinver/jet.hpp"
#include "spinver/poly.hpp"

namespace spinver {

// Vanishing order >= order along the jet of a curve branch.
struct JetVanishing {
  CurveJet jet;
  std::size_t order;
};

// Multiplicity >= multiplicity at the point: all chart partial derivatives
// of total order < multiplicity vanish there.
struct PointMultiplicity {
  std::vector<Scalar> point;
  std::size_t multiplicity;
};

// On P1xP1: the restriction to the ruling obtained by freezing one factor
// at the given point must be proportional to the target binary form.
struct RulingProportional {
  int fixed_factor;
  std::array<Scalar, 2> point;
  std::vector<Scalar> target;
};

using LinearCondition =
    std::variant<JetVanishing, PointMultiplicity, RulingProportional>;

struct LinearSystem {
  std::vector<Monomial> basis;      // monomial basis of the ambient degree
  std::size_t condition_rank;       // rank of the assembled condition matrix
  std::vector<MultiPoly> solutions; // canonical basis of the solution space

  std::size_t dimension() const { return solutions.size(); }
};

// Solves for all forms of the given degree satisfying every condition.
LinearSystem solve_conditions(const Field& f, Ambient amb,
                              const Multidegree& d,
                              const std::vector<LinearCondition>& conds);

// Verifies one form against one condition (the recheck path).
bool satisfies_condition(const MultiPoly& g, const LinearCondition& cond);

// ---- multiplication map kernels --------------------------------------------

struct Sym2Kernel {
  // Index pairs (i <= j) enumerating the Sym^2 basis v_i v_j.
  std::vector<std::pair<std::size_t, std::size_t>> pair_basis;
  // Kernel vectors in pair_basis coordinates, canonical echelon basis.
  std::vector<std::vector<Scalar>> kernel;
};

// Kernel of Sym^2(span v) -> forms of doubled degree, v given as polynomials.
Sym2Kernel sym2_kernel(const std::vector<MultiPoly>& v);

// Same kernel computed from evaluation columns: entry k of column i is the
// value of function i at sample point k, products taken pointwise. Exact
// provided the sample separates the products (caller supplies enough points).
Sym2Kernel sym2_kernel_columns(const Field& f,
                               const std::vector<std::vector<Scalar>>& cols);

// ---- restriction divisors --------------------------------------------------

struct DivisorPoint {
  std::vector<Scalar> point;
  std::size_t order;
  bool exact;
};

struct RestrictionDivisor {
  std::vector<DivisorPoint> points;  // only points of positive order
  std::size_t total;                 // sum of the listed orders
  // True when every order is exact and the total equals the expected
  // intersection number, certifying no intersection point was missed.
  bool accounts_for_expected;
};

// Divisor cut on the curve V(curve_eqns) by g, probed at the candidate
// points. Throws identically_zero_error when g lies in the ideal of the
// curve (the restriction is the zero section, not a divisor).
RestrictionDivisor restriction_divisor(
    const MultiPoly& g, const std::vector<MultiPoly>& curve_eqns,
    const std::vector<std::vector<Scalar>>& candidate_points,
    std::size_t expected_total, std::size_t jet_order = kDefaultJetOrder);

}  // namespace spinver
