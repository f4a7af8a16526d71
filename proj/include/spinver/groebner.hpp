// Groebner machinery for the ideal-theoretic certificates: membership,
// graded pieces, projective emptiness, and singular loci of hypersurfaces.
//
// GPoly is a plain (not multigraded) sparse polynomial in at most four
// variables with a fixed monomial order per polynomial. Bases come from
// Buchberger's algorithm with the Gebauer-Moeller pair criteria and are
// fully reduced, monic, and deterministically sorted, so identical input
// always yields the identical basis.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spinver/poly.hpp"

namespace spinver {

enum class MonomialOrder { DegRevLex, Lex };

int total_degree(const Monomial& m, std::size_t nvars);

// Strict "a comes before b" in the descending term order.
bool monomial_greater(const Monomial& a, const Monomial& b, MonomialOrder ord,
                      std::size_t nvars);

class GPoly {
 public:
  GPoly(const Field& f, std::size_t nvars, MonomialOrder ord);
  static GPoly from_multipoly(const MultiPoly& p,
                              MonomialOrder ord = MonomialOrder::DegRevLex);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  // Terms in strictly descending order; first entry is the leading term.
  const std::vector<std::pair<Monomial, Scalar>>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  const Monomial& leading_monomial() const;
  const Scalar& leading_coefficient() const;

  void add_term(const Monomial& m, const Scalar& c);
  GPoly operator+(const GPoly& o) const;
  GPoly operator-(const GPoly& o) const;
  GPoly operator*(const GPoly& o) const;
  GPoly scaled(const Scalar& c) const;
  // Multiplies by c * x^m.
  GPoly times_term(const Monomial& m, const Scalar& c) const;
  bool operator==(const GPoly& o) const;

  GPoly monic() const;
  GPoly with_order(MonomialOrder ord) const;
  GPoly derivative(std::size_t var) const;
  GPoly substitute_value(std::size_t var, const Scalar& v) const;
  Scalar evaluate(const std::vector<Scalar>& pt) const;

  int degree() const;  // total degree, -1 for zero
  bool is_homogeneous() const;

  // Converts back to a graded polynomial; every term must carry the same
  // multidegree on the target ambient.
  MultiPoly to_multipoly(Ambient amb) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<std::pair<Monomial, Scalar>> terms_;
};

// Reduced Groebner basis (monic, inter-reduced, sorted by descending
// leading monomial). All generators must share field, nvars and order.
std::vector<GPoly> groebner_basis(std::vector<GPoly> gens);

// Full normal form: no term of the result is divisible by any basis
// leading monomial.
GPoly normal_form(GPoly f, const std::vector<GPoly>& basis);

bool ideal_member(const GPoly& f, const std::vector<GPoly>& basis);

// All monomials of the given total degree in nvars variables, descending lex.
std::vector<Monomial> straight_monomials(std::size_t nvars, int degree);

// Canonical basis of the degree-d piece of the ideal generated by the given
// homogeneous polynomials (the span of all monomial multiples).
std::vector<GPoly> graded_piece(const std::vector<GPoly>& gens, int degree);

enum class Emptiness { EMPTY, NONEMPTY, INDETERMINATE };

struct EmptinessResult {
  Emptiness decision;
  // Smallest k with every variable power v_i^k in the ideal when the direct
  // probe succeeded; 0 when the leading-term criterion decided instead.
  std::size_t power_certificate;
};

// Decides whether homogeneous generators cut out the empty set in projective
// space: first probes normal forms of pure variable powers up to a small
// exponent cap, then falls back on the complete criterion that the quotient
// is Artinian exactly when every variable has a pure-power leading term in
// the reduced basis.
EmptinessResult is_projectively_empty(const std::vector<GPoly>& gens);

struct SolutionSet {
  std::vector<std::vector<Scalar>> points;
  // True when every eliminant split into linear factors, i.e. the rational
  // points listed are all points over the algebraic closure.
  bool all_points_rational;
};

// All solutions of a zero-dimensional affine system in the given variables.
// Raises nonreduced_error when the solution set has positive dimension.
SolutionSet solve_affine(const std::vector<GPoly>& gens,
                         const std::vector<std::size_t>& vars);

// Singular points of the hypersurface cut out by f on its ambient, via the
// Jacobian ideal chart by chart. Points are normalized and sorted; the
// completeness flag is inherited from the chart solves.
SolutionSet singular_points(const MultiPoly& f);

}  // namespace spinver
