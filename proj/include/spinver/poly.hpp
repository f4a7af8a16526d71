// Sparse exact polynomials on the three ambient spaces the toolkit works in:
// the quadric surface model P1 x P1 (variables x0, x1, y0, y1 with a
// bidegree), the plane P2 (x0, x1, x2), and P3 (z0, z1, z2, z3).
//
// A polynomial stores only nonzero terms, keyed by exponent tuples in a
// sorted map, and always knows its (multi)degree; construction and every
// arithmetic operation validate homogeneity. Monomial bases are emitted in
// descending lexicographic exponent order, which fixes the coordinate
// conventions used by all dimension counts downstream.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinver/field.hpp"

namespace spinver {

enum class Ambient { P1xP1, P2, P3 };

std::size_t num_vars(Ambient a);  // 4, 3, 4
std::string ambient_name(Ambient a);
Ambient ambient_from_name(const std::string& s);
const std::vector<std::string>& var_names(Ambient a);

// Bidegree (a, b) on P1 x P1; plain degree a (b unused, kept 0) otherwise.
struct Multidegree {
  int a = 0;
  int b = 0;
  bool operator==(const Multidegree& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Multidegree& o) const { return !(*this == o); }
};

inline Multidegree bideg(int a, int b) { return Multidegree{a, b}; }
inline Multidegree deg(int d) { return Multidegree{d, 0}; }
std::string degree_to_string(Ambient amb, const Multidegree& d);

// Exponent tuple over the ambient's variables; trailing entries unused for P2.
using Monomial = std::array<std::uint8_t, 4>;

Multidegree monomial_degree(Ambient amb, const Monomial& m);

// All monomials of the given degree, in descending lex order (so e.g. on P2,
// degree 2: x0^2, x0 x1, x0 x2, x1^2, x1 x2, x2^2).
std::vector<Monomial> monomial_basis(Ambient amb, const Multidegree& d);

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, std::greater<Monomial>>;

  // The zero polynomial of the given degree.
  MultiPoly(const Field& f, Ambient amb, const Multidegree& d);

  static MultiPoly from_term(const Field& f, Ambient amb, const Monomial& m,
                             const Scalar& c);

  const Field& field() const { return field_; }
  Ambient ambient() const { return ambient_; }
  const Multidegree& degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * m into this polynomial; the monomial must match the degree.
  void add_term(const Monomial& m, const Scalar& c);
  Scalar coefficient(const Monomial& m) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;  // degrees add
  MultiPoly operator-() const;
  MultiPoly scaled(const Scalar& c) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  Scalar evaluate(const std::vector<Scalar>& pt) const;
  MultiPoly derivative(std::size_t var) const;

  // Substitutes var i -> the linear form with coefficient vector lin[i]
  // (over all ambient variables). The result must come out homogeneous;
  // its degree is recomputed from the terms (a factor swap on P1 x P1
  // exchanges the two degree components).
  MultiPoly substitute_linear(
      const std::vector<std::vector<Scalar>>& lin) const;

  // Coefficients in the given monomial basis (for linear algebra).
  std::vector<Scalar> coefficient_vector(
      const std::vector<Monomial>& basis) const;
  static MultiPoly from_coefficient_vector(const Field& f, Ambient amb,
                                           const Multidegree& d,
                                           const std::vector<Monomial>& basis,
                                           const std::vector<Scalar>& coeffs);

  // Normalizes to leading coefficient 1 (descending lex leading term).
  MultiPoly monic() const;

  std::string to_string() const;
  nlohmann::ordered_json to_json() const;
  static MultiPoly from_json(const Field& f, const nlohmann::ordered_json& j);

 private:
  Field field_;
  Ambient ambient_;
  Multidegree degree_;
  TermMap terms_;
};

// ---- projective points -----------------------------------------------------

// Scales so the first nonzero coordinate is 1; rejects the zero vector.
std::vector<Scalar> normalize_projective(std::vector<Scalar> pt);

// A point of P1 x P1 as a 4-vector (x0, x1, y0, y1), each factor normalized
// separately.
std::vector<Scalar> normalize_p1xp1(std::vector<Scalar> pt);

// Concatenates two P1 points into a normalized P1 x P1 point.
std::vector<Scalar> p1xp1_point(const std::array<Scalar, 2>& x,
                                const std::array<Scalar, 2>& y);

std::string point_to_string(Ambient amb, const std::vector<Scalar>& pt);

// ---- restriction to lines and rulings --------------------------------------

// Binary form f(s, t) obtained by restricting along the parametrized line
// { s A + t B }; entry i is the coefficient of s^(d-i) t^i.
std::vector<Scalar> restrict_to_line(const MultiPoly& f,
                                     const std::vector<Scalar>& A,
                                     const std::vector<Scalar>& B);

// On P1 x P1, fixes one factor at the given P1 point and returns the binary
// form in the other factor's variables. fixed_factor 0 fixes (x0, x1).
std::vector<Scalar> restrict_to_ruling(const MultiPoly& f, int fixed_factor,
                                       const std::array<Scalar, 2>& pt);

// ---- splitting binary forms ------------------------------------------------

struct LinearFactor {
  std::array<Scalar, 2> point;  // normalized P1 root (u : v)
  std::size_t multiplicity;
};

struct FactorResult {
  std::vector<LinearFactor> factors;  // deterministic order
  bool fully_split;                   // multiplicities sum to the degree
};

// Finds the roots in P1 of a nonzero binary form given by its coefficient
// vector (entry i multiplies u^(d-i) v^i). Over a prime field this scans all
// of P1 (the field must have at most 2^17 elements); over the rationals it
// runs a rational root test, so fully_split false only means no further
// rational roots.
FactorResult linear_factors(const Field& f, const std::vector<Scalar>& coeffs);

}  // namespace spinver
