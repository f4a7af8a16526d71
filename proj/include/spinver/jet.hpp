// Truncated power series arcs along curve branches.
//
// A CurveJet parametrizes a branch of a one-dimensional variety at a smooth
// point to a fixed truncation order: each ambient coordinate becomes a series
// in a local parameter s, computed by undetermined coefficients one order at
// a time against the defining equations. The Jacobian in the affine chart
// must have corank exactly one at the point; anything else raises
// singular_point_error. Vanishing orders of forms along a jet are exact up
// to the truncation order and reported as a lower bound past it.
#pragma once

#include <cstddef>
#include <vector>

#include "spinver/poly.hpp"

namespace spinver {

class TruncatedSeries {
 public:
  // The zero series with coefficients tracked for s^0 .. s^order.
  TruncatedSeries(const Field& f, std::size_t order);
  static TruncatedSeries constant(const Field& f, std::size_t order,
                                  const Scalar& c);

  const Field& field() const { return field_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const Scalar& coeff(std::size_t i) const;
  void set_coeff(std::size_t i, const Scalar& c);

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const Scalar& c) const;
  TruncatedSeries pow(std::size_t e) const;
  bool is_zero() const;

  // Index of the first nonzero coefficient, or order()+1 if all vanish.
  std::size_t valuation() const;

  std::string to_string() const;

 private:
  Field field_;
  std::vector<Scalar> coeffs_;
};

struct CurveJet {
  Ambient ambient;
  std::size_t trunc_order;
  std::vector<Scalar> center;            // normalized projective point
  std::vector<TruncatedSeries> coords;   // one series per ambient variable

  const Field& field() const { return center.front().field(); }
};

inline constexpr std::size_t kDefaultJetOrder = 8;

// Computes the branch of V(eqns) through the given point as a jet of the
// given truncation order. The point must satisfy every equation and be a
// smooth curve point there (affine Jacobian of corank exactly 1).
CurveJet curve_jet(const std::vector<MultiPoly>& eqns,
                   const std::vector<Scalar>& point,
                   std::size_t order = kDefaultJetOrder);

// Substitutes the jet into g and returns the resulting series.
TruncatedSeries evaluate_on_jet(const MultiPoly& g, const CurveJet& jet);

struct VanishingOrder {
  std::size_t order;
  bool exact;  // false: g vanished to the full truncation order, so the
               // true order is only known to be >= this value
};

VanishingOrder vanishing_order(const MultiPoly& g, const CurveJet& jet);

}  // namespace spinver
