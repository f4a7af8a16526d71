#include "spinver/jet.hpp"

#include <cassert>
#include <sstream>

#include "spinver/errors.hpp"
#include "spinver/matrix.hpp"

namespace spinver {

TruncatedSeries::TruncatedSeries(const Field& f, std::size_t order)
    : field_(f), coeffs_(order + 1, Scalar::zero(f)) {}

TruncatedSeries TruncatedSeries::constant(const Field& f, std::size_t order,
                                          const Scalar& c) {
  TruncatedSeries s(f, order);
  s.coeffs_[0] = c;
  return s;
}

const Scalar& TruncatedSeries::coeff(std::size_t i) const {
  assert(i < coeffs_.size());
  return coeffs_[i];
}

void TruncatedSeries::set_coeff(std::size_t i, const Scalar& c) {
  assert(i < coeffs_.size());
  coeffs_[i] = c;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  assert(coeffs_.size() == o.coeffs_.size());
  TruncatedSeries r(field_, order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  assert(coeffs_.size() == o.coeffs_.size());
  TruncatedSeries r(field_, order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  assert(coeffs_.size() == o.coeffs_.size());
  TruncatedSeries r(field_, order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < coeffs_.size(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Scalar& c) const {
  TruncatedSeries r(field_, order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] * c;
  return r;
}

TruncatedSeries TruncatedSeries::pow(std::size_t e) const {
  TruncatedSeries r = constant(field_, order(), Scalar::one(field_));
  for (std::size_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool TruncatedSeries::is_zero() const {
  for (const Scalar& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

std::size_t TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return i;
  return coeffs_.size();
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (any) os << " + ";
    os << coeffs_[i].to_string();
    if (i > 0) os << "*s^" << i;
    any = true;
  }
  if (!any) os << "0";
  os << " + O(s^" << coeffs_.size() << ")";
  return os.str();
}

namespace {

// Affine chart data for a normalized point: which variables are frozen at
// their (unit) value and which remain unknowns.
struct Chart {
  std::vector<std::size_t> fixed;     // variable indices held constant
  std::vector<std::size_t> unknowns;  // remaining variable indices
};

Chart chart_at(Ambient amb, const std::vector<Scalar>& pt) {
  Chart ch;
  auto pick = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      if (!pt[i].is_zero()) {
        ch.fixed.push_back(i);
        for (std::size_t j = from; j < to; ++j)
          if (j != i) ch.unknowns.push_back(j);
        return;
      }
    }
    throw invalid_argument_error("chart_at: zero coordinate block");
  };
  if (amb == Ambient::P1xP1) {
    pick(0, 2);
    pick(2, 4);
  } else {
    pick(0, num_vars(amb));
  }
  return ch;
}

}  // namespace

CurveJet curve_jet(const std::vector<MultiPoly>& eqns,
                   const std::vector<Scalar>& point, std::size_t order) {
  if (eqns.empty()) throw invalid_argument_error("curve_jet: no equations");
  const Field& f = eqns.front().field();
  Ambient amb = eqns.front().ambient();
  std::size_t n = num_vars(amb);
  for (const auto& e : eqns)
    if (e.field() != f || e.ambient() != amb)
      throw invalid_argument_error("curve_jet: mixed equation types");

  std::vector<Scalar> pt = amb == Ambient::P1xP1
                               ? normalize_p1xp1(point)
                               : normalize_projective(point);
  for (const auto& e : eqns)
    if (!e.evaluate(pt).is_zero())
      throw invalid_argument_error(
          "curve_jet: point does not lie on the variety");

  Chart ch = chart_at(amb, pt);
  const std::size_t m = ch.unknowns.size();

  // Affine Jacobian at the point: rows equations, columns unknown variables.
  Matrix jac(f, eqns.size(), m);
  for (std::size_t k = 0; k < eqns.size(); ++k)
    for (std::size_t i = 0; i < m; ++i)
      jac.at(k, i) = eqns[k].derivative(ch.unknowns[i]).evaluate(pt);

  std::vector<std::vector<Scalar>> tangent = kernel_basis(jac);
  if (tangent.size() != 1) {
    std::ostringstream os;
    os << "curve_jet: Jacobian corank " << tangent.size() << " at "
       << point_to_string(amb, pt) << ", need a smooth curve point (corank 1)";
    throw singular_point_error(os.str());
  }

  // Local parameter: the first unknown moving along the tangent direction.
  std::size_t param = m;
  for (std::size_t i = 0; i < m; ++i)
    if (!tangent[0][i].is_zero()) { param = i; break; }
  assert(param < m);

  // The remaining unknown columns of the Jacobian are independent; they form
  // the fixed linear system solved at every order.
  std::vector<std::size_t> solve_cols;
  for (std::size_t i = 0; i < m; ++i)
    if (i != param) solve_cols.push_back(i);
  Matrix js(f, eqns.size(), solve_cols.size());
  for (std::size_t k = 0; k < eqns.size(); ++k)
    for (std::size_t i = 0; i < solve_cols.size(); ++i)
      js.at(k, i) = jac.at(k, solve_cols[i]);
  if (rank(js) != solve_cols.size())
    throw singular_point_error(
        "curve_jet: degenerate tangent data at " + point_to_string(amb, pt));

  CurveJet jet;
  jet.ambient = amb;
  jet.trunc_order = order;
  jet.center = pt;
  for (std::size_t i = 0; i < n; ++i)
    jet.coords.push_back(TruncatedSeries::constant(f, order, pt[i]));
  jet.coords[ch.unknowns[param]].set_coeff(1, Scalar::one(f));

  // Undetermined coefficients: at order r the residual of each equation is
  // b_r + J' c_r with J' the frozen Jacobian block, so solve J' c_r = -b_r.
  // Order 1 recovers the tangent direction normalized to the parameter.
  for (std::size_t r = 1; r <= order; ++r) {
    std::vector<Scalar> b(eqns.size(), Scalar::zero(f));
    bool all_zero = true;
    for (std::size_t k = 0; k < eqns.size(); ++k) {
      TruncatedSeries val = evaluate_on_jet(eqns[k], jet);
      b[k] = val.coeff(r);
      if (!b[k].is_zero()) all_zero = false;
    }
    if (all_zero) continue;
    for (Scalar& s : b) s = -s;
    std::optional<std::vector<Scalar>> c = solve(js, b);
    if (!c)
      throw singular_point_error(
          "curve_jet: inconsistent branch equations at order " +
          std::to_string(r));
    for (std::size_t i = 0; i < solve_cols.size(); ++i)
      jet.coords[ch.unknowns[solve_cols[i]]].set_coeff(r, (*c)[i]);
  }

  // Self check: every equation vanishes along the jet to full order.
  for (const auto& e : eqns)
    if (!evaluate_on_jet(e, jet).is_zero())
      throw singular_point_error(
          "curve_jet: branch series fails to satisfy the equations");
  return jet;
}

TruncatedSeries evaluate_on_jet(const MultiPoly& g, const CurveJet& jet) {
  if (g.ambient() != jet.ambient)
    throw invalid_argument_error("evaluate_on_jet: ambient mismatch");
  const Field& f = g.field();
  TruncatedSeries acc(f, jet.trunc_order);
  for (const auto& [m, c] : g.terms()) {
    TruncatedSeries t = TruncatedSeries::constant(f, jet.trunc_order, c);
    for (std::size_t i = 0; i < jet.coords.size(); ++i)
      if (m[i] != 0) t = t * jet.coords[i].pow(m[i]);
    acc = acc + t;
  }
  return acc;
}

VanishingOrder vanishing_order(const MultiPoly& g, const CurveJet& jet) {
  TruncatedSeries s = evaluate_on_jet(g, jet);
  std::size_t v = s.valuation();
  if (v > jet.trunc_order) return VanishingOrder{jet.trunc_order + 1, false};
  return VanishingOrder{v, true};
}

}  // namespace spinver
