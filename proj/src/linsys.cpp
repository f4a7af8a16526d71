#include "spinver/linsys.hpp"

#include <algorithm>
#include <cassert>

#include "spinver/errors.hpp"
#include "spinver/groebner.hpp"
#include "spinver/matrix.hpp"

namespace spinver {

namespace {

// Active (chart) variables at a normalized point: drop the first nonzero
// coordinate of each block.
std::vector<std::size_t> chart_active_vars(Ambient amb,
                                           const std::vector<Scalar>& pt) {
  std::vector<std::size_t> active;
  auto pick = [&](std::size_t from, std::size_t to) {
    std::size_t fixed = to;
    for (std::size_t i = from; i < to; ++i)
      if (!pt[i].is_zero()) { fixed = i; break; }
    if (fixed == to)
      throw invalid_argument_error("point has a zero coordinate block");
    for (std::size_t i = from; i < to; ++i)
      if (i != fixed) active.push_back(i);
  };
  if (amb == Ambient::P1xP1) {
    pick(0, 2);
    pick(2, 4);
  } else {
    pick(0, num_vars(amb));
  }
  return active;
}

// Multi-indices over the active variables with total order <= cap,
// ascending by total order then lex. The zero index is included.
std::vector<std::vector<std::size_t>> partial_indices(
    const std::vector<std::size_t>& active, std::size_t cap) {
  std::vector<std::vector<std::size_t>> out;
  if (active.empty()) return out;
  std::vector<std::size_t> tmp(active.size(), 0);
  for (std::size_t total = 0; total <= cap; ++total) {
    auto rec = [&](auto&& self, std::size_t idx, std::size_t rem) -> void {
      if (idx + 1 == active.size()) {
        tmp[idx] = rem;
        out.push_back(tmp);
        return;
      }
      for (std::size_t v = 0; v <= rem; ++v) {
        tmp[idx] = v;
        self(self, idx + 1, rem - v);
      }
    };
    rec(rec, 0, total);
  }
  return out;
}

MultiPoly iterated_derivative(const MultiPoly& g,
                              const std::vector<std::size_t>& active,
                              const std::vector<std::size_t>& alpha) {
  MultiPoly d = g;
  for (std::size_t i = 0; i < active.size(); ++i)
    for (std::size_t k = 0; k < alpha[i]; ++k) d = d.derivative(active[i]);
  return d;
}

std::vector<Scalar> normalize_for(Ambient amb, std::vector<Scalar> pt) {
  return amb == Ambient::P1xP1 ? normalize_p1xp1(std::move(pt))
                               : normalize_projective(std::move(pt));
}

}  // namespace

bool satisfies_condition(const MultiPoly& g, const LinearCondition& cond) {
  if (std::holds_alternative<JetVanishing>(cond)) {
    const auto& c = std::get<JetVanishing>(cond);
    VanishingOrder v = vanishing_order(g, c.jet);
    return v.order >= c.order;
  }
  if (std::holds_alternative<PointMultiplicity>(cond)) {
    const auto& c = std::get<PointMultiplicity>(cond);
    std::vector<Scalar> pt = normalize_for(g.ambient(), c.point);
    std::vector<std::size_t> active = chart_active_vars(g.ambient(), pt);
    for (const auto& alpha : partial_indices(active, c.multiplicity - 1)) {
      if (!iterated_derivative(g, active, alpha).evaluate(pt).is_zero())
        return false;
    }
    return true;
  }
  const auto& c = std::get<RulingProportional>(cond);
  std::vector<Scalar> r = restrict_to_ruling(g, c.fixed_factor, c.point);
  if (r.size() != c.target.size()) return false;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (!(c.target[i] * r[j] - c.target[j] * r[i]).is_zero()) return false;
  return true;
}

LinearSystem solve_conditions(const Field& f, Ambient amb,
                              const Multidegree& d,
                              const std::vector<LinearCondition>& conds) {
  std::vector<Monomial> basis = monomial_basis(amb, d);
  std::vector<MultiPoly> basis_polys;
  basis_polys.reserve(basis.size());
  for (const Monomial& m : basis)
    basis_polys.push_back(MultiPoly::from_term(f, amb, m, Scalar::one(f)));

  std::vector<std::vector<Scalar>> rows;
  for (const LinearCondition& cond : conds) {
    if (std::holds_alternative<JetVanishing>(cond)) {
      const auto& c = std::get<JetVanishing>(cond);
      if (c.jet.ambient != amb || c.jet.field() != f)
        throw invalid_argument_error("solve_conditions: jet type mismatch");
      if (c.order > c.jet.trunc_order)
        throw invalid_argument_error(
            "solve_conditions: requested order exceeds jet truncation");
      std::vector<TruncatedSeries> series;
      series.reserve(basis.size());
      for (const auto& bp : basis_polys)
        series.push_back(evaluate_on_jet(bp, c.jet));
      for (std::size_t r = 0; r < c.order; ++r) {
        std::vector<Scalar> row(basis.size(), Scalar::zero(f));
        for (std::size_t k = 0; k < basis.size(); ++k)
          row[k] = series[k].coeff(r);
        rows.push_back(std::move(row));
      }
    } else if (std::holds_alternative<PointMultiplicity>(cond)) {
      const auto& c = std::get<PointMultiplicity>(cond);
      if (c.multiplicity == 0)
        throw invalid_argument_error(
            "solve_conditions: zero multiplicity condition");
      std::vector<Scalar> pt = normalize_for(amb, c.point);
      std::vector<std::size_t> active = chart_active_vars(amb, pt);
      for (const auto& alpha : partial_indices(active, c.multiplicity - 1)) {
        std::vector<Scalar> row(basis.size(), Scalar::zero(f));
        for (std::size_t k = 0; k < basis.size(); ++k)
          row[k] =
              iterated_derivative(basis_polys[k], active, alpha).evaluate(pt);
        rows.push_back(std::move(row));
      }
    } else {
      const auto& c = std::get<RulingProportional>(cond);
      if (amb != Ambient::P1xP1)
        throw invalid_argument_error(
            "solve_conditions: ruling conditions need P1xP1");
      bool target_zero = true;
      for (const Scalar& t : c.target)
        if (!t.is_zero()) target_zero = false;
      if (target_zero)
        throw invalid_argument_error(
            "solve_conditions: proportionality target is zero");
      std::vector<std::vector<Scalar>> restr;
      restr.reserve(basis.size());
      for (const auto& bp : basis_polys)
        restr.push_back(restrict_to_ruling(bp, c.fixed_factor, c.point));
      std::size_t len = restr.front().size();
      if (c.target.size() != len)
        throw invalid_argument_error(
            "solve_conditions: target length does not match the ruling degree");
      for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) {
          std::vector<Scalar> row(basis.size(), Scalar::zero(f));
          for (std::size_t k = 0; k < basis.size(); ++k)
            row[k] = c.target[i] * restr[k][j] - c.target[j] * restr[k][i];
          rows.push_back(std::move(row));
        }
    }
  }

  LinearSystem out;
  out.basis = basis;
  if (rows.empty()) {
    out.condition_rank = 0;
    for (const auto& bp : basis_polys) out.solutions.push_back(bp);
    return out;
  }

  Matrix m = Matrix::from_rows(f, rows);
  std::vector<std::vector<Scalar>> ker = kernel_basis(m);
  out.condition_rank = basis.size() - ker.size();
  assert(out.condition_rank == rank(m));
  for (const auto& v : ker)
    out.solutions.push_back(
        MultiPoly::from_coefficient_vector(f, amb, d, basis, v));

  // Defensive recheck through the direct evaluation path.
  for (const auto& sol : out.solutions)
    for (const auto& cond : conds)
      if (!satisfies_condition(sol, cond))
        throw error(
            "solve_conditions: a solution fails its defining conditions");
  return out;
}

Sym2Kernel sym2_kernel(const std::vector<MultiPoly>& v) {
  if (v.empty()) throw invalid_argument_error("sym2_kernel: empty basis");
  const Field& f = v.front().field();
  Ambient amb = v.front().ambient();
  Multidegree d = v.front().degree();
  for (const auto& p : v)
    if (p.field() != f || p.ambient() != amb || p.degree() != d)
      throw invalid_argument_error("sym2_kernel: mixed basis types");

  Multidegree dd = amb == Ambient::P1xP1 ? bideg(2 * d.a, 2 * d.b)
                                         : deg(2 * d.a);
  std::vector<Monomial> mono2 = monomial_basis(amb, dd);

  Sym2Kernel out;
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j) {
      out.pair_basis.push_back({i, j});
      cols.push_back((v[i] * v[j]).coefficient_vector(mono2));
    }

  Matrix m(f, mono2.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < mono2.size(); ++r) m.at(r, c) = cols[c][r];
  out.kernel = kernel_basis(m);

  // Recheck: each kernel vector gives a vanishing quadratic combination.
  for (const auto& kv : out.kernel) {
    MultiPoly acc(f, amb, dd);
    for (std::size_t c = 0; c < out.pair_basis.size(); ++c) {
      if (kv[c].is_zero()) continue;
      auto [i, j] = out.pair_basis[c];
      acc = acc + (v[i] * v[j]).scaled(kv[c]);
    }
    if (!acc.is_zero())
      throw error("sym2_kernel: kernel vector fails the product identity");
  }
  return out;
}

Sym2Kernel sym2_kernel_columns(const Field& f,
                               const std::vector<std::vector<Scalar>>& cols) {
  if (cols.empty())
    throw invalid_argument_error("sym2_kernel_columns: empty basis");
  std::size_t len = cols.front().size();
  for (const auto& c : cols)
    if (c.size() != len)
      throw invalid_argument_error("sym2_kernel_columns: ragged columns");

  Sym2Kernel out;
  std::vector<std::vector<Scalar>> prods;
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i; j < cols.size(); ++j) {
      out.pair_basis.push_back({i, j});
      std::vector<Scalar> p(len, Scalar::zero(f));
      for (std::size_t k = 0; k < len; ++k) p[k] = cols[i][k] * cols[j][k];
      prods.push_back(std::move(p));
    }
  Matrix m(f, len, prods.size());
  for (std::size_t c = 0; c < prods.size(); ++c)
    for (std::size_t r = 0; r < len; ++r) m.at(r, c) = prods[c][r];
  out.kernel = kernel_basis(m);
  return out;
}

RestrictionDivisor restriction_divisor(
    const MultiPoly& g, const std::vector<MultiPoly>& curve_eqns,
    const std::vector<std::vector<Scalar>>& candidate_points,
    std::size_t expected_total, std::size_t jet_order) {
  if (curve_eqns.empty())
    throw invalid_argument_error("restriction_divisor: no curve equations");
  Ambient amb = g.ambient();

  // The restriction must not be the zero section.
  std::vector<GPoly> gens;
  for (const auto& e : curve_eqns) gens.push_back(GPoly::from_multipoly(e));
  std::vector<GPoly> gb = groebner_basis(gens);
  if (ideal_member(GPoly::from_multipoly(g), gb))
    throw identically_zero_error(
        "restriction_divisor: the form vanishes on the whole curve");

  RestrictionDivisor out;
  out.total = 0;
  out.accounts_for_expected = true;

  std::vector<std::vector<Scalar>> pts;
  for (const auto& p : candidate_points) {
    std::vector<Scalar> np = normalize_for(amb, p);
    bool dup = false;
    for (const auto& q : pts)
      if (q == np) { dup = true; break; }
    if (!dup) pts.push_back(np);
  }

  for (const auto& p : pts) {
    for (const auto& e : curve_eqns)
      if (!e.evaluate(p).is_zero())
        throw invalid_argument_error(
            "restriction_divisor: candidate point is not on the curve");
    CurveJet jet = curve_jet(curve_eqns, p, jet_order);
    VanishingOrder v = vanishing_order(g, jet);
    if (v.order == 0) continue;
    out.points.push_back(DivisorPoint{p, v.order, v.exact});
    out.total += v.order;
    if (!v.exact) out.accounts_for_expected = false;
  }
  if (out.total != expected_total) out.accounts_for_expected = false;
  return out;
}

}  // namespace spinver
