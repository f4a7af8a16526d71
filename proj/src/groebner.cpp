#include "spinver/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "spinver/errors.hpp"
#include "spinver/matrix.hpp"

namespace spinver {

int total_degree(const Monomial& m, std::size_t nvars) {
  int d = 0;
  for (std::size_t i = 0; i < nvars; ++i) d += int(m[i]);
  return d;
}

bool monomial_greater(const Monomial& a, const Monomial& b, MonomialOrder ord,
                      std::size_t nvars) {
  if (ord == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < nvars; ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
  int da = total_degree(a, nvars), db = total_degree(b, nvars);
  if (da != db) return da > db;
  // Descending reverse-lex tie break: last differing exponent smaller wins.
  for (std::size_t i = nvars; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

namespace {

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < 4; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_quot(const Monomial& a, const Monomial& b) {  // a / b
  Monomial r;
  for (int i = 0; i < 4; ++i) r[i] = std::uint8_t(a[i] - b[i]);
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < 4; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < 4; ++i) r[i] = std::uint8_t(a[i] + b[i]);
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < 4; ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

bool mono_eq(const Monomial& a, const Monomial& b) { return a == b; }

}  // namespace

GPoly::GPoly(const Field& f, std::size_t nvars, MonomialOrder ord)
    : field_(f), nvars_(nvars), order_(ord) {
  if (nvars_ == 0 || nvars_ > 4)
    throw invalid_argument_error("GPoly: variable count out of range");
}

GPoly GPoly::from_multipoly(const MultiPoly& p, MonomialOrder ord) {
  GPoly g(p.field(), num_vars(p.ambient()), ord);
  for (const auto& [m, c] : p.terms()) g.add_term(m, c);
  return g;
}

const Monomial& GPoly::leading_monomial() const {
  if (terms_.empty()) throw invalid_argument_error("leading term of zero");
  return terms_.front().first;
}

const Scalar& GPoly::leading_coefficient() const {
  if (terms_.empty()) throw invalid_argument_error("leading term of zero");
  return terms_.front().second;
}

void GPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.field() != field_)
    throw field_mismatch_error("GPoly::add_term: wrong coefficient field");
  if (c.is_zero()) return;
  for (std::size_t i = nvars_; i < 4; ++i)
    if (m[i] != 0)
      throw invalid_argument_error("GPoly::add_term: variable out of range");
  auto cmp = [&](const std::pair<Monomial, Scalar>& t, const Monomial& mm) {
    return monomial_greater(t.first, mm, order_, nvars_);
  };
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, cmp);
  if (it != terms_.end() && mono_eq(it->first, m)) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {m, c});
  }
}

GPoly GPoly::operator+(const GPoly& o) const {
  if (field_ != o.field_ || nvars_ != o.nvars_ || order_ != o.order_)
    throw invalid_argument_error("GPoly sum: incompatible polynomials");
  GPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

GPoly GPoly::operator-(const GPoly& o) const {
  if (field_ != o.field_ || nvars_ != o.nvars_ || order_ != o.order_)
    throw invalid_argument_error("GPoly difference: incompatible polynomials");
  GPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

GPoly GPoly::operator*(const GPoly& o) const {
  if (field_ != o.field_ || nvars_ != o.nvars_ || order_ != o.order_)
    throw invalid_argument_error("GPoly product: incompatible polynomials");
  GPoly r(field_, nvars_, order_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
  return r;
}

GPoly GPoly::scaled(const Scalar& c) const {
  GPoly r(field_, nvars_, order_);
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : terms_) r.terms_.push_back({m, cc * c});
  return r;
}

GPoly GPoly::times_term(const Monomial& m, const Scalar& c) const {
  GPoly r(field_, nvars_, order_);
  if (c.is_zero()) return r;
  for (const auto& [mm, cc] : terms_)
    r.terms_.push_back({mono_mul(mm, m), cc * c});
  return r;
}

bool GPoly::operator==(const GPoly& o) const {
  return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

GPoly GPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(leading_coefficient().inverse());
}

GPoly GPoly::with_order(MonomialOrder ord) const {
  GPoly r(field_, nvars_, ord);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

GPoly GPoly::derivative(std::size_t var) const {
  if (var >= nvars_)
    throw invalid_argument_error("GPoly::derivative: variable out of range");
  GPoly r(field_, nvars_, order_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial mm = m;
    mm[var] -= 1;
    r.add_term(mm, c * Scalar::from_int(field_, m[var]));
  }
  return r;
}

GPoly GPoly::substitute_value(std::size_t var, const Scalar& v) const {
  if (var >= nvars_)
    throw invalid_argument_error("GPoly::substitute_value: variable out of range");
  GPoly r(field_, nvars_, order_);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm[var] = 0;
    r.add_term(mm, c * v.pow(m[var]));
  }
  return r;
}

Scalar GPoly::evaluate(const std::vector<Scalar>& pt) const {
  if (pt.size() != nvars_)
    throw invalid_argument_error("GPoly::evaluate: wrong coordinate count");
  Scalar acc = Scalar::zero(field_);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i] != 0) t *= pt[i].pow(m[i]);
    acc += t;
  }
  return acc;
}

int GPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m, nvars_));
  return d;
}

bool GPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.front().first, nvars_);
  for (const auto& [m, c] : terms_)
    if (total_degree(m, nvars_) != d) return false;
  return true;
}

MultiPoly GPoly::to_multipoly(Ambient amb) const {
  if (num_vars(amb) != nvars_)
    throw invalid_argument_error("to_multipoly: ambient variable count differs");
  if (terms_.empty()) return MultiPoly(field_, amb, deg(0));
  Multidegree d = monomial_degree(amb, terms_.front().first);
  MultiPoly p(field_, amb, d);
  for (const auto& [m, c] : terms_) p.add_term(m, c);
  return p;
}

std::string GPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      os << "*v" << i;
      if (m[i] > 1) os << "^" << int(m[i]);
    }
  }
  return os.str();
}

GPoly normal_form(GPoly f, const std::vector<GPoly>& basis) {
  GPoly r(f.field(), f.nvars(), f.order());
  while (!f.is_zero()) {
    const Monomial& lm = f.leading_monomial();
    const GPoly* red = nullptr;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (mono_divides(g.leading_monomial(), lm)) { red = &g; break; }
    }
    if (red) {
      Scalar factor = f.leading_coefficient() / red->leading_coefficient();
      f = f - red->times_term(mono_quot(lm, red->leading_monomial()), factor);
    } else {
      GPoly t(f.field(), f.nvars(), f.order());
      t.add_term(lm, f.leading_coefficient());
      r.add_term(lm, f.leading_coefficient());
      f = f - t;
    }
  }
  return r;
}

namespace {

struct SPair {
  std::size_t i, j;
  Monomial lcm;
  int degree;
};

bool pair_before(const SPair& a, const SPair& b, std::size_t nvars) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (!(a.lcm == b.lcm))
    return monomial_greater(b.lcm, a.lcm, MonomialOrder::Lex, nvars);
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

// Gebauer-Moeller pair update when h (index hi) joins the basis.
void gm_update(const std::vector<GPoly>& g, std::vector<SPair>& pairs,
               std::size_t hi) {
  const std::size_t nv = g[hi].nvars();
  const Monomial& lh = g[hi].leading_monomial();

  std::vector<SPair> cand;
  for (std::size_t j = 0; j < hi; ++j) {
    if (g[j].is_zero()) continue;
    Monomial l = mono_lcm(lh, g[j].leading_monomial());
    cand.push_back(SPair{j, hi, l, total_degree(l, nv)});
  }

  // Keep a candidate if its lcm is coprime-split or no other candidate lcm
  // properly divides it (one representative per lcm value survives).
  std::vector<SPair> kept;
  for (std::size_t a = 0; a < cand.size(); ++a) {
    bool drop = false;
    bool coprime =
        mono_coprime(lh, g[cand[a].i].leading_monomial());
    if (!coprime) {
      for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
        if (a == b) continue;
        if (mono_eq(cand[b].lcm, cand[a].lcm)) {
          if (b < a) drop = true;  // earlier equal-lcm representative kept
        } else if (mono_divides(cand[b].lcm, cand[a].lcm)) {
          drop = true;
        }
      }
    }
    if (!drop) kept.push_back(cand[a]);
  }
  // The Buchberger coprimality criterion: coprime leading terms reduce to 0.
  std::vector<SPair> fresh;
  for (const SPair& p : kept)
    if (!mono_coprime(lh, g[p.i].leading_monomial())) fresh.push_back(p);

  // Prune old pairs whose lcm strictly absorbs the new leading term.
  std::vector<SPair> survivors;
  for (const SPair& p : pairs) {
    const Monomial& li = g[p.i].leading_monomial();
    const Monomial& lj = g[p.j].leading_monomial();
    if (mono_divides(lh, p.lcm) && !mono_eq(mono_lcm(lh, li), p.lcm) &&
        !mono_eq(mono_lcm(lh, lj), p.lcm))
      continue;
    survivors.push_back(p);
  }
  survivors.insert(survivors.end(), fresh.begin(), fresh.end());
  pairs = std::move(survivors);
}

}  // namespace

std::vector<GPoly> groebner_basis(std::vector<GPoly> gens) {
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const GPoly& p) { return p.is_zero(); }),
             gens.end());
  if (gens.empty()) return {};
  const Field f = gens.front().field();
  const std::size_t nv = gens.front().nvars();
  const MonomialOrder ord = gens.front().order();
  for (const auto& g : gens)
    if (g.field() != f || g.nvars() != nv || g.order() != ord)
      throw invalid_argument_error("groebner_basis: mixed polynomial types");

  for (auto& g : gens) g = g.monic();
  std::sort(gens.begin(), gens.end(), [&](const GPoly& a, const GPoly& b) {
    return monomial_greater(b.leading_monomial(), a.leading_monomial(), ord,
                            nv);
  });

  std::vector<GPoly> g;
  std::vector<SPair> pairs;
  for (const auto& gen : gens) {
    g.push_back(gen);
    gm_update(g, pairs, g.size() - 1);
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pairs.size(); ++i)
      if (pair_before(pairs[i], pairs[best], nv)) best = i;
    SPair p = pairs[best];
    pairs.erase(pairs.begin() + long(best));

    const GPoly& a = g[p.i];
    const GPoly& b = g[p.j];
    GPoly s = a.times_term(mono_quot(p.lcm, a.leading_monomial()),
                           Scalar::one(f)) -
              b.times_term(mono_quot(p.lcm, b.leading_monomial()),
                           Scalar::one(f));
    GPoly h = normal_form(std::move(s), g);
    if (h.is_zero()) continue;
    g.push_back(h.monic());
    gm_update(g, pairs, g.size() - 1);
  }

  // Inter-reduce to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<GPoly> rest;
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i && !g[j].is_zero()) rest.push_back(g[j]);
      GPoly h = normal_form(g[i], rest);
      if (!(h == g[i])) {
        g[i] = h.is_zero() ? h : h.monic();
        changed = true;
      }
    }
    g.erase(std::remove_if(g.begin(), g.end(),
                           [](const GPoly& p) { return p.is_zero(); }),
            g.end());
  }
  std::sort(g.begin(), g.end(), [&](const GPoly& x, const GPoly& y) {
    return monomial_greater(x.leading_monomial(), y.leading_monomial(), ord,
                            nv);
  });
  return g;
}

bool ideal_member(const GPoly& f, const std::vector<GPoly>& basis) {
  return normal_form(f, basis).is_zero();
}

std::vector<Monomial> straight_monomials(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial m{0, 0, 0, 0};
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t idx, int rem) -> void {
    if (idx == nvars - 1) {
      e[idx] = rem;
      for (std::size_t i = 0; i < nvars; ++i) m[i] = std::uint8_t(e[i]);
      out.push_back(m);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      e[idx] = v;
      self(self, idx + 1, rem - v);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), std::greater<Monomial>());
  return out;
}

std::vector<GPoly> graded_piece(const std::vector<GPoly>& gens, int degree) {
  std::vector<const GPoly*> live;
  for (const auto& g : gens)
    if (!g.is_zero()) live.push_back(&g);
  if (live.empty()) return {};
  const Field f = live.front()->field();
  const std::size_t nv = live.front()->nvars();
  const MonomialOrder ord = live.front()->order();
  for (const GPoly* g : live) {
    if (!g->is_homogeneous())
      throw invalid_argument_error("graded_piece: generators must be homogeneous");
    if (g->field() != f || g->nvars() != nv)
      throw invalid_argument_error("graded_piece: mixed polynomial types");
  }

  std::vector<Monomial> basis = straight_monomials(nv, degree);
  std::vector<std::vector<Scalar>> rows;
  for (const GPoly* g : live) {
    int dg = g->degree();
    if (dg > degree) continue;
    for (const Monomial& m : straight_monomials(nv, degree - dg)) {
      GPoly prod = g->times_term(m, Scalar::one(f));
      std::vector<Scalar> row(basis.size(), Scalar::zero(f));
      for (const auto& [mm, c] : prod.terms()) {
        auto it = std::find(basis.begin(), basis.end(), mm);
        assert(it != basis.end());
        row[std::size_t(it - basis.begin())] = c;
      }
      rows.push_back(std::move(row));
    }
  }
  std::vector<GPoly> out;
  for (const auto& row : canonical_span(f, rows)) {
    GPoly p(f, nv, ord);
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], row[i]);
    out.push_back(std::move(p));
  }
  return out;
}

EmptinessResult is_projectively_empty(const std::vector<GPoly>& gens) {
  std::vector<GPoly> live;
  for (const auto& g : gens)
    if (!g.is_zero()) live.push_back(g);
  if (live.empty()) return {Emptiness::NONEMPTY, 0};
  const Field f = live.front().field();
  const std::size_t nv = live.front().nvars();
  for (const auto& g : live)
    if (!g.is_homogeneous())
      throw invalid_argument_error(
          "is_projectively_empty: generators must be homogeneous");

  std::vector<GPoly> gb = groebner_basis(live);

  // Direct probe: small pure powers of every variable reducing to zero.
  constexpr std::size_t kPowerCap = 24;
  std::size_t worst = 0;
  bool all_found = true;
  for (std::size_t v = 0; v < nv && all_found; ++v) {
    bool found = false;
    for (std::size_t k = 1; k <= kPowerCap; ++k) {
      Monomial m{0, 0, 0, 0};
      m[v] = std::uint8_t(k);
      GPoly pw(f, nv, live.front().order());
      pw.add_term(m, Scalar::one(f));
      if (ideal_member(pw, gb)) {
        worst = std::max(worst, k);
        found = true;
        break;
      }
    }
    if (!found) all_found = false;
  }
  if (all_found) return {Emptiness::EMPTY, worst};

  // Complete criterion: the quotient is finite-dimensional (projectively
  // empty) exactly when every variable has a pure-power leading term.
  for (std::size_t v = 0; v < nv; ++v) {
    bool pure = false;
    for (const auto& g : gb) {
      const Monomial& lm = g.leading_monomial();
      bool only_v = lm[v] > 0;
      for (std::size_t w = 0; w < nv && only_v; ++w)
        if (w != v && lm[w] != 0) only_v = false;
      if (only_v) { pure = true; break; }
    }
    if (!pure) return {Emptiness::NONEMPTY, 0};
  }
  return {Emptiness::EMPTY, 0};
}

namespace {

// Recursive triangular solve over a lex basis; vars is ascending and the
// lex-smallest (last) variable carries the eliminant.
void solve_rec(const std::vector<GPoly>& gens, std::vector<std::size_t> vars,
               std::vector<std::pair<std::size_t, Scalar>>& partial,
               SolutionSet& out) {
  const Field f = gens.empty() ? Field::rational() : gens.front().field();
  std::vector<GPoly> gb = groebner_basis(gens);

  if (!gb.empty() && gb.front().degree() == 0) return;  // ideal (1): no points
  if (vars.empty()) {
    if (gb.empty()) {
      std::vector<Scalar> pt;
      for (const auto& [v, s] : partial) {
        pt.push_back(s);
        (void)v;
      }
      out.points.push_back(std::move(pt));
    }
    return;
  }
  if (gb.empty())
    throw nonreduced_error("solve_affine: positive-dimensional solution set");

  // Zero-dimensionality: every active variable needs a pure-power lead.
  for (std::size_t v : vars) {
    bool pure = false;
    for (const auto& g : gb) {
      const Monomial& lm = g.leading_monomial();
      bool only_v = lm[v] > 0;
      for (std::size_t w = 0; w < 4 && only_v; ++w)
        if (w != v && lm[w] != 0) only_v = false;
      if (only_v) { pure = true; break; }
    }
    if (!pure)
      throw nonreduced_error("solve_affine: positive-dimensional solution set");
  }

  std::size_t last = vars.back();
  // Eliminant: a basis element involving only the last variable.
  const GPoly* elim = nullptr;
  for (const auto& g : gb) {
    bool uni = true;
    for (const auto& [m, c] : g.terms())
      for (std::size_t w = 0; w < 4 && uni; ++w)
        if (w != last && m[w] != 0) uni = false;
    if (uni && (elim == nullptr || g.degree() < elim->degree())) elim = &g;
  }
  if (elim == nullptr)
    throw nonreduced_error("solve_affine: no eliminant in a zero-dimensional solve");

  int d = elim->degree();
  std::vector<Scalar> coeffs(std::size_t(d) + 1, Scalar::zero(f));
  for (const auto& [m, c] : elim->terms()) coeffs[m[last]] = c;
  FactorResult fr = linear_factors(f, coeffs);
  if (!fr.fully_split) out.all_points_rational = false;

  std::vector<std::size_t> rest(vars.begin(), vars.end() - 1);
  for (const auto& lf : fr.factors) {
    if (lf.point[0].is_zero()) continue;  // no root at infinity for monic elim
    const Scalar& root = lf.point[1];
    std::vector<GPoly> sub;
    for (const auto& g : gb) {
      GPoly s = g.substitute_value(last, root);
      if (!s.is_zero()) sub.push_back(s);
    }
    partial.push_back({last, root});
    solve_rec(sub, rest, partial, out);
    partial.pop_back();
  }
}

}  // namespace

SolutionSet solve_affine(const std::vector<GPoly>& gens,
                         const std::vector<std::size_t>& vars) {
  SolutionSet out;
  out.all_points_rational = true;
  std::vector<std::size_t> vs = vars;
  std::sort(vs.begin(), vs.end());
  std::vector<GPoly> lex;
  for (const auto& g : gens)
    if (!g.is_zero()) lex.push_back(g.with_order(MonomialOrder::Lex));
  if (lex.empty()) {
    if (!vs.empty())
      throw nonreduced_error("solve_affine: positive-dimensional solution set");
    out.points.push_back({});
    return out;
  }
  std::vector<std::pair<std::size_t, Scalar>> partial;
  solve_rec(lex, vs, partial, out);
  // partial stores assignments last-variable-first; reorder to match vars
  // ascending. Each recorded point lists values in pop order: largest var
  // first. Reverse them.
  for (auto& pt : out.points) std::reverse(pt.begin(), pt.end());
  return out;
}

SolutionSet singular_points(const MultiPoly& f) {
  const Field k = f.field();
  Ambient amb = f.ambient();
  std::size_t n = num_vars(amb);

  std::vector<MultiPoly> eqns{f};
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly d = f.derivative(i);
    if (!d.is_zero()) eqns.push_back(d);
  }

  // Chart list: indices of the variables frozen to 1.
  std::vector<std::vector<std::size_t>> charts;
  if (amb == Ambient::P1xP1) {
    charts = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  } else {
    for (std::size_t i = 0; i < n; ++i) charts.push_back({i});
  }

  SolutionSet all;
  all.all_points_rational = true;
  std::set<std::vector<std::string>> seen;

  for (const auto& fixed : charts) {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < n; ++i)
      if (std::find(fixed.begin(), fixed.end(), i) == fixed.end())
        active.push_back(i);

    std::vector<GPoly> gens;
    for (const auto& e : eqns) {
      GPoly g = GPoly::from_multipoly(e, MonomialOrder::Lex);
      for (std::size_t i : fixed) g = g.substitute_value(i, Scalar::one(k));
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty())
      throw nonreduced_error("singular_points: chart system vanished");

    SolutionSet chart_sol = solve_affine(gens, active);
    if (!chart_sol.all_points_rational) all.all_points_rational = false;

    for (const auto& vals : chart_sol.points) {
      std::vector<Scalar> pt(n, Scalar::one(k));
      for (std::size_t i = 0; i < active.size(); ++i) pt[active[i]] = vals[i];
      pt = amb == Ambient::P1xP1 ? normalize_p1xp1(pt)
                                 : normalize_projective(pt);
      std::vector<std::string> key;
      for (const auto& s : pt) key.push_back(s.to_string());
      if (seen.insert(key).second) all.points.push_back(pt);
    }
  }

  std::sort(all.points.begin(), all.points.end(),
            [](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
              for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return a[i] < b[i];
              }
              return false;
            });
  return all;
}

}  // namespace spinver
