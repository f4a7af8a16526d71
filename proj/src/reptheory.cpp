#include "spinver/reptheory.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "spinver/errors.hpp"

namespace spinver {

namespace {

std::array<Scalar, 4> normalize_mat(std::array<Scalar, 4> m) {
  for (const auto& e : m) {
    if (!e.is_zero()) {
      Scalar inv = e.inverse();
      for (auto& x : m) x = x * inv;
      return m;
    }
  }
  throw invalid_argument_error("group element: zero matrix");
}

bool mat_equal(const std::array<Scalar, 4>& a, const std::array<Scalar, 4>& b) {
  for (std::size_t i = 0; i < 4; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool mat_is_identity(const std::array<Scalar, 4>& m) {
  return m[0].is_one() && m[1].is_zero() && m[2].is_zero() && m[3].is_one();
}

// Image of a P1 point under the 2x2 matrix, normalized.
std::array<Scalar, 2> map_p1(const std::array<Scalar, 4>& m, const Scalar& u,
                             const Scalar& v) {
  std::array<Scalar, 2> w{m[0] * u + m[1] * v, m[2] * u + m[3] * v};
  if (!w[0].is_zero()) {
    w[1] = w[1] / w[0];
    w[0] = Scalar::one(w[0].field());
  } else if (!w[1].is_zero()) {
    w[1] = Scalar::one(w[1].field());
  } else {
    throw invalid_argument_error("group element: singular matrix");
  }
  return w;
}

// The three marked P1 coordinates shared by both factors of each point.
std::vector<std::array<Scalar, 2>> marked_p1(const Field& f) {
  Scalar o = Scalar::one(f), z = Scalar::zero(f);
  return {{o, z}, {z, o}, {o, o}};
}

std::array<int, 3> perm_of(const Field& f, const std::array<Scalar, 4>& m) {
  auto pts = marked_p1(f);
  std::array<int, 3> perm{-1, -1, -1};
  for (int i = 0; i < 3; ++i) {
    auto img = map_p1(m, pts[i][0], pts[i][1]);
    for (int j = 0; j < 3; ++j) {
      if (img[0] == pts[j][0] && img[1] == pts[j][1]) {
        perm[i] = j;
        break;
      }
    }
    if (perm[i] < 0)
      throw invalid_argument_error(
          "group element: matrix does not stabilize the marked points");
  }
  if (std::set<int>(perm.begin(), perm.end()).size() != 3)
    throw invalid_argument_error("group element: non-bijective point action");
  return perm;
}

GroupElement make_element(const Field& f, std::array<Scalar, 4> m, bool swap) {
  GroupElement g;
  g.mat = normalize_mat(std::move(m));
  g.swap = swap;
  g.perm = perm_of(f, g.mat);
  return g;
}

}  // namespace

bool same_element(const GroupElement& a, const GroupElement& b) {
  return a.swap == b.swap && mat_equal(a.mat, b.mat);
}

GroupElement identity_element(const Field& f) {
  Scalar o = Scalar::one(f), z = Scalar::zero(f);
  return make_element(f, {o, z, z, o}, false);
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  const Field& f = a.mat[0].field();
  std::array<Scalar, 4> m{
      a.mat[0] * b.mat[0] + a.mat[1] * b.mat[2],
      a.mat[0] * b.mat[1] + a.mat[1] * b.mat[3],
      a.mat[2] * b.mat[0] + a.mat[3] * b.mat[2],
      a.mat[2] * b.mat[1] + a.mat[3] * b.mat[3],
  };
  return make_element(f, std::move(m), a.swap != b.swap);
}

GroupElement invert(const GroupElement& g) {
  const Field& f = g.mat[0].field();
  // Adjugate; the determinant factor is projectively irrelevant.
  std::array<Scalar, 4> m{g.mat[3], -g.mat[1], -g.mat[2], g.mat[0]};
  return make_element(f, std::move(m), g.swap);
}

int perm_sign(const std::array<int, 3>& perm) {
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

bool is_identity(const GroupElement& g) {
  return !g.swap && mat_is_identity(g.mat);
}

std::vector<std::vector<Scalar>> marked_points(const Field& f) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& p : marked_p1(f)) out.push_back({p[0], p[1], p[0], p[1]});
  return out;
}

std::vector<Scalar> apply_to_point(const GroupElement& g,
                                   const std::vector<Scalar>& pt) {
  if (pt.size() != 4)
    throw invalid_argument_error("apply_to_point: expected a 4-vector");
  std::array<Scalar, 2> u{pt[0], pt[1]}, v{pt[2], pt[3]};
  if (g.swap) std::swap(u, v);
  auto a = map_p1(g.mat, u[0], u[1]);
  auto b = map_p1(g.mat, v[0], v[1]);
  return p1xp1_point(a, b);
}

std::vector<GroupElement> build_group(const Field& f) {
  Scalar o = Scalar::one(f), z = Scalar::zero(f);
  std::vector<GroupElement> els;
  auto add_if_new = [&](const GroupElement& g) {
    for (const auto& e : els)
      if (same_element(e, g)) return false;
    els.push_back(g);
    return true;
  };
  add_if_new(identity_element(f));
  add_if_new(make_element(f, {z, o, o, z}, false));
  add_if_new(make_element(f, {o, z, o, -o}, false));
  add_if_new(make_element(f, {o, z, z, o}, true));

  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t n = els.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (add_if_new(compose(els[i], els[j]))) grew = true;
        if (els.size() > 12)
          throw error("build_group: closure exceeded order 12");
      }
    }
  }

  if (els.size() != 12) throw error("build_group: closure has wrong order");
  std::size_t swap_free = 0;
  std::set<std::array<int, 3>> perms;
  for (const auto& g : els) {
    if (!g.swap) {
      ++swap_free;
      perms.insert(g.perm);
    }
    bool inv_present = false;
    GroupElement gi = invert(g);
    for (const auto& e : els)
      if (same_element(e, gi)) inv_present = true;
    if (!inv_present) throw error("build_group: missing inverse");
  }
  if (swap_free != 6 || perms.size() != 6)
    throw error("build_group: permutation action is not the full S3");

  std::sort(els.begin(), els.end(),
            [](const GroupElement& a, const GroupElement& b) {
              if (a.swap != b.swap) return !a.swap;
              return a.perm < b.perm;
            });
  return els;
}

const GroupElement& factor_exchange(const std::vector<GroupElement>& group) {
  for (const auto& g : group)
    if (g.swap && mat_is_identity(g.mat)) return g;
  throw error("factor_exchange: element missing from group");
}

MultiPoly apply_element(const GroupElement& g, const MultiPoly& f) {
  if (f.ambient() != Ambient::P1xP1)
    throw invalid_argument_error("apply_element: form must live on P1 x P1");
  GroupElement gi = invert(g);
  const Field& fl = f.field();
  Scalar z = Scalar::zero(fl);
  std::vector<std::vector<Scalar>> lin(4, std::vector<Scalar>(4, z));
  // Each variable of the result reads from the block the inverse point map
  // sources it from; the same 2x2 matrix acts on both blocks.
  std::size_t xoff = gi.swap ? 2 : 0;
  std::size_t yoff = gi.swap ? 0 : 2;
  lin[0][xoff + 0] = gi.mat[0];
  lin[0][xoff + 1] = gi.mat[1];
  lin[1][xoff + 0] = gi.mat[2];
  lin[1][xoff + 1] = gi.mat[3];
  lin[2][yoff + 0] = gi.mat[0];
  lin[2][yoff + 1] = gi.mat[1];
  lin[3][yoff + 0] = gi.mat[2];
  lin[3][yoff + 1] = gi.mat[3];
  return f.substitute_linear(lin);
}

std::optional<Scalar> proportionality_factor(const MultiPoly& a,
                                             const MultiPoly& b) {
  if (a.ambient() != b.ambient() || a.degree() != b.degree() || b.is_zero())
    return std::nullopt;
  auto mono = monomial_basis(b.ambient(), b.degree());
  auto c = coordinates_in_span(b.field(), {b.coefficient_vector(mono)},
                               a.coefficient_vector(mono));
  if (!c) return std::nullopt;
  return (*c)[0];
}

MultiPoly diagonal_form(const Field& f) {
  MultiPoly r(f, Ambient::P1xP1, bideg(1, 1));
  r.add_term({1, 0, 0, 1}, Scalar::one(f));
  r.add_term({0, 1, 1, 0}, -Scalar::one(f));
  return r;
}

MultiPoly pair_conic(const Field& f, int i) {
  MultiPoly r(f, Ambient::P1xP1, bideg(1, 1));
  r.add_term({1, 0, 0, 1}, Scalar::one(f));
  r.add_term({0, 1, 1, 0}, Scalar::one(f));
  Scalar minus_two = Scalar::from_int(f, -2);
  switch (i) {
    case 1:
      r.add_term({1, 0, 1, 0}, minus_two);
      break;
    case 2:
      r.add_term({0, 1, 0, 1}, minus_two);
      break;
    case 3:
      break;
    default:
      throw invalid_argument_error("pair_conic: index must be 1, 2 or 3");
  }
  return r;
}

MultiPoly pair_conic_invariant(const Field& f) {
  return pair_conic(f, 1) + pair_conic(f, 2) - pair_conic(f, 3);
}

MultiPoly six_lines_form(const Field& f) {
  Scalar o = Scalar::one(f);
  auto line = [&](int block, bool second, bool diff) {
    Multidegree d = block == 0 ? bideg(1, 0) : bideg(0, 1);
    MultiPoly p(f, Ambient::P1xP1, d);
    std::size_t base = block == 0 ? 0 : 2;
    Monomial m{0, 0, 0, 0};
    if (diff) {
      m[base] = 1;
      p.add_term(m, o);
      m[base] = 0;
      m[base + 1] = 1;
      p.add_term(m, -o);
    } else {
      m[base + (second ? 1 : 0)] = 1;
      p.add_term(m, o);
    }
    return p;
  };
  return line(0, false, false) * line(0, true, false) * line(0, false, true) *
         line(1, false, false) * line(1, true, false) * line(1, false, true);
}

std::vector<MultiPoly> tritangent_system(const Field& f) {
  std::vector<MultiPoly> out;
  out.push_back(six_lines_form(f));
  MultiPoly l = diagonal_form(f);
  for (const auto& m : monomial_basis(Ambient::P1xP1, bideg(2, 2)))
    out.push_back(l * MultiPoly::from_term(f, Ambient::P1xP1, m,
                                           Scalar::one(f)));
  return out;
}

Matrix induced_matrix(const GroupElement& g,
                      const std::vector<MultiPoly>& system) {
  if (system.empty())
    throw invalid_argument_error("induced_matrix: empty system");
  const Field& f = system.front().field();
  Ambient amb = system.front().ambient();
  Multidegree d = system.front().degree();
  auto mono = monomial_basis(amb, d);
  std::vector<std::vector<Scalar>> span;
  for (const auto& s : system) {
    if (s.ambient() != amb || s.degree() != d)
      throw invalid_argument_error("induced_matrix: mixed degrees");
    span.push_back(s.coefficient_vector(mono));
  }
  if (span_rank(f, span) != system.size())
    throw invalid_argument_error("induced_matrix: dependent basis");
  std::size_t n = system.size();
  Matrix out(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly img = apply_element(g, system[j]);
    if (img.degree() != d)
      throw not_invariant_error(
          "induced_matrix: image leaves the bidegree (factor exchange on an "
          "asymmetric bidegree)");
    auto c = coordinates_in_span(f, span, img.coefficient_vector(mono));
    if (!c)
      throw not_invariant_error(
          "induced_matrix: image of a basis vector leaves the span");
    for (std::size_t i = 0; i < n; ++i) out.at(i, j) = (*c)[i];
  }
  return out;
}

std::string isotype_name(Isotype t) {
  switch (t) {
    case Isotype::Trivial:
      return "trivial";
    case Isotype::Sign:
      return "sign";
    case Isotype::Standard:
      return "standard";
  }
  return "?";
}

Decomposition decompose(const std::vector<GroupElement>& group,
                        const std::vector<MultiPoly>& system) {
  if (group.size() != 12)
    throw invalid_argument_error("decompose: expected the full 12-element group");
  if (system.empty()) throw invalid_argument_error("decompose: empty system");
  const Field& f = system.front().field();
  Ambient amb = system.front().ambient();
  Multidegree d = system.front().degree();
  if (amb != Ambient::P1xP1)
    throw invalid_argument_error("decompose: system must live on P1 x P1");
  if ((d.a + d.b) % 2 != 0)
    throw invalid_argument_error(
        "decompose: total bidegree must be even (normalized matrix lifts are "
        "only sign-consistent, and signs cancel exactly in even degree)");
  if (f.is_prime() && f.characteristic() <= 3)
    throw bad_characteristic_error(
        "decompose: projector weights 1/6 need characteristic 0 or p > 3");

  std::size_t n = system.size();
  std::vector<Matrix> rho;
  rho.reserve(group.size());
  for (const auto& g : group) rho.push_back(induced_matrix(g, system));

  std::size_t idx_iota = group.size();
  std::vector<std::size_t> swap_free, three_cycles;
  std::size_t idx_transposition = group.size();
  for (std::size_t i = 0; i < group.size(); ++i) {
    const auto& g = group[i];
    if (g.swap) {
      if (mat_is_identity(g.mat)) idx_iota = i;
      continue;
    }
    swap_free.push_back(i);
    int fixed = 0;
    for (int k = 0; k < 3; ++k)
      if (g.perm[k] == k) ++fixed;
    if (fixed == 0) three_cycles.push_back(i);
    if (fixed == 1 && idx_transposition == group.size())
      idx_transposition = i;
  }
  if (idx_iota == group.size() || swap_free.size() != 6 ||
      three_cycles.size() != 2 || idx_transposition == group.size())
    throw invalid_argument_error("decompose: malformed group list");

  // Matrix of a full-space element on a subspace given by independent rows
  // in system coordinates.
  auto restricted = [&](const Matrix& m,
                        const std::vector<std::vector<Scalar>>& rows) {
    std::size_t k = rows.size();
    Matrix out(f, k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto c = coordinates_in_span(f, rows, m.apply(rows[j]));
      if (!c) throw error("decompose: eigenspace is not stable");
      for (std::size_t i = 0; i < k; ++i) out.at(i, j) = (*c)[i];
    }
    return out;
  };

  Scalar sixth = Scalar::from_int(f, 6).inverse();
  Scalar third = Scalar::from_int(f, 3).inverse();
  std::vector<Summand> summands;

  for (int ev : {1, -1}) {
    auto espace = eigenspace(rho[idx_iota], Scalar::from_int(f, ev));
    if (espace.empty()) continue;
    std::size_t k = espace.size();

    Matrix p_triv(f, k, k), p_sign(f, k, k);
    for (std::size_t idx : swap_free) {
      Matrix r = restricted(rho[idx], espace);
      p_triv = p_triv + r;
      p_sign = p_sign + (perm_sign(group[idx].perm) == 1 ? r : r.scaled(
                             Scalar::from_int(f, -1)));
    }
    p_triv = p_triv.scaled(sixth);
    p_sign = p_sign.scaled(sixth);
    Matrix p_std = Matrix::identity(f, k).scaled(Scalar::from_int(f, 2)) -
                   restricted(rho[three_cycles[0]], espace) -
                   restricted(rho[three_cycles[1]], espace);
    p_std = p_std.scaled(third);
    if (!(p_triv + p_sign + p_std == Matrix::identity(f, k)))
      throw error("decompose: character projectors do not sum to the identity");

    auto lift = [&](const std::vector<Scalar>& coords,
                    const std::vector<std::vector<Scalar>>& rows) {
      std::vector<Scalar> v(n, Scalar::zero(f));
      for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) v[j] += coords[i] * rows[i][j];
      return v;
    };
    auto image_in_system = [&](const Matrix& p) {
      std::vector<std::vector<Scalar>> cols;
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<Scalar> c(k, Scalar::zero(f));
        for (std::size_t i = 0; i < k; ++i) c[i] = p.at(i, j);
        cols.push_back(lift(c, espace));
      }
      return canonical_span(f, cols);
    };

    for (auto [type, proj] :
         {std::pair<Isotype, const Matrix*>{Isotype::Trivial, &p_triv},
          {Isotype::Sign, &p_sign},
          {Isotype::Standard, &p_std}}) {
      auto iso = image_in_system(*proj);
      if (iso.empty()) continue;
      if (type != Isotype::Standard) {
        for (const auto& row : iso)
          summands.push_back(Summand{ev, type, {row}, {}});
        continue;
      }
      // Split the 2m-dimensional piece into m irreducibles: the fixed space
      // of one transposition meets each copy in a line, and applying the
      // difference of the two 3-cycles completes each line to its copy.
      Matrix a = restricted(rho[idx_transposition], iso);
      auto fixed = eigenspace(a, Scalar::one(f));
      if (2 * fixed.size() != iso.size())
        throw error("decompose: transposition fixed space has wrong size");
      for (const auto& vc : fixed) {
        std::vector<Scalar> v = lift(vc, iso);
        std::vector<Scalar> w1 = rho[three_cycles[0]].apply(v);
        std::vector<Scalar> w2 = rho[three_cycles[1]].apply(v);
        std::vector<Scalar> w(n, Scalar::zero(f));
        for (std::size_t j = 0; j < n; ++j) w[j] = w1[j] - w2[j];
        auto basis = canonical_span(f, {v, w});
        if (basis.size() != 2)
          throw error("decompose: degenerate 2-dimensional summand");
        summands.push_back(Summand{ev, Isotype::Standard, basis, {}});
      }
    }
  }

  // Materialize forms and validate: dimensions add up, the union is
  // independent, and every summand is stable under all 12 elements.
  std::vector<std::vector<Scalar>> all_rows;
  for (auto& s : summands) {
    for (const auto& row : s.coords) {
      all_rows.push_back(row);
      MultiPoly form(f, amb, d);
      for (std::size_t i = 0; i < n; ++i)
        if (!row[i].is_zero()) form = form + system[i].scaled(row[i]);
      s.forms.push_back(form);
    }
    for (const auto& m : rho)
      for (const auto& row : s.coords)
        if (!coordinates_in_span(f, s.coords, m.apply(row)))
          throw error("decompose: summand is not stable under the group");
  }
  if (all_rows.size() != n || span_rank(f, all_rows) != n)
    throw error("decompose: summands do not decompose the space");

  return Decomposition{system, std::move(summands)};
}

nlohmann::ordered_json decomposition_to_json(const Decomposition& d) {
  nlohmann::ordered_json out;
  out["summands"] = nlohmann::ordered_json::array();
  for (const auto& s : d.summands) {
    nlohmann::ordered_json js;
    js["eigenvalue"] = s.eigenvalue;
    js["isotype"] = isotype_name(s.isotype);
    js["dim"] = s.dim();
    js["basis"] = nlohmann::ordered_json::array();
    for (const auto& f : s.forms) js["basis"].push_back(f.to_string());
    out["summands"].push_back(std::move(js));
  }
  return out;
}

bool summand_faithful(const std::vector<GroupElement>& group,
                      const Summand& s) {
  const Field& f = s.forms.front().field();
  Matrix id = Matrix::identity(f, s.forms.size());
  for (const auto& g : group) {
    if (g.swap) continue;
    if (g.perm == std::array<int, 3>{0, 1, 2}) continue;
    if (induced_matrix(g, s.forms) == id) return false;
  }
  return true;
}

}  // namespace spinver
