#include <array>

#include "spinver/errors.hpp"
#include "spinver/groebner.hpp"
#include "spinver/jet.hpp"
#include "spinver/linsys.hpp"
#include "spinver/matrix.hpp"
#include "spinver/pipelines.hpp"
#include "spinver/reptheory.hpp"

namespace spinver {

namespace {

void require_odd_prime_field(const Field& f, const char* who) {
  if (!f.is_prime() || f.characteristic() <= 3)
    throw bad_characteristic_error(std::string(who) +
                                   ": needs a prime field with p > 3");
}

bool is_certified_smooth(const SolutionSet& ss) {
  return ss.points.empty() && ss.all_points_rational;
}

// Orders at the candidate points in candidate order, all exact, nothing
// unaccounted for.
bool orders_match(const RestrictionDivisor& rd,
                  const std::vector<std::size_t>& want) {
  if (rd.points.size() != want.size() || !rd.accounts_for_expected)
    return false;
  for (std::size_t i = 0; i < want.size(); ++i)
    if (rd.points[i].order != want[i] || !rd.points[i].exact) return false;
  return true;
}

std::vector<std::vector<Scalar>> coeff_rows(const std::vector<MultiPoly>& ps,
                                            const std::vector<Monomial>& mono) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& p : ps) rows.push_back(p.coefficient_vector(mono));
  return rows;
}

// ---- odd case: nodal (3,3) curves ------------------------------------------

// The fiber {pt} x P1 (factor 0) or P1 x {pt} (factor 1) as a linear form.
MultiPoly fiber_form(const Field& f, int factor,
                     const std::array<Scalar, 2>& pt) {
  Multidegree d = factor == 0 ? bideg(1, 0) : bideg(0, 1);
  std::size_t base = factor == 0 ? 0 : 2;
  MultiPoly line(f, Ambient::P1xP1, d);
  Monomial m0{0, 0, 0, 0};
  ++m0[base];
  Monomial m1{0, 0, 0, 0};
  ++m1[base + 1];
  line.add_term(m0, pt[1]);
  line.add_term(m1, -pt[0]);
  return line;
}

// Bidegree (3,3) forms with double contact along the diagonal at the marked
// points, a double point at n, and order-3 contact with both fibers there.
LinearSystem node_system(const Field& f, const std::vector<Scalar>& n) {
  MultiPoly l = diagonal_form(f);
  std::vector<LinearCondition> conds;
  for (const auto& m : marked_points(f))
    conds.push_back(JetVanishing{curve_jet({l}, m), 2});
  conds.push_back(PointMultiplicity{n, 2});
  MultiPoly r1 = fiber_form(f, 0, {n[0], n[1]});
  MultiPoly r2 = fiber_form(f, 1, {n[2], n[3]});
  conds.push_back(JetVanishing{curve_jet({r1}, n), 3});
  conds.push_back(JetVanishing{curve_jet({r2}, n), 3});
  return solve_conditions(f, Ambient::P1xP1, bideg(3, 3), conds);
}

// ---- plane helpers ----------------------------------------------------------

Scalar det3(const Field& f, const std::array<std::vector<Scalar>, 3>& r) {
  (void)f;
  return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
         r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
         r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
}

// Inverse of a 3x3 matrix via the adjugate; the caller checks the
// determinant is nonzero.
std::vector<std::vector<Scalar>> inverse3(
    const Field& f, const std::vector<std::vector<Scalar>>& m) {
  Scalar det = det3(f, {m[0], m[1], m[2]});
  Scalar id = det.inverse();
  auto cof = [&](std::size_t i, std::size_t j) {
    std::size_t i1 = (i + 1) % 3, i2 = (i + 2) % 3;
    std::size_t j1 = (j + 1) % 3, j2 = (j + 2) % 3;
    return m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1];
  };
  std::vector<std::vector<Scalar>> inv(3,
                                       std::vector<Scalar>(3, Scalar::zero(f)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) inv[i][j] = cof(j, i) * id;
  return inv;
}

std::vector<Scalar> matvec3(const Field& f,
                            const std::vector<std::vector<Scalar>>& m,
                            const std::vector<Scalar>& v) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < 3; ++i) {
    Scalar s = Scalar::zero(f);
    for (std::size_t j = 0; j < 3; ++j) s += m[i][j] * v[j];
    out.push_back(s);
  }
  return out;
}

// The line through two non-proportional points of P2.
MultiPoly line_through(const Field& f, const std::vector<Scalar>& a,
                       const std::vector<Scalar>& b) {
  std::array<Scalar, 3> c{a[1] * b[2] - a[2] * b[1],
                          a[2] * b[0] - a[0] * b[2],
                          a[0] * b[1] - a[1] * b[0]};
  MultiPoly line(f, Ambient::P2, deg(1));
  for (std::size_t i = 0; i < 3; ++i) {
    if (c[i].is_zero()) continue;
    Monomial m{0, 0, 0, 0};
    ++m[i];
    line.add_term(m, c[i]);
  }
  return line;
}

struct PlaneTangencyData {
  MultiPoly conic;
  MultiPoly line;
  LinearSystem sys;
};

// ---- even case helpers -------------------------------------------------------

std::vector<Scalar> plane_point(const Field& f, const ECPoint& p) {
  if (p.infinity)
    return {Scalar::zero(f), Scalar::one(f), Scalar::zero(f)};
  return {p.x, p.y, Scalar::one(f)};
}

// The Weierstrass cubic x1^2 x2 - x0^3 - a x0 x2^2 - b x2^3 with the origin
// at (0:1:0).
MultiPoly weierstrass_cubic(const EllipticCurve& e) {
  const Field& f = e.field;
  MultiPoly c(f, Ambient::P2, deg(3));
  c.add_term(Monomial{0, 2, 1, 0}, Scalar::one(f));
  c.add_term(Monomial{3, 0, 0, 0}, -Scalar::one(f));
  c.add_term(Monomial{1, 0, 2, 0}, -e.a);
  c.add_term(Monomial{0, 0, 3, 0}, -e.b);
  return c;
}

}  // namespace

CheckReport run_genus3_spin4_odd(const Field& f, std::uint64_t seed,
                                 std::size_t cap) {
  CheckReport rep;
  rep.pipeline = "genus3-spin4-odd";
  rep.field = field_label(f);
  rep.seed = seed;
  Resampler rs(cap);
  try {
    require_odd_prime_field(f, "genus3-spin4-odd");
    Rng rng(seed);
    Scalar one = Scalar::one(f);

    // A node off the diagonal, clear of the marked rulings.
    std::vector<Scalar> n = rs.run(
        "node-position", [&]() -> std::optional<std::vector<Scalar>> {
          Scalar wx = rng.element(f);
          Scalar wy = rng.element(f);
          if (wx.is_zero() || wy.is_zero() || wx == one || wy == one ||
              wx == wy)
            return std::nullopt;
          return p1xp1_point({one, wx}, {one, wy});
        });
    add_check(rep, "node_off_diagonal",
              "the sampled node has distinct factor coordinates", true,
              !(n[0] == n[2] && n[1] == n[3]));

    LinearSystem dn = node_system(f, n);
    add_check(rep, "node_system_dim",
              "bidegree (3,3) forms with the marked double contacts, a "
              "double point at the node, and triple fiber contact there "
              "form a space of vector dimension 5",
              std::size_t{5}, dn.dimension());

    // Every symmetry carries the system at n to the system at the image
    // of n.
    auto mono33 = monomial_basis(Ambient::P1xP1, bideg(3, 3));
    bool equivariant = dn.dimension() == 5;
    for (const auto& g : build_group(f)) {
      std::vector<Scalar> gn = apply_to_point(g, n);
      LinearSystem dgn = node_system(f, gn);
      std::vector<MultiPoly> pushed;
      for (const auto& b : dn.solutions) pushed.push_back(apply_element(g, b));
      if (!spans_equal(f, coeff_rows(pushed, mono33),
                       coeff_rows(dgn.solutions, mono33)))
        equivariant = false;
    }
    add_check(rep, "node_system_equivariant",
              "each of the 12 symmetries maps the node system onto the "
              "system at the image node",
              true, equivariant);

    bool only_node = false;
    bool honest_node = false;
    MultiPoly member = rs.run(
        "nodal-member", [&]() -> std::optional<MultiPoly> {
          only_node = honest_node = false;
          MultiPoly d(f, Ambient::P1xP1, bideg(3, 3));
          for (const auto& b : dn.solutions) d = d + b.scaled(rng.element(f));
          if (d.is_zero()) return std::nullopt;
          SolutionSet ss = singular_points(d);
          if (ss.points.size() != 1 || !ss.all_points_rational ||
              ss.points[0] != n)
            return std::nullopt;
          only_node = true;
          // Affine chart x0 = 1, y0 = 1; the node is an honest node when
          // the 2x2 Hessian there is nonsingular.
          Scalar h00 = d.derivative(1).derivative(1).evaluate(n);
          Scalar h01 = d.derivative(1).derivative(3).evaluate(n);
          Scalar h11 = d.derivative(3).derivative(3).evaluate(n);
          if ((h00 * h11 - h01 * h01).is_zero()) return std::nullopt;
          honest_node = true;
          return d;
        });
    add_check(rep, "member_singular_only_at_node",
              "the sampled member is singular exactly at the node, "
              "certified over the algebraic closure",
              true, only_node);
    add_check(rep, "node_hessian_rank",
              "the node is an honest node (nonsingular 2x2 Hessian)", true,
              honest_node);

    MultiPoly r1 = fiber_form(f, 0, {n[0], n[1]});
    MultiPoly r2 = fiber_form(f, 1, {n[2], n[3]});
    add_check(rep, "first_fiber_order",
              "the member meets the first fiber through the node with order "
              "exactly 3 there",
              true, orders_match(restriction_divisor(member, {r1}, {n}, 3),
                                 {3}));
    add_check(rep, "second_fiber_order",
              "the member meets the second fiber through the node with "
              "order exactly 3 there",
              true, orders_match(restriction_divisor(member, {r2}, {n}, 3),
                                 {3}));

    // Plane quartics tangent to a general conic at three points and to a
    // line at two points.
    MultiPoly c0(f, Ambient::P2, deg(2));
    c0.add_term(Monomial{1, 0, 1, 0}, one);
    c0.add_term(Monomial{0, 2, 0, 0}, -one);
    PlaneTangencyData pd = rs.run(
        "tangency-configuration",
        [&]() -> std::optional<PlaneTangencyData> {
          std::vector<std::vector<Scalar>> g(3,
                                             std::vector<Scalar>(3,
                                                                 Scalar::zero(
                                                                     f)));
          for (auto& row : g)
            for (auto& x : row) x = rng.element(f);
          if (det3(f, {g[0], g[1], g[2]}).is_zero()) return std::nullopt;
          MultiPoly conic = c0.substitute_linear(inverse3(f, g));

          Scalar s1 = rng.element(f), s2 = rng.element(f),
                 s3 = rng.element(f);
          if (s1 == s2 || s1 == s3 || s2 == s3) return std::nullopt;
          std::vector<std::vector<Scalar>> cpts;
          for (const Scalar& s : {s1, s2, s3})
            cpts.push_back(
                normalize_projective(matvec3(f, g, {one, s, s * s})));

          std::vector<Scalar> a{rng.element(f), rng.element(f),
                                rng.element(f)};
          std::vector<Scalar> b{rng.element(f), rng.element(f),
                                rng.element(f)};
          MultiPoly line = line_through(f, a, b);
          if (line.is_zero()) return std::nullopt;
          // Keep the tangency points off the other curve.
          if (conic.evaluate(a).is_zero() || conic.evaluate(b).is_zero())
            return std::nullopt;
          for (const auto& p : cpts)
            if (line.evaluate(p).is_zero()) return std::nullopt;

          std::vector<LinearCondition> conds;
          for (const auto& p : cpts)
            conds.push_back(JetVanishing{curve_jet({conic}, p), 2});
          conds.push_back(JetVanishing{curve_jet({line}, a), 2});
          conds.push_back(JetVanishing{curve_jet({line}, b), 2});
          LinearSystem sys = solve_conditions(f, Ambient::P2, deg(4), conds);
          if (sys.dimension() != 5) return std::nullopt;
          return PlaneTangencyData{conic, line, sys};
        });
    add_check(rep, "plane_system_dim",
              "plane quartics tangent to the conic at three points and to "
              "the line at two points form a space of vector dimension 5 "
              "(10 independent conditions on 15)",
              std::size_t{5}, pd.sys.dimension());

    bool plane_smooth = false;
    rs.run("smooth-plane-member", [&]() -> std::optional<MultiPoly> {
      MultiPoly q(f, Ambient::P2, deg(4));
      for (const auto& b : pd.sys.solutions) q = q + b.scaled(rng.element(f));
      if (q.is_zero()) return std::nullopt;
      if (!is_certified_smooth(singular_points(q))) return std::nullopt;
      plane_smooth = true;
      return q;
    });
    add_check(rep, "plane_member_smooth",
              "the tangency system contains a smooth member, certified over "
              "the algebraic closure",
              true, plane_smooth);
  } catch (const search_exhausted_error&) {
    rep.exhausted = true;
  }
  rep.resamples = rs.total();
  return rep;
}

CheckReport run_genus3_spin4_even(const Field& f, std::uint64_t seed,
                                  std::size_t cap) {
  CheckReport rep;
  rep.pipeline = "genus3-spin4-even";
  rep.field = field_label(f);
  rep.seed = seed;
  Resampler rs(cap);
  try {
    require_odd_prime_field(f, "genus3-spin4-even");
    Rng rng(seed);

    TorsionSample ts = rs.run(
        "curve-with-4-torsion", [&]() -> std::optional<TorsionSample> {
          try {
            return sample_curve_with_torsion(rng, f, 4);
          } catch (const error&) {
            return std::nullopt;
          }
        });
    EllipticCurve e = ts.curve;
    ECPoint tau = ts.tau;
    add_check(rep, "twist_order",
              "the twist point has exact order 4 in the group law", true,
              ec_order(e, tau) == 4);
    add_check(rep, "half_twist_nontrivial",
              "twice the twist point is not the origin", true,
              !ec_mul(e, 2, tau).infinity);

    MultiPoly fe = weierstrass_cubic(e);

    std::array<ECPoint, 3> o = rs.run(
        "theta-divisor", [&]() -> std::optional<std::array<ECPoint, 3>> {
          ECPoint o1 = random_point(rng, e);
          ECPoint o2 = random_point(rng, e);
          ECPoint o3 = ec_sub(e, tau, ec_add(e, o1, o2));
          if (o1 == o2 || o1 == o3 || o2 == o3) return std::nullopt;
          return std::array<ECPoint, 3>{o1, o2, o3};
        });
    std::vector<std::vector<Scalar>> dpts;
    for (const auto& p : o) dpts.push_back(plane_point(f, p));

    bool distinct = !(o[0] == o[1] || o[0] == o[2] || o[1] == o[2]);
    add_check(rep, "points_distinct",
              "the three contact points are pairwise distinct", true,
              distinct);
    add_check(rep, "points_noncollinear",
              "the contact points are not collinear (their class sum is the "
              "nonzero twist)",
              true, !det3(f, {dpts[0], dpts[1], dpts[2]}).is_zero());

    std::vector<LinearCondition> conds4, conds2;
    for (const auto& p : dpts) {
      CurveJet jet = curve_jet({fe}, p);
      conds4.push_back(JetVanishing{jet, 4});
      conds2.push_back(JetVanishing{jet, 2});
    }

    LinearSystem quartics = solve_conditions(f, Ambient::P2, deg(4), conds4);
    add_check(rep, "quartics_through_contact",
              "quartics with order 4 along the cubic at the three points "
              "have vector dimension 4",
              std::size_t{4}, quartics.dimension());

    LinearSystem cubics = solve_conditions(f, Ambient::P2, deg(3), conds4);
    add_check(rep, "cubics_through_contact",
              "cubics with the same contact conditions form a single line",
              std::size_t{1}, cubics.dimension());
    auto mono3 = monomial_basis(Ambient::P2, deg(3));
    bool unique_is_curve =
        cubics.dimension() == 1 &&
        spans_equal(f, coeff_rows(cubics.solutions, mono3),
                    {fe.coefficient_vector(mono3)});
    add_check(rep, "unique_cubic_is_curve",
              "that unique cubic is the sampled curve itself", true,
              unique_is_curve);

    LinearSystem conics = solve_conditions(f, Ambient::P2, deg(2), conds2);
    add_check(rep, "no_conic_through_half_contact",
              "no conic has order 2 along the cubic at the three points",
              std::size_t{0}, conics.dimension());

    bool quartic_smooth = false;
    MultiPoly c = rs.run(
        "smooth-quartic", [&]() -> std::optional<MultiPoly> {
          MultiPoly q(f, Ambient::P2, deg(4));
          for (const auto& b : quartics.solutions)
            q = q + b.scaled(rng.element(f));
          if (q.is_zero()) return std::nullopt;
          if (!is_certified_smooth(singular_points(q))) return std::nullopt;
          quartic_smooth = true;
          return q;
        });
    add_check(rep, "quartic_smooth",
              "the sampled contact quartic is smooth, certified over the "
              "algebraic closure",
              true, quartic_smooth);

    std::vector<LinearCondition> eta3, eta2;
    for (const auto& p : dpts) {
      CurveJet jet = curve_jet({c}, p);
      eta3.push_back(JetVanishing{jet, 3});
      eta2.push_back(JetVanishing{jet, 2});
    }
    LinearSystem sys_eta3 = solve_conditions(f, Ambient::P2, deg(3), eta3);
    add_check(rep, "cubic_theta_kernel",
              "cubics with order 3 along the quartic at the contact points "
              "form a single line",
              std::size_t{1}, sys_eta3.dimension());
    add_check(rep, "cubic_theta_rank",
              "those nine conditions have rank exactly 9", std::size_t{9},
              sys_eta3.condition_rank);
    LinearSystem sys_eta2 = solve_conditions(f, Ambient::P2, deg(2), eta2);
    add_check(rep, "conic_theta_kernel",
              "no conic has order 2 along the quartic at the contact points",
              std::size_t{0}, sys_eta2.dimension());
    add_check(rep, "conic_theta_rank",
              "those six conditions have rank exactly 6", std::size_t{6},
              sys_eta2.condition_rank);

    // Torsion certificates on a pencil of cubics through 4t + 5o.
    std::vector<Scalar> tpt = plane_point(f, tau);
    std::vector<Scalar> opt = plane_point(f, ec_infinity());
    MultiPoly aline(f, Ambient::P2, deg(1));
    aline.add_term(Monomial{0, 0, 1, 0}, Scalar::one(f));
    add_check(rep, "flex_line_order",
              "the line at infinity meets the cubic only at the origin, "
              "with order 3 (a flex)",
              true,
              orders_match(restriction_divisor(aline, {fe}, {opt}, 3), {3}));

    CurveJet jet_t = curve_jet({fe}, tpt);
    CurveJet jet_o = curve_jet({fe}, opt);
    LinearSystem bsys = solve_conditions(
        f, Ambient::P2, deg(2),
        {JetVanishing{jet_t, 4}, JetVanishing{jet_o, 2}});
    add_check(rep, "torsion_conic_dim",
              "conics cutting the divisor 4t + 2o on the cubic form a "
              "single line",
              std::size_t{1}, bsys.dimension());

    bool conic_smooth = false;
    bool conic_orders = false;
    bool base_orders = false;
    bool pencil_smooth = false;
    bool cert_dim = false;
    bool cert_orders = false;
    bool tangent_misses = false;
    if (bsys.dimension() == 1) {
      MultiPoly b = bsys.solutions[0];
      conic_smooth = is_certified_smooth(singular_points(b));
      conic_orders =
          orders_match(restriction_divisor(b, {fe}, {tpt, opt}, 6), {4, 2});
      MultiPoly ab = aline * b;
      base_orders =
          orders_match(restriction_divisor(ab, {fe}, {tpt, opt}, 9), {4, 5});

      MultiPoly pmember = rs.run(
          "smooth-pencil-cubic", [&]() -> std::optional<MultiPoly> {
            pencil_smooth = false;
            MultiPoly g =
                fe.scaled(rng.element(f)) + ab.scaled(rng.element(f));
            if (g.is_zero()) return std::nullopt;
            if (!is_certified_smooth(singular_points(g)))
              return std::nullopt;
            pencil_smooth = true;
            return g;
          });

      LinearSystem cert = solve_conditions(
          f, Ambient::P2, deg(2),
          {JetVanishing{curve_jet({pmember}, tpt), 4},
           JetVanishing{curve_jet({pmember}, opt), 2}});
      cert_dim = cert.dimension() == 1;
      if (cert_dim)
        cert_orders = orders_match(
            restriction_divisor(cert.solutions[0], {pmember}, {tpt, opt}, 6),
            {4, 2});

      // Tangent line to the pencil member at t; missing the origin rules
      // out 2(t - o) being trivial.
      MultiPoly tangent(f, Ambient::P2, deg(1));
      for (std::size_t i = 0; i < 3; ++i) {
        Scalar ci = pmember.derivative(i).evaluate(tpt);
        if (ci.is_zero()) continue;
        Monomial m{0, 0, 0, 0};
        ++m[i];
        tangent.add_term(m, ci);
      }
      tangent_misses =
          !tangent.is_zero() && !tangent.evaluate(opt).is_zero();
    }
    add_check(rep, "torsion_conic_smooth", "that conic is smooth", true,
              conic_smooth);
    add_check(rep, "torsion_conic_orders",
              "it cuts order exactly 4 at the twist point and 2 at the "
              "origin",
              true, conic_orders);
    add_check(rep, "pencil_base_orders",
              "the product with the flex line cuts the length-9 base "
              "divisor: order 4 at the twist point, 5 at the origin",
              true, base_orders);
    add_check(rep, "pencil_member_smooth",
              "the pencil of cubics has a smooth sampled member, certified "
              "over the algebraic closure",
              true, pencil_smooth);
    add_check(rep, "four_torsion_certificate_dim",
              "on that member, conics cutting 4t + 2o form a single line",
              true, cert_dim);
    add_check(rep, "four_torsion_certificate_orders",
              "the certifying conic cuts order exactly 4 at the twist point "
              "and 2 at the origin of the member",
              true, cert_orders);
    add_check(rep, "two_torsion_obstruction",
              "the tangent line to the member at the twist point does not "
              "pass through the origin",
              true, tangent_misses);
  } catch (const search_exhausted_error&) {
    rep.exhausted = true;
  }
  rep.resamples = rs.total();
  return rep;
}

}  // namespace spinver
