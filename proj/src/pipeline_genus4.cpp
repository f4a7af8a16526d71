#include <algorithm>

#include "spinver/errors.hpp"
#include "spinver/groebner.hpp"
#include "spinver/matrix.hpp"
#include "spinver/jet.hpp"
#include "spinver/linsys.hpp"
#include "spinver/pipelines.hpp"

namespace spinver {

namespace {

void require_odd_prime_field(const Field& f, const char* who) {
  if (!f.is_prime() || f.characteristic() <= 3)
    throw bad_characteristic_error(std::string(who) +
                                   ": needs a prime field with p > 3");
}

// Smoothness of a quadric surface: nonzero determinant of the symmetric
// coefficient matrix (characteristic is odd).
bool quadric_is_smooth(const MultiPoly& q) {
  const Field& f = q.field();
  Scalar half = Scalar::from_int(f, 2).inverse();
  Matrix b(f, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      Monomial m{0, 0, 0, 0};
      ++m[i];
      ++m[j];
      Scalar c = q.coefficient(m);
      if (i == j) {
        b.at(i, i) = c;
      } else {
        b.at(i, j) = c * half;
        b.at(j, i) = c * half;
      }
    }
  }
  return !determinant(b).is_zero();
}

// The complete intersection V(q, c) in P3 is smooth iff the ideal plus all
// 2x2 minors of its Jacobian cuts out the empty set.
bool complete_intersection_smooth(const MultiPoly& q, const MultiPoly& c) {
  std::vector<GPoly> gens;
  gens.push_back(GPoly::from_multipoly(q, MonomialOrder::DegRevLex));
  gens.push_back(GPoly::from_multipoly(c, MonomialOrder::DegRevLex));
  std::vector<MultiPoly> dq, dc;
  for (std::size_t v = 0; v < 4; ++v) {
    dq.push_back(q.derivative(v));
    dc.push_back(c.derivative(v));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      MultiPoly minor = dq[i] * dc[j] - dq[j] * dc[i];
      if (!minor.is_zero())
        gens.push_back(GPoly::from_multipoly(minor, MonomialOrder::DegRevLex));
    }
  }
  return is_projectively_empty(gens).decision == Emptiness::EMPTY;
}

std::vector<std::vector<Scalar>> coeff_rows(const std::vector<MultiPoly>& ps,
                                            const std::vector<Monomial>& mono) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& p : ps) rows.push_back(p.coefficient_vector(mono));
  return rows;
}

// Multiples of q by the four coordinate forms, as coefficient rows.
std::vector<std::vector<Scalar>> quadric_multiples(
    const MultiPoly& q, const std::vector<Monomial>& mono3) {
  const Field& f = q.field();
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t v = 0; v < 4; ++v) {
    Monomial m{0, 0, 0, 0};
    ++m[v];
    MultiPoly zq = q * MultiPoly::from_term(f, Ambient::P3, m, Scalar::one(f));
    rows.push_back(zq.coefficient_vector(mono3));
  }
  return rows;
}

bool orders_exactly(const RestrictionDivisor& rd, std::size_t npts,
                    std::size_t order) {
  if (rd.points.size() != npts || !rd.accounts_for_expected) return false;
  for (const auto& dp : rd.points)
    if (dp.order != order || !dp.exact) return false;
  return true;
}

}  // namespace

Genus4Spin3Instance genus4_spin3_instance(const Field& f, std::uint64_t seed,
                                          Resampler& rs, CheckReport& rep) {
  require_odd_prime_field(f, "genus4-spin3");
  Rng rng(seed);

  TorsionSample ts = rs.run(
      "curve-with-3-torsion", [&]() -> std::optional<TorsionSample> {
        try {
          return sample_curve_with_torsion(rng, f, 3);
        } catch (const error&) {
          return std::nullopt;
        }
      });
  EllipticCurve e = ts.curve;
  ECPoint tau = ts.tau;

  Scalar disc = Scalar::from_int(f, 4) * e.a * e.a * e.a +
                Scalar::from_int(f, 27) * e.b * e.b;
  add_check(rep, "curve_discriminant",
            "the sampled degree-4 curve is smooth (nonzero discriminant)",
            true, !disc.is_zero());
  add_check(rep, "twist_order",
            "the twist point has exact order 3 in the group law", true,
            ec_order(e, tau) == 3);

  std::vector<MultiPoly> pencil = model_quadrics(e);

  MultiPoly quadric = rs.run("smooth-pencil-member",
                             [&]() -> std::optional<MultiPoly> {
                               Scalar lam = rng.element(f);
                               MultiPoly q = pencil[0] + pencil[1].scaled(lam);
                               if (!quadric_is_smooth(q)) return std::nullopt;
                               return q;
                             });

  std::array<ECPoint, 4> t = rs.run(
      "contact-divisor", [&]() -> std::optional<std::array<ECPoint, 4>> {
        ECPoint t1 = random_point(rng, e);
        ECPoint t2 = random_point(rng, e);
        ECPoint t3 = random_point(rng, e);
        ECPoint t4 = ec_sub(e, tau, ec_add(e, ec_add(e, t1, t2), t3));
        std::array<ECPoint, 4> tt{t1, t2, t3, t4};
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = i + 1; j < 4; ++j)
            if (tt[i] == tt[j]) return std::nullopt;
        return tt;
      });

  bool distinct = true;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (t[i] == t[j]) distinct = false;
  add_check(rep, "t_distinct", "the four contact points are pairwise distinct",
            true, distinct);
  add_check(rep, "t_class_sum",
            "the contact divisor sums to the order-3 twist point", true,
            divisor_class_sum(e, {t[0], t[1], t[2], t[3]}) == tau);

  std::vector<std::vector<Scalar>> tpts;
  for (const auto& p : t) tpts.push_back(embed_quartic(e, p));

  std::vector<LinearCondition> conds;
  for (const auto& p : tpts)
    conds.push_back(JetVanishing{curve_jet(pencil, p), 3});
  LinearSystem sys3 = solve_conditions(f, Ambient::P3, deg(3), conds);
  add_check(rep, "contact_cubics_dim",
            "cubics with triple contact at the four points form a space of "
            "vector dimension 9",
            std::size_t{9}, sys3.dimension());

  auto mono3 = monomial_basis(Ambient::P3, deg(3));
  auto sol_rows = coeff_rows(sys3.solutions, mono3);
  auto qmult = quadric_multiples(quadric, mono3);
  bool contained = true;
  for (const auto& r : qmult)
    if (!span_contains(f, sol_rows, r)) contained = false;
  add_check(rep, "quadric_multiples_inside",
            "all coordinate multiples of the quadric have triple contact",
            true, contained);
  std::size_t quot =
      sys3.dimension() >= span_rank(f, qmult) && contained
          ? sys3.dimension() - span_rank(f, qmult)
          : std::size_t{0};
  add_check(rep, "contact_mod_quadric_dim",
            "contact cubics modulo quadric multiples have vector dimension 5",
            std::size_t{5}, quot);

  bool smooth_flag = false;
  MultiPoly cubic = rs.run(
      "smooth-curve-member", [&]() -> std::optional<MultiPoly> {
        MultiPoly F(f, Ambient::P3, deg(3));
        for (const auto& s : sys3.solutions) F = F + s.scaled(rng.element(f));
        if (F.is_zero()) return std::nullopt;
        if (span_contains(f, qmult, F.coefficient_vector(mono3)))
          return std::nullopt;
        if (!complete_intersection_smooth(quadric, F)) return std::nullopt;
        smooth_flag = true;
        return F;
      });
  add_check(rep, "curve_member_smooth",
            "the complete intersection of the quadric and the chosen cubic "
            "is smooth",
            true, smooth_flag);

  RestrictionDivisor rd = restriction_divisor(cubic, pencil, tpts, 12);
  add_check(rep, "contact_orders",
            "the chosen cubic meets the degree-4 curve with order exactly 3 "
            "at each contact point, total 12",
            true, orders_exactly(rd, 4, 3));

  add_check(rep, "t_noncoplanar",
            "the contact points do not lie on a common plane", true,
            !embedded_coplanar(e, {t[0], t[1], t[2], t[3]}));

  return Genus4Spin3Instance{e,       tau,   t, pencil, quadric,
                             sys3.solutions, cubic};
}

void genus4_bundle_checks(const Genus4Spin3Instance& inst, CheckReport& rep) {
  const Field& f = inst.curve.field;

  // Products of the four embedding sections, evaluated at a deterministic
  // sample of 12 distinct curve points. A quadric vanishing at 12 points of
  // a degree-8 hyperplane class contains the curve, so the kernel is exact.
  std::vector<std::vector<Scalar>> cols(4);
  long long x = 0;
  std::size_t found = 0;
  while (found < 12) {
    Scalar sx = Scalar::from_int(f, x++);
    Scalar rhs = sx * sx * sx + inst.curve.a * sx + inst.curve.b;
    std::optional<Scalar> y;
    if (rhs.is_zero())
      y = rhs;
    else
      y = sqrt_mod(rhs);
    if (!y) continue;
    auto z = embed_quartic(inst.curve, ec_affine(sx, *y));
    for (std::size_t i = 0; i < 4; ++i) cols[i].push_back(z[i]);
    ++found;
  }
  Sym2Kernel sk = sym2_kernel_columns(f, cols);
  add_check(rep, "section_square_kernel_dim",
            "the kernel of multiplying degree-4 sections pairwise has "
            "dimension 2",
            std::size_t{2}, sk.kernel.size());

  // The kernel coordinates name monomials z_i z_j; rebuilt as quadrics they
  // must span the degree-2 ideal.
  auto mono2 = monomial_basis(Ambient::P3, deg(2));
  std::vector<std::vector<Scalar>> ker_rows;
  for (const auto& kv : sk.kernel) {
    MultiPoly q(f, Ambient::P3, deg(2));
    for (std::size_t k = 0; k < sk.pair_basis.size(); ++k) {
      if (kv[k].is_zero()) continue;
      Monomial m{0, 0, 0, 0};
      ++m[sk.pair_basis[k].first];
      ++m[sk.pair_basis[k].second];
      q.add_term(m, kv[k]);
    }
    ker_rows.push_back(q.coefficient_vector(mono2));
  }
  add_check(rep, "section_square_kernel_span",
            "that kernel coincides with the span of the two model quadrics",
            true,
            spans_equal(f, ker_rows, coeff_rows(inst.pencil, mono2)));

  // Sections of the twisted degree-4 class, realized as quadrics with
  // triple contact at the origin and simple contact at the negated twist,
  // counted modulo the degree-2 ideal.
  ECPoint neg_tau = ec_neg(inst.curve, inst.tau);
  std::vector<LinearCondition> conds;
  conds.push_back(
      JetVanishing{curve_jet(inst.pencil, embed_quartic(inst.curve,
                                                        ec_infinity())),
                   3});
  conds.push_back(
      JetVanishing{curve_jet(inst.pencil, embed_quartic(inst.curve, neg_tau)),
                   1});
  LinearSystem tw = solve_conditions(f, Ambient::P3, deg(2), conds);
  auto pencil_rows = coeff_rows(inst.pencil, mono2);
  bool contained = true;
  for (const auto& r : pencil_rows) {
    if (!span_contains(f, coeff_rows(tw.solutions, mono2), r))
      contained = false;
  }
  std::size_t quot = contained && tw.dimension() >= 2 ? tw.dimension() - 2
                                                      : std::size_t{0};
  add_check(rep, "twisted_section_count",
            "sections of the twisted degree-4 class number 4 modulo the "
            "degree-2 ideal",
            std::size_t{4}, quot);

  // Dimension 5 is the full expected count, so the obstruction space is 0.
  auto mono3 = monomial_basis(Ambient::P3, deg(3));
  std::size_t mod_dim =
      inst.contact_cubics.size() -
      span_rank(f, quadric_multiples(inst.quadric, mono3));
  add_check(rep, "contact_mod_quadric_full",
            "contact cubics modulo quadric multiples reach the full expected "
            "dimension 5 (vanishing obstruction)",
            std::size_t{5}, mod_dim);
}

void genus4_inverse_checks(const Genus4Spin3Instance& inst, CheckReport& rep) {
  const Field& f = inst.curve.field;
  std::vector<MultiPoly> curve_eqs{inst.quadric, inst.cubic};

  std::vector<std::vector<Scalar>> tpts;
  for (const auto& p : inst.t) tpts.push_back(embed_quartic(inst.curve, p));

  // Quadrics with double contact along the sampled genus-4 curve itself.
  std::vector<LinearCondition> conds;
  for (const auto& p : tpts)
    conds.push_back(JetVanishing{curve_jet(curve_eqs, p), 2});
  LinearSystem pen = solve_conditions(f, Ambient::P3, deg(2), conds);
  add_check(rep, "recovered_pencil_dim",
            "quadrics with double contact at the four points form a pencil "
            "(vector dimension 2)",
            std::size_t{2}, pen.dimension());

  auto mono2 = monomial_basis(Ambient::P3, deg(2));
  auto rec_rows = coeff_rows(pen.solutions, mono2);
  auto stored_rows = coeff_rows(inst.pencil, mono2);
  add_check(rep, "recovered_pencil_matches",
            "the recovered pencil equals the stored degree-2 ideal as a "
            "subspace",
            true, spans_equal(f, rec_rows, stored_rows));

  bool q_in = span_contains(f, rec_rows, inst.quadric.coefficient_vector(mono2));
  add_check(rep, "quadric_in_recovered",
            "the quadric cutting the curve lies in the recovered pencil",
            true, q_in);

  // Unique member containing the curve: the quadric itself reduces to zero
  // modulo the curve ideal, and any complementary pencil member does not.
  std::vector<GPoly> gb = groebner_basis(
      {GPoly::from_multipoly(inst.quadric, MonomialOrder::DegRevLex),
       GPoly::from_multipoly(inst.cubic, MonomialOrder::DegRevLex)});
  bool unique = false;
  if (q_in && pen.dimension() == 2) {
    auto qc = coordinates_in_span(f, rec_rows,
                                  inst.quadric.coefficient_vector(mono2));
    // Complete the quadric to a basis of the pencil with whichever
    // recovered generator has a coordinate it does not use.
    std::size_t other = (*qc)[0].is_zero() ? 0 : 1;
    bool q_member = ideal_member(
        GPoly::from_multipoly(inst.quadric, MonomialOrder::DegRevLex), gb);
    bool other_member = ideal_member(
        GPoly::from_multipoly(pen.solutions[other], MonomialOrder::DegRevLex),
        gb);
    unique = q_member && !other_member;
  }
  add_check(rep, "unique_member_containing_curve",
            "the quadric is the unique pencil member containing the curve",
            true, unique);

  // Twist certificates recomputed from recovered data: the contact divisor
  // stays noncoplanar and the cubic cuts it with total order 12.
  add_check(rep, "recovered_t_noncoplanar",
            "the contact points recovered on the curve are noncoplanar", true,
            !embedded_coplanar(inst.curve,
                               {inst.t[0], inst.t[1], inst.t[2], inst.t[3]}));
  RestrictionDivisor rd =
      restriction_divisor(inst.cubic, pen.solutions, tpts, 12);
  add_check(rep, "recovered_contact_orders",
            "on the recovered pencil's base curve the cubic again cuts order "
            "exactly 3 at each contact point",
            true, orders_exactly(rd, 4, 3));
}

CheckReport run_genus4_spin3(const Field& f, std::uint64_t seed,
                             std::size_t cap, bool with_inverse) {
  CheckReport rep;
  rep.pipeline = with_inverse ? "genus4-spin3-roundtrip" : "genus4-spin3";
  rep.field = field_label(f);
  rep.seed = seed;
  Resampler rs(cap);
  try {
    Genus4Spin3Instance inst = genus4_spin3_instance(f, seed, rs, rep);
    genus4_bundle_checks(inst, rep);
    if (with_inverse) genus4_inverse_checks(inst, rep);
  } catch (const search_exhausted_error&) {
    rep.exhausted = true;
  }
  rep.resamples = rs.total();
  return rep;
}

}  // namespace spinver
