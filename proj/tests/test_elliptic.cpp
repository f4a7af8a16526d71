#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "spinver/elliptic.hpp"
#include "spinver/errors.hpp"
#include "spinver/matrix.hpp"
#include "spinver/poly.hpp"
#include "spinver/rng.hpp"

using namespace spinver;

namespace {

const Field Fp = Field::prime(10007);

Scalar fp(long long v) { return Scalar::from_int(Fp, v); }

// Horner evaluation of ascending coefficients.
Scalar eval_poly(const std::vector<Scalar>& coeffs, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

}  // namespace

TEST_CASE("curve construction validates field and discriminant") {
  CHECK_THROWS_AS(make_curve(Field::rational(), Scalar::from_int(Field::rational(), 1),
                             Scalar::from_int(Field::rational(), 1)),
                  bad_characteristic_error);
  Field f3 = Field::prime(3);
  CHECK_THROWS_AS(make_curve(f3, Scalar::from_int(f3, 1), Scalar::from_int(f3, 1)),
                  bad_characteristic_error);
  // y^2 = x^3 - 3x + 2 factors as (x - 1)^2 (x + 2): singular.
  CHECK_THROWS_AS(make_curve(Fp, fp(-3), fp(2)), invalid_argument_error);
  EllipticCurve e = make_curve(Fp, fp(1), fp(1));
  CHECK(e.field == Fp);
}

TEST_CASE("group law satisfies the abelian group axioms") {
  EllipticCurve e = make_curve(Fp, fp(2), fp(3));
  Rng rng(7);
  ECPoint p = random_point(rng, e);
  ECPoint q = random_point(rng, e);
  ECPoint r = random_point(rng, e);
  REQUIRE(on_curve(e, p));
  REQUIRE(on_curve(e, q));

  CHECK(on_curve(e, ec_add(e, p, q)));
  CHECK(ec_add(e, p, ec_infinity()) == p);
  CHECK(ec_add(e, p, ec_neg(e, p)) == ec_infinity());
  CHECK(ec_add(e, p, q) == ec_add(e, q, p));
  CHECK(ec_add(e, ec_add(e, p, q), r) == ec_add(e, p, ec_add(e, q, r)));
  CHECK(ec_sub(e, ec_add(e, p, q), q) == p);
  // Doubling must agree with repeated addition.
  CHECK(ec_add(e, p, p) == ec_mul(e, 2, p));
}

TEST_CASE("scalar multiples and orders") {
  Rng rng(11);
  TorsionSample ts = sample_curve_with_torsion(rng, Fp, 3);
  const EllipticCurve& e = ts.curve;
  const ECPoint& tau = ts.tau;
  REQUIRE(on_curve(e, tau));

  CHECK(ec_mul(e, 1, tau) == tau);
  CHECK(ec_mul(e, 2, tau) == ec_neg(e, tau));
  CHECK(ec_mul(e, 3, tau) == ec_infinity());
  CHECK(ec_mul(e, -1, tau) == ec_neg(e, tau));
  CHECK(ec_order(e, tau) == 3);

  ECPoint p = random_point(rng, e);
  CHECK(ec_mul(e, 5, p) ==
        ec_add(e, ec_mul(e, 2, p), ec_mul(e, 3, p)));
}

TEST_CASE("square roots modulo p") {
  CHECK(sqrt_mod(fp(4)) == fp(2));
  CHECK(sqrt_mod(fp(9)) == fp(3));
  CHECK(sqrt_mod(fp(0)) == fp(0));
  // 10007 = 3 mod 4, so -1 is not a square.
  CHECK_FALSE(sqrt_mod(fp(-1)).has_value());
  for (long long v : {2, 5, 1234, 9999}) {
    auto r = sqrt_mod(fp(v) * fp(v));
    REQUIRE(r.has_value());
    CHECK(*r * *r == fp(v) * fp(v));
  }
  CHECK_THROWS_AS(sqrt_mod(Scalar::from_int(Field::rational(), 4)),
                  bad_characteristic_error);
}

TEST_CASE("torsion sampling produces points of exact order") {
  for (int n : {3, 4}) {
    Rng rng(100 + n);
    TorsionSample ts = sample_curve_with_torsion(rng, Fp, n);
    CHECK(on_curve(ts.curve, ts.tau));
    CHECK(ec_order(ts.curve, ts.tau) == std::size_t(n));
    if (n == 4) CHECK(ec_mul(ts.curve, 2, ts.tau) != ec_infinity());

    std::vector<Scalar> div =
        n == 3 ? torsion3_poly(ts.curve) : torsion4_poly(ts.curve);
    CHECK(eval_poly(div, ts.tau.x).is_zero());

    std::vector<ECPoint> tors = torsion_points(ts.curve, n);
    CHECK(std::find(tors.begin(), tors.end(), ts.tau) != tors.end());
    CHECK(std::find(tors.begin(), tors.end(), ec_neg(ts.curve, ts.tau)) !=
          tors.end());
  }
}

TEST_CASE("random points are reproducible and guarded") {
  EllipticCurve e = make_curve(Fp, fp(1), fp(6));
  Rng a(42), b(42);
  ECPoint pa = random_point(a, e);
  ECPoint pb = random_point(b, e);
  CHECK(pa == pb);
  CHECK(on_curve(e, pa));

  Field q = Field::rational();
  EllipticCurve over_q{q, Scalar::from_int(q, 1), Scalar::from_int(q, 6)};
  Rng c(1);
  CHECK_THROWS_AS(random_point(c, over_q), invalid_argument_error);
}

TEST_CASE("quartic embedding lands on the model quadrics") {
  Rng rng(5);
  TorsionSample ts = sample_curve_with_torsion(rng, Fp, 3);
  const EllipticCurve& e = ts.curve;
  std::vector<MultiPoly> model = model_quadrics(e);
  REQUIRE(model.size() == 2);

  std::vector<ECPoint> pts{ec_infinity(), ts.tau, random_point(rng, e),
                           random_point(rng, e)};
  for (const auto& p : pts) {
    std::vector<Scalar> z = embed_quartic(e, p);
    REQUIRE(z.size() == 4);
    for (const auto& quad : model) CHECK(quad.evaluate(z).is_zero());
  }
  CHECK(embed_quartic(e, ec_infinity()) ==
        std::vector<Scalar>{fp(0), fp(0), fp(0), fp(1)});

  ECPoint off = ec_affine(fp(1), fp(1));
  if (!on_curve(e, off))
    CHECK_THROWS_AS(embed_quartic(e, off), invalid_argument_error);
}

TEST_CASE("quadrics through the embedded curve match the model") {
  Rng rng(9);
  TorsionSample ts = sample_curve_with_torsion(rng, Fp, 4);
  std::vector<MultiPoly> rec = quadrics_through_embedded_curve(ts.curve);
  std::vector<MultiPoly> model = model_quadrics(ts.curve);
  REQUIRE(rec.size() == 2);

  std::vector<Monomial> mono = monomial_basis(Ambient::P3, deg(2));
  auto rows = [&](const std::vector<MultiPoly>& ps) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& p : ps) out.push_back(p.coefficient_vector(mono));
    return out;
  };
  CHECK(spans_equal(Fp, rows(rec), rows(model)));
}

TEST_CASE("coplanarity of embedded quadruples tracks the class sum") {
  Rng rng(13);
  EllipticCurve e = make_curve(Fp, fp(3), fp(5));
  ECPoint p = random_point(rng, e);
  ECPoint q = random_point(rng, e);
  REQUIRE(p != q);
  REQUIRE(p != ec_neg(e, q));

  std::vector<ECPoint> balanced{p, ec_neg(e, p), q, ec_neg(e, q)};
  CHECK(divisor_class_sum(e, balanced) == ec_infinity());
  CHECK(embedded_coplanar(e, balanced));

  std::vector<ECPoint> askew{p, ec_neg(e, p), q, ec_add(e, q, p)};
  REQUIRE(divisor_class_sum(e, askew) != ec_infinity());
  CHECK_FALSE(embedded_coplanar(e, askew));

  CHECK(divisor_class_sum(e, {}) == ec_infinity());
  CHECK(divisor_class_sum(e, {p, q, ec_neg(e, ec_add(e, p, q))}) ==
        ec_infinity());
}
