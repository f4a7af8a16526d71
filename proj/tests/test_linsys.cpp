#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "spinver/errors.hpp"
#include "spinver/jet.hpp"
#include "spinver/linsys.hpp"
#include "spinver/poly.hpp"

using namespace spinver;

namespace {

const Field Fp = Field::prime(10007);
const Field Q = Field::rational();

std::vector<Scalar> pt(const Field& f, const std::vector<long long>& v) {
  std::vector<Scalar> out;
  for (long long c : v) out.push_back(Scalar::from_int(f, c));
  return out;
}

MultiPoly term(const Field& f, Ambient amb, const Monomial& m, long long c) {
  return MultiPoly::from_term(f, amb, m, Scalar::from_int(f, c));
}

// x0 x2 - x1^2, the rank-three conic used as a smooth test curve.
MultiPoly conic(const Field& f) {
  return term(f, Ambient::P2, {1, 0, 1, 0}, 1) +
         term(f, Ambient::P2, {0, 2, 0, 0}, -1);
}

}  // namespace

TEST_CASE("point conditions cut conics as expected") {
  for (const Field& f : {Q, Fp}) {
    std::vector<std::vector<Scalar>> pts{
        pt(f, {1, 0, 0}), pt(f, {0, 1, 0}), pt(f, {0, 0, 1}),
        pt(f, {1, 1, 1}), pt(f, {1, 2, 3})};
    std::vector<LinearCondition> conds;
    for (const auto& p : pts) conds.push_back(PointMultiplicity{p, 1});

    LinearSystem five = solve_conditions(f, Ambient::P2, deg(2), conds);
    CHECK(five.dimension() == 1);
    CHECK(five.condition_rank == 5);
    for (const auto& p : pts)
      CHECK(five.solutions.front().evaluate(p).is_zero());

    conds.pop_back();
    LinearSystem four = solve_conditions(f, Ambient::P2, deg(2), conds);
    CHECK(four.dimension() == 2);
  }
}

TEST_CASE("a double point imposes three conditions on conics") {
  LinearSystem sys = solve_conditions(
      Fp, Ambient::P2, deg(2),
      {PointMultiplicity{pt(Fp, {0, 0, 1}), 2}});
  CHECK(sys.condition_rank == 3);
  CHECK(sys.dimension() == 3);
  // Every solution lies in the span of x0^2, x0 x1, x1^2.
  for (const auto& s : sys.solutions) {
    CHECK(s.coefficient({0, 0, 2, 0}).is_zero());
    CHECK(s.coefficient({1, 0, 1, 0}).is_zero());
    CHECK(s.coefficient({0, 1, 1, 0}).is_zero());
  }
}

TEST_CASE("jet conditions pick out the tangent line") {
  for (const Field& f : {Q, Fp}) {
    MultiPoly c = conic(f);
    CurveJet jet = curve_jet({c}, pt(f, {0, 0, 1}));
    LinearSystem sys =
        solve_conditions(f, Ambient::P2, deg(1), {JetVanishing{jet, 2}});
    REQUIRE(sys.dimension() == 1);
    // The tangent to x0 x2 = x1^2 at (0:0:1) is x0 = 0.
    MultiPoly x0 = term(f, Ambient::P2, {1, 0, 0, 0}, 1);
    MultiPoly x1 = term(f, Ambient::P2, {0, 1, 0, 0}, 1);
    CHECK(sys.solutions.front().monic() == x0);
    CHECK(satisfies_condition(x0, JetVanishing{jet, 2}));
    CHECK_FALSE(satisfies_condition(x1, JetVanishing{jet, 2}));
  }
}

TEST_CASE("ruling proportionality linearizes to two conditions") {
  // Forms of bidegree (2,2) whose restriction to the ruling over (1:0) is a
  // multiple of y0 y1.
  std::vector<Scalar> target{Scalar::zero(Fp), Scalar::one(Fp),
                             Scalar::zero(Fp)};
  RulingProportional cond{0, {Scalar::one(Fp), Scalar::zero(Fp)}, target};
  LinearSystem sys =
      solve_conditions(Fp, Ambient::P1xP1, bideg(2, 2), {cond});
  CHECK(sys.condition_rank == 2);
  CHECK(sys.dimension() == 7);
  for (const auto& s : sys.solutions) {
    CHECK(satisfies_condition(s, cond));
    std::vector<Scalar> r = restrict_to_ruling(s, 0, cond.point);
    REQUIRE(r.size() == 3);
    // Proportionality to (0, 1, 0) forces the outer coefficients to vanish.
    CHECK(r[0].is_zero());
    CHECK(r[2].is_zero());
  }
}

TEST_CASE("sym2 kernel finds the quadric relation of the conic map") {
  for (const Field& f : {Q, Fp}) {
    std::vector<MultiPoly> v{term(f, Ambient::P2, {2, 0, 0, 0}, 1),
                             term(f, Ambient::P2, {1, 1, 0, 0}, 1),
                             term(f, Ambient::P2, {0, 2, 0, 0}, 1)};
    Sym2Kernel k = sym2_kernel(v);
    REQUIRE(k.pair_basis.size() == 6);
    REQUIRE(k.kernel.size() == 1);
    // v0 v2 - v1^2 = 0; pairs are ordered (0,0),(0,1),(0,2),(1,1),(1,2),(2,2).
    std::vector<Scalar> expect{Scalar::zero(f), Scalar::zero(f),
                               Scalar::one(f), -Scalar::one(f),
                               Scalar::zero(f), Scalar::zero(f)};
    CHECK(k.kernel.front() == expect);
  }
}

TEST_CASE("sym2 kernel from evaluation columns agrees") {
  // Values of x^2, x, 1 at sample points x = 0..6.
  std::vector<std::vector<Scalar>> cols(3);
  for (long long t = 0; t <= 6; ++t) {
    Scalar x = Scalar::from_int(Fp, t);
    cols[0].push_back(x * x);
    cols[1].push_back(x);
    cols[2].push_back(Scalar::one(Fp));
  }
  Sym2Kernel k = sym2_kernel_columns(Fp, cols);
  REQUIRE(k.kernel.size() == 1);
  // v0 v2 = v1^2 again, in the same pair coordinates.
  std::vector<Scalar> expect{Scalar::zero(Fp), Scalar::zero(Fp),
                             Scalar::one(Fp), -Scalar::one(Fp),
                             Scalar::zero(Fp), Scalar::zero(Fp)};
  CHECK(k.kernel.front() == expect);
}

TEST_CASE("restriction divisors report tangency orders") {
  for (const Field& f : {Q, Fp}) {
    MultiPoly c = conic(f);
    MultiPoly x0 = term(f, Ambient::P2, {1, 0, 0, 0}, 1);
    MultiPoly x1 = term(f, Ambient::P2, {0, 1, 0, 0}, 1);

    // The tangent line x0 meets the conic only at (0:0:1), to order two.
    RestrictionDivisor tangent = restriction_divisor(
        x0, {c}, {pt(f, {0, 0, 1}), pt(f, {1, 1, 1})}, 2);
    REQUIRE(tangent.points.size() == 1);
    CHECK(tangent.points.front().order == 2);
    CHECK(tangent.points.front().exact);
    CHECK(tangent.total == 2);
    CHECK(tangent.accounts_for_expected);

    // The secant x1 picks up two simple points.
    RestrictionDivisor secant = restriction_divisor(
        x1, {c}, {pt(f, {1, 0, 0}), pt(f, {0, 0, 1})}, 2);
    REQUIRE(secant.points.size() == 2);
    CHECK(secant.points[0].order == 1);
    CHECK(secant.points[1].order == 1);
    CHECK(secant.accounts_for_expected);

    // A wrong expected total is reported, not silently accepted.
    RestrictionDivisor off = restriction_divisor(
        x0, {c}, {pt(f, {0, 0, 1})}, 3);
    CHECK(off.total == 2);
    CHECK_FALSE(off.accounts_for_expected);
  }
}

TEST_CASE("restriction divisor guards") {
  MultiPoly c = conic(Fp);
  CHECK_THROWS_AS(restriction_divisor(c, {c}, {pt(Fp, {0, 0, 1})}, 2),
                  identically_zero_error);
  MultiPoly x0 = term(Fp, Ambient::P2, {1, 0, 0, 0}, 1);
  CHECK_THROWS_AS(restriction_divisor(x0, {c}, {pt(Fp, {1, 1, 0})}, 2),
                  invalid_argument_error);
}
