#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "spinver/errors.hpp"
#include "spinver/groebner.hpp"
#include "spinver/poly.hpp"

using namespace spinver;

namespace {

const Field Q = Field::rational();
const Field Fp = Field::prime(10007);

// Builds a GPoly from (exponent, numerator) pairs in two or three variables.
GPoly gp(const Field& f, std::size_t nvars,
         const std::vector<std::pair<Monomial, long long>>& terms,
         MonomialOrder ord = MonomialOrder::DegRevLex) {
  GPoly p(f, nvars, ord);
  for (const auto& [m, c] : terms) p.add_term(m, Scalar::from_int(f, c));
  return p;
}

MultiPoly mp(const Field& f, Ambient amb,
             const std::vector<std::pair<Monomial, long long>>& terms) {
  MultiPoly p = MultiPoly::from_term(f, amb, terms.front().first,
                                     Scalar::from_int(f, terms.front().second));
  for (std::size_t i = 1; i < terms.size(); ++i)
    p.add_term(terms[i].first, Scalar::from_int(f, terms[i].second));
  return p;
}

std::set<std::string> point_strings(const SolutionSet& s) {
  std::set<std::string> out;
  for (const auto& pt : s.points) {
    std::string key;
    for (const auto& c : pt) key += c.to_string() + ";";
    out.insert(key);
  }
  return out;
}

}  // namespace

TEST_CASE("buchberger closes the pair set") {
  // (x^2, xy + y^2) needs the s-polynomial y^3 to close.
  GPoly g1 = gp(Q, 2, {{{{2, 0, 0, 0}}, 1}});
  GPoly g2 = gp(Q, 2, {{{{1, 1, 0, 0}}, 1}, {{{0, 2, 0, 0}}, 1}});
  std::vector<GPoly> gb = groebner_basis({g1, g2});
  CHECK(gb.size() == 3);
  for (const auto& g : gb) CHECK(g.leading_coefficient().is_one());

  GPoly ycube = gp(Q, 2, {{{{0, 3, 0, 0}}, 1}});
  CHECK(ideal_member(ycube, gb));
  GPoly ysq = gp(Q, 2, {{{{0, 2, 0, 0}}, 1}});
  CHECK_FALSE(ideal_member(ysq, gb));
}

TEST_CASE("normal form strips exactly the reducible part") {
  GPoly g1 = gp(Q, 2, {{{{2, 0, 0, 0}}, 1}});
  GPoly g2 = gp(Q, 2, {{{{1, 1, 0, 0}}, 1}, {{{0, 2, 0, 0}}, 1}});
  std::vector<GPoly> gb = groebner_basis({g1, g2});

  // x^2 y + y reduces to y: the first term dies against x^2.
  GPoly h = gp(Q, 2, {{{{2, 1, 0, 0}}, 1}, {{{0, 1, 0, 0}}, 1}});
  GPoly expect = gp(Q, 2, {{{{0, 1, 0, 0}}, 1}});
  CHECK(normal_form(h, gb) == expect);
  CHECK(normal_form(expect, gb) == expect);
}

TEST_CASE("membership separates multiples from nonmembers") {
  // Ideal (x - y): contains x^2 - y^2, not x + y.
  GPoly d = gp(Fp, 2, {{{{1, 0, 0, 0}}, 1}, {{{0, 1, 0, 0}}, -1}});
  std::vector<GPoly> gb = groebner_basis({d});
  GPoly diffsq = gp(Fp, 2, {{{{2, 0, 0, 0}}, 1}, {{{0, 2, 0, 0}}, -1}});
  GPoly sum = gp(Fp, 2, {{{{1, 0, 0, 0}}, 1}, {{{0, 1, 0, 0}}, 1}});
  CHECK(ideal_member(diffsq, gb));
  CHECK_FALSE(ideal_member(sum, gb));
}

TEST_CASE("graded pieces span the monomial multiples") {
  GPoly x = gp(Q, 2, {{{{1, 0, 0, 0}}, 1}});
  std::vector<GPoly> piece = graded_piece({x}, 3);
  CHECK(piece.size() == 3);
  std::vector<GPoly> gb = groebner_basis({x});
  for (const auto& g : piece) {
    CHECK(g.degree() == 3);
    CHECK(ideal_member(g, gb));
  }
}

TEST_CASE("irrelevant ideal is projectively empty with certificate one") {
  std::vector<GPoly> gens;
  for (std::size_t v = 0; v < 3; ++v) {
    Monomial m{0, 0, 0, 0};
    m[v] = 1;
    gens.push_back(gp(Q, 3, {{m, 1}}));
  }
  EmptinessResult r = is_projectively_empty(gens);
  CHECK(r.decision == Emptiness::EMPTY);
  CHECK(r.power_certificate == 1);

  std::vector<GPoly> squares;
  for (std::size_t v = 0; v < 3; ++v) {
    Monomial m{0, 0, 0, 0};
    m[v] = 2;
    squares.push_back(gp(Q, 3, {{m, 1}}));
  }
  EmptinessResult r2 = is_projectively_empty(squares);
  CHECK(r2.decision == Emptiness::EMPTY);
  CHECK(r2.power_certificate == 2);
}

TEST_CASE("a hypersurface is never projectively empty") {
  // Rank-three conic x0 x2 - x1^2 in three variables.
  GPoly c = gp(Q, 3, {{{{1, 0, 1, 0}}, 1}, {{{0, 2, 0, 0}}, -1}});
  EmptinessResult r = is_projectively_empty({c});
  CHECK(r.decision == Emptiness::NONEMPTY);
}

TEST_CASE("affine solving lists all rational roots") {
  // x^2 - 3x + 2 = 0, y = x over the rationals: (1,1) and (2,2).
  GPoly f1 = gp(Q, 2,
                {{{{2, 0, 0, 0}}, 1}, {{{1, 0, 0, 0}}, -3}, {{{0, 0, 0, 0}}, 2}});
  GPoly f2 = gp(Q, 2, {{{{0, 1, 0, 0}}, 1}, {{{1, 0, 0, 0}}, -1}});
  SolutionSet s = solve_affine({f1, f2}, {0, 1});
  CHECK(s.all_points_rational);
  CHECK(s.points.size() == 2);
  std::set<std::string> expect{"1;1;", "2;2;"};
  CHECK(point_strings(s) == expect);
}

TEST_CASE("affine solving flags irrational roots") {
  GPoly f1 = gp(Q, 1, {{{{2, 0, 0, 0}}, 1}, {{{0, 0, 0, 0}}, -2}});
  SolutionSet s = solve_affine({f1}, {0});
  CHECK(s.points.empty());
  CHECK_FALSE(s.all_points_rational);
}

TEST_CASE("positive-dimensional systems are rejected") {
  GPoly d = gp(Q, 2, {{{{1, 0, 0, 0}}, 1}, {{{0, 1, 0, 0}}, -1}});
  CHECK_THROWS_AS(solve_affine({d}, {0, 1}), nonreduced_error);
}

TEST_CASE("smooth hypersurfaces have certified empty singular locus") {
  for (const Field& f : {Q, Fp}) {
    MultiPoly conic = mp(f, Ambient::P2,
                         {{{{1, 0, 1, 0}}, 1}, {{{0, 2, 0, 0}}, -1}});
    SolutionSet s = singular_points(conic);
    CHECK(s.points.empty());
    CHECK(s.all_points_rational);

    MultiPoly diag = mp(f, Ambient::P1xP1,
                        {{{{1, 0, 0, 1}}, 1}, {{{0, 1, 1, 0}}, -1}});
    SolutionSet sd = singular_points(diag);
    CHECK(sd.points.empty());
    CHECK(sd.all_points_rational);
  }
}

TEST_CASE("nodal cubic is singular exactly at its node") {
  for (const Field& f : {Q, Fp}) {
    // x1^2 x2 - x0^3 - x0^2 x2 has an ordinary node at (0:0:1).
    MultiPoly cubic = mp(f, Ambient::P2,
                         {{{{0, 2, 1, 0}}, 1},
                          {{{3, 0, 0, 0}}, -1},
                          {{{2, 0, 1, 0}}, -1}});
    SolutionSet s = singular_points(cubic);
    CHECK(s.all_points_rational);
    REQUIRE(s.points.size() == 1);
    std::vector<Scalar> node{Scalar::zero(f), Scalar::zero(f), Scalar::one(f)};
    CHECK(s.points.front() == normalize_projective(node));
  }
}
