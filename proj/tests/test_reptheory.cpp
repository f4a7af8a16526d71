#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "spinver/errors.hpp"
#include "spinver/matrix.hpp"
#include "spinver/poly.hpp"
#include "spinver/reptheory.hpp"

using namespace spinver;

namespace {

const Field Fp = Field::prime(10007);
const Field Q = Field::rational();

}  // namespace

TEST_CASE("group closure, inverses and layout") {
  for (const Field& f : {Q, Fp}) {
    std::vector<GroupElement> group = build_group(f);
    REQUIRE(group.size() == 12);
    for (std::size_t i = 0; i < 12; ++i)
      CHECK(group[i].swap == (i >= 6));
    CHECK(is_identity(group.front()));

    for (const auto& g : group) {
      CHECK(is_identity(compose(g, invert(g))));
      bool closed = false;
      for (const auto& h : group)
        if (same_element(h, compose(g, group[3]))) closed = true;
      CHECK(closed);
    }
  }
}

TEST_CASE("the point action realizes the marked-point permutations") {
  std::vector<GroupElement> group = build_group(Fp);
  std::vector<std::vector<Scalar>> marked = marked_points(Fp);
  REQUIRE(marked.size() == 3);
  for (const auto& g : group)
    for (int i = 0; i < 3; ++i)
      CHECK(apply_to_point(g, marked[i]) == marked[g.perm[i]]);

  // Composition of permutations matches composition of elements.
  for (const auto& a : group)
    for (const auto& b : group) {
      GroupElement ab = compose(a, b);
      for (int i = 0; i < 3; ++i)
        CHECK(ab.perm[i] == a.perm[b.perm[i]]);
    }
}

TEST_CASE("diagonal form is scaled by the sign character") {
  for (const Field& f : {Q, Fp}) {
    std::vector<GroupElement> group = build_group(f);
    MultiPoly l = diagonal_form(f);
    for (const auto& g : group) {
      auto factor = proportionality_factor(apply_element(g, l), l);
      REQUIRE(factor.has_value());
      int expect = perm_sign(g.perm) * (g.swap ? -1 : 1);
      CHECK(*factor == Scalar::from_int(f, expect));
    }
  }
}

TEST_CASE("pair conics vanish at the complementary marked points") {
  std::vector<std::vector<Scalar>> marked = marked_points(Fp);
  for (int i = 1; i <= 3; ++i) {
    MultiPoly h = pair_conic(Fp, i);
    for (int j = 0; j < 3; ++j) {
      Scalar v = h.evaluate(marked[j]);
      if (j == i - 1)
        CHECK_FALSE(v.is_zero());
      else
        CHECK(v.is_zero());
    }
  }
}

TEST_CASE("the alternating pair-conic sum is fixed by the whole group") {
  for (const Field& f : {Q, Fp}) {
    std::vector<GroupElement> group = build_group(f);
    MultiPoly inv = pair_conic_invariant(f);
    for (const auto& g : group) CHECK(apply_element(g, inv) == inv);
  }
}

TEST_CASE("tritangent system is ten-dimensional with the six lines apart") {
  std::vector<MultiPoly> sys = tritangent_system(Fp);
  REQUIRE(sys.size() == 10);
  CHECK(sys.front() == six_lines_form(Fp));

  std::vector<Monomial> mono = monomial_basis(Ambient::P1xP1, bideg(3, 3));
  std::vector<std::vector<Scalar>> rows;
  for (const auto& p : sys) {
    CHECK(p.degree() == bideg(3, 3));
    rows.push_back(p.coefficient_vector(mono));
  }
  CHECK(span_rank(Fp, rows) == 10);

  // The six-line product is not a multiple of the diagonal form.
  std::vector<std::vector<Scalar>> diag_part(rows.begin() + 1, rows.end());
  CHECK_FALSE(span_contains(Fp, diag_part, rows.front()));
}

TEST_CASE("induced matrices form a representation") {
  std::vector<GroupElement> group = build_group(Fp);
  std::vector<MultiPoly> sys = tritangent_system(Fp);
  std::vector<Matrix> mats;
  for (const auto& g : group) mats.push_back(induced_matrix(g, sys));

  std::size_t checked = 0;
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = 0; j < group.size(); ++j) {
      GroupElement gh = compose(group[i], group[j]);
      CHECK(induced_matrix(gh, sys) == mats[i] * mats[j]);
      ++checked;
    }
  CHECK(checked == 144);
}

TEST_CASE("non-stable systems are rejected") {
  std::vector<GroupElement> group = build_group(Fp);
  MultiPoly x0y0 = MultiPoly::from_term(Fp, Ambient::P1xP1, {1, 0, 1, 0},
                                        Scalar::one(Fp));
  const GroupElement* swap01 = nullptr;
  for (const auto& g : group)
    if (!g.swap && g.perm == std::array<int, 3>{1, 0, 2}) swap01 = &g;
  REQUIRE(swap01 != nullptr);
  CHECK_THROWS_AS(induced_matrix(*swap01, {x0y0}), not_invariant_error);
  CHECK_THROWS_AS(decompose(group, {x0y0}), not_invariant_error);
}

TEST_CASE("decomposition of the tritangent system") {
  for (const Field& f : {Q, Fp}) {
    std::vector<GroupElement> group = build_group(f);
    Decomposition d = decompose(group, tritangent_system(f));
    REQUIRE(d.summands.size() == 7);

    struct Row { int ev; Isotype t; std::size_t dim; };
    std::vector<Row> expect{
        {1, Isotype::Trivial, 1},  {1, Isotype::Trivial, 1},
        {1, Isotype::Standard, 2}, {-1, Isotype::Sign, 1},
        {-1, Isotype::Sign, 1},    {-1, Isotype::Standard, 2},
        {-1, Isotype::Standard, 2}};
    std::size_t total = 0;
    for (std::size_t i = 0; i < 7; ++i) {
      CHECK(d.summands[i].eigenvalue == expect[i].ev);
      CHECK(d.summands[i].isotype == expect[i].t);
      CHECK(d.summands[i].dim() == expect[i].dim);
      CHECK(d.summands[i].forms.size() == expect[i].dim);
      total += d.summands[i].dim();
    }
    CHECK(total == 10);

    // Every summand form really is a factor-exchange eigenvector.
    const GroupElement& iota = factor_exchange(group);
    for (const auto& s : d.summands)
      for (const auto& form : s.forms)
        CHECK(apply_element(iota, form) ==
              form.scaled(Scalar::from_int(f, s.eigenvalue)));

    // Two-dimensional summands are faithful, one-dimensional ones are not.
    for (const auto& s : d.summands)
      CHECK(summand_faithful(group, s) == (s.dim() == 2));
  }
}

TEST_CASE("decomposition guards") {
  std::vector<GroupElement> group = build_group(Fp);
  MultiPoly x0 = MultiPoly::from_term(Fp, Ambient::P1xP1, {1, 0, 0, 0},
                                      Scalar::one(Fp));
  CHECK_THROWS_AS(decompose(group, {x0}), invalid_argument_error);

  Field f3 = Field::prime(3);
  std::vector<GroupElement> g3 = build_group(f3);
  CHECK_THROWS_AS(decompose(g3, {diagonal_form(f3)}),
                  bad_characteristic_error);
}

TEST_CASE("decomposition report is deterministic") {
  std::vector<GroupElement> group = build_group(Fp);
  Decomposition a = decompose(group, tritangent_system(Fp));
  Decomposition b = decompose(group, tritangent_system(Fp));
  CHECK(decomposition_to_json(a).dump() == decomposition_to_json(b).dump());
  CHECK_FALSE(decomposition_to_json(a).dump().empty());
}
