#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "spinver/errors.hpp"
#include "spinver/matrix.hpp"
#include "spinver/rng.hpp"

using namespace spinver;

namespace {

Matrix mat(const Field& f, const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Scalar>> s;
  for (const auto& r : rows) {
    std::vector<Scalar> sr;
    for (long long v : r) sr.push_back(Scalar::from_int(f, v));
    s.push_back(std::move(sr));
  }
  return Matrix::from_rows(f, s);
}

std::vector<Scalar> vec(const Field& f, const std::vector<long long>& v) {
  std::vector<Scalar> s;
  for (long long x : v) s.push_back(Scalar::from_int(f, x));
  return s;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(10007);
  Scalar a = Scalar::from_int(f, 12345);
  Scalar b = Scalar::from_int(f, -1);
  CHECK(a == Scalar::from_int(f, 12345 - 10007));
  CHECK(b == Scalar::from_int(f, 10006));
  CHECK((a * a.inverse()).is_one());
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(Scalar::zero(f).inverse(), division_by_zero_error);
}

TEST_CASE("rational arithmetic is exact") {
  Field q = Field::rational();
  Scalar third = Scalar::from_int(q, 1) / Scalar::from_int(q, 3);
  Scalar sixth = Scalar::from_int(q, 1) / Scalar::from_int(q, 6);
  Scalar half = Scalar::from_int(q, 1) / Scalar::from_int(q, 2);
  CHECK(third + sixth == half);
  CHECK((third * Scalar::from_int(q, 3)).is_one());
}

TEST_CASE("scalars from different fields refuse to mix") {
  Field f = Field::prime(10007);
  Field q = Field::rational();
  CHECK_THROWS_AS(Scalar::one(f) + Scalar::one(q), field_mismatch_error);
}

TEST_CASE("echelon form, rank, kernel") {
  Field f = Field::prime(10007);
  Matrix m = mat(f, {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
  Echelon e = reduce(m);
  CHECK(e.rank == 2);
  CHECK(e.pivot_cols == std::vector<std::size_t>{0, 1});

  auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) {
    auto img = m.apply(v);
    for (const auto& x : img) CHECK(x.is_zero());
  }
}

TEST_CASE("rank plus nullity equals column count") {
  Rng rng(99);
  for (const Field& f : {Field::prime(10007), Field::rational()}) {
    for (int trial = 0; trial < 8; ++trial) {
      std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(6);
      Matrix m(f, rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          m.at(i, j) = rng.element(f);
      CHECK(rank(m) + kernel_basis(m).size() == cols);
    }
  }
}

TEST_CASE("determinant") {
  Field q = Field::rational();
  Matrix m = mat(q, {{2, 0, 1}, {1, 1, 0}, {0, 3, 1}});
  CHECK(determinant(m) == Scalar::from_int(q, 5));
  Matrix s = mat(q, {{1, 2}, {2, 4}});
  CHECK(determinant(s).is_zero());
}

TEST_CASE("eigenspace") {
  Field f = Field::prime(10007);
  // Projection onto the first coordinate.
  Matrix m = mat(f, {{1, 1}, {0, 0}});
  auto fixed = eigenspace(m, Scalar::one(f));
  CHECK(fixed.size() == 1);
  auto zero = eigenspace(m, Scalar::zero(f));
  CHECK(zero.size() == 1);
}

TEST_CASE("linear solve") {
  Field q = Field::rational();
  Matrix m = mat(q, {{1, 1}, {1, 2}});
  auto x = solve(m, {Scalar::from_int(q, 3), Scalar::from_int(q, 5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar::from_int(q, 1));
  CHECK((*x)[1] == Scalar::from_int(q, 2));

  Matrix bad = mat(q, {{1, 1}, {2, 2}});
  CHECK(!solve(bad, {Scalar::from_int(q, 0), Scalar::from_int(q, 1)})
             .has_value());
}

TEST_CASE("span helpers") {
  Field f = Field::prime(10007);
  std::vector<std::vector<Scalar>> a{vec(f, {1, 0, 1}), vec(f, {0, 1, 1})};
  std::vector<std::vector<Scalar>> b{vec(f, {1, 1, 2}), vec(f, {1, -1, 0})};
  CHECK(spans_equal(f, a, b));
  CHECK(span_rank(f, a) == 2);

  std::vector<Scalar> v = vec(f, {2, 3, 5});
  CHECK(span_contains(f, a, v));
  auto coords = coordinates_in_span(f, a, v);
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == Scalar::from_int(f, 2));
  CHECK((*coords)[1] == Scalar::from_int(f, 3));

  std::vector<Scalar> w = vec(f, {1, 0, 0});
  CHECK(!span_contains(f, a, w));
  CHECK(!coordinates_in_span(f, a, w).has_value());
}
