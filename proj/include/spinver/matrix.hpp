// Dense exact matrices and the reduction kernel every dimension count in the
// toolkit bottoms out in.
//
// Elimination over Q runs fraction-free (Bareiss) on a denominator-cleared
// integer copy to find the pivot structure, then finishes with rational
// back-substitution; over F_p it is plain Gauss-Jordan. Every reduction
// asserts rank + nullity == cols, and kernel vectors are re-verified by
// multiplication before they are returned. Kernel and row-space bases are
// reduced-echelon-normalized (leading coefficient 1, zeros above pivots) so
// all outputs are deterministic.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spinver/field.hpp"

namespace spinver {

class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f,
                          const std::vector<std::vector<Scalar>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j);
  const Scalar& at(std::size_t i, std::size_t j) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transposed() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M v
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

// Result of a full reduction: the reduced echelon form, its pivot columns,
// and the rank. nullity == cols - rank always holds (asserted).
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank;
};

Echelon reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

// Reduced-echelon-normalized basis of { v : M v = 0 }. Empty for full
// column rank; the 3 standard basis vectors for a zero matrix with 3 cols.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

// Kernel of (M - lambda I); M square.
std::vector<std::vector<Scalar>> eigenspace(const Matrix& m,
                                            const Scalar& lambda);

// One solution of M x = b with free coordinates set to zero, or nothing if
// the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                         const std::vector<Scalar>& b);

Scalar determinant(const Matrix& m);

// ---- subspace helpers (spans given as row vectors) -------------------------

// Reduced-echelon-normalized basis of a span; canonical for the subspace.
std::vector<std::vector<Scalar>> canonical_span(
    const Field& f, const std::vector<std::vector<Scalar>>& vectors);

std::size_t span_rank(const Field& f,
                      const std::vector<std::vector<Scalar>>& vectors);

bool span_contains(const Field& f,
                   const std::vector<std::vector<Scalar>>& span,
                   const std::vector<Scalar>& v);

// Coordinates of v in the given (independent) spanning set, if it lies in
// the span.
std::optional<std::vector<Scalar>> coordinates_in_span(
    const Field& f, const std::vector<std::vector<Scalar>>& span,
    const std::vector<Scalar>& v);

bool spans_equal(const Field& f, const std::vector<std::vector<Scalar>>& a,
                 const std::vector<std::vector<Scalar>>& b);

}  // namespace spinver
