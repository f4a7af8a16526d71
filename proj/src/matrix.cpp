#include "spinver/matrix.hpp"

#include <cassert>
#include <sstream>

#include "spinver/errors.hpp"

namespace spinver {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols),
      data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f,
                         const std::vector<std::vector<Scalar>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc)
      throw invalid_argument_error("from_rows: ragged row lengths");
    for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Scalar& Matrix::at(std::size_t i, std::size_t j) {
  assert(i < rows_ && j < cols_);
  return data_[i * cols_ + j];
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  assert(i < rows_ && j < cols_);
  return data_[i * cols_ + j];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw invalid_argument_error("matrix product: inner dimensions differ");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw invalid_argument_error("matrix sum: shapes differ");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw invalid_argument_error("matrix difference: shapes differ");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] - o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_)
    throw invalid_argument_error("apply: vector length != cols");
  std::vector<Scalar> r(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < cols_; ++j) os << at(i, j).to_string() << " ";
    os << "]\n";
  }
  return os.str();
}

namespace {

// Forward elimination over F_p, in place; returns pivot columns.
std::vector<std::size_t> gauss_jordan(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) { sel = i; break; }
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(sel, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Over Q: clear denominators row by row, run fraction-free (Bareiss-style)
// forward elimination on BigInt rows to locate pivots without intermediate
// fraction blowup, then normalize and back-substitute rationally.
std::vector<std::size_t> rational_reduce(Matrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<BigInt>> a(nr, std::vector<BigInt>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    BigInt lcm = 1;
    for (std::size_t j = 0; j < nc; ++j) {
      BigInt d = boost::multiprecision::denominator(m.at(i, j).rat_value());
      lcm = boost::multiprecision::lcm(lcm, d);
    }
    for (std::size_t j = 0; j < nc; ++j) {
      BigRat v = m.at(i, j).rat_value() * BigRat(lcm);
      a[i][j] = boost::multiprecision::numerator(v);
    }
  }
  std::vector<std::size_t> pivots;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t sel = nr;
    for (std::size_t i = r; i < nr; ++i)
      if (a[i][c] != 0) { sel = i; break; }
    if (sel == nr) continue;
    if (sel != r) std::swap(a[sel], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        BigInt t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        a[i][j] = t / prev;  // exact by the Bareiss identity
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  // Rational finish: scale each pivot row to leading 1, clear above.
  std::vector<std::vector<BigRat>> q(nr, std::vector<BigRat>(nc, BigRat(0)));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) q[i][j] = BigRat(a[i][j]);
  for (std::size_t i = pivots.size(); i-- > 0;) {
    std::size_t pc = pivots[i];
    BigRat inv = 1 / q[i][pc];
    for (std::size_t j = pc; j < nc; ++j) q[i][j] *= inv;
    for (std::size_t k = 0; k < i; ++k) {
      BigRat fac = q[k][pc];
      if (fac == 0) continue;
      for (std::size_t j = pc; j < nc; ++j) q[k][j] -= fac * q[i][j];
    }
  }
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      m.at(i, j) = Scalar::from_rational(q[i][j]);
  return pivots;
}

}  // namespace

Echelon reduce(const Matrix& m) {
  Matrix w = m;
  std::vector<std::size_t> pivots =
      w.field().is_rational() ? rational_reduce(w) : gauss_jordan(w);
  Echelon e{w, pivots, pivots.size()};
  assert(e.rank + (m.cols() - e.rank) == m.cols());
  assert(e.rank <= m.rows() && e.rank <= m.cols());
  return e;
}

std::size_t rank(const Matrix& m) { return reduce(m).rank; }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  Echelon e = reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free_c = 0; free_c < m.cols(); ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(f));
    v[free_c] = Scalar::one(f);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      v[e.pivot_cols[i]] = -e.rref.at(i, free_c);
    basis.push_back(std::move(v));
  }
  assert(e.rank + basis.size() == m.cols());

  // Normalize the basis itself to reduced echelon form, then check every
  // vector really is annihilated.
  basis = canonical_span(f, basis);
  for (const auto& v : basis) {
    std::vector<Scalar> mv = m.apply(v);
    for (const auto& s : mv) assert(s.is_zero());
    (void)mv;
  }
  return basis;
}

std::vector<std::vector<Scalar>> eigenspace(const Matrix& m,
                                            const Scalar& lambda) {
  if (m.rows() != m.cols())
    throw invalid_argument_error("eigenspace: matrix not square");
  Matrix shifted = m - Matrix::identity(m.field(), m.rows()).scaled(lambda);
  return kernel_basis(shifted);
}

std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                         const std::vector<Scalar>& b) {
  if (b.size() != m.rows())
    throw invalid_argument_error("solve: rhs length != rows");
  const Field& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Echelon e = reduce(aug);
  for (std::size_t c : e.pivot_cols)
    if (c == m.cols()) return std::nullopt;  // pivot in rhs column
  std::vector<Scalar> x(m.cols(), Scalar::zero(f));
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
    x[e.pivot_cols[i]] = e.rref.at(i, m.cols());
  std::vector<Scalar> chk = m.apply(x);
  for (std::size_t i = 0; i < b.size(); ++i) assert(chk[i] == b[i]);
  return x;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols())
    throw invalid_argument_error("determinant: matrix not square");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return Scalar::one(f);
  // Plain fraction-carrying elimination; matrices here are small.
  Matrix w = m;
  Scalar det = Scalar::one(f);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t i = c; i < n; ++i)
      if (!w.at(i, c).is_zero()) { sel = i; break; }
    if (sel == n) return Scalar::zero(f);
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(sel, j), w.at(c, j));
      det = -det;
    }
    det *= w.at(c, c);
    Scalar inv = w.at(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (w.at(i, c).is_zero()) continue;
      Scalar fac = w.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) w.at(i, j) -= fac * w.at(c, j);
    }
  }
  return det;
}

std::vector<std::vector<Scalar>> canonical_span(
    const Field& f, const std::vector<std::vector<Scalar>>& vectors) {
  if (vectors.empty()) return {};
  Matrix m = Matrix::from_rows(f, vectors);
  Echelon e = reduce(m);
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < e.rank; ++i) {
    std::vector<Scalar> row(m.cols(), Scalar::zero(f));
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = e.rref.at(i, j);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t span_rank(const Field& f,
                      const std::vector<std::vector<Scalar>>& vectors) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(f, vectors));
}

bool span_contains(const Field& f,
                   const std::vector<std::vector<Scalar>>& span,
                   const std::vector<Scalar>& v) {
  bool v_zero = true;
  for (const auto& s : v)
    if (!s.is_zero()) { v_zero = false; break; }
  if (v_zero) return true;
  if (span.empty()) return false;
  std::vector<std::vector<Scalar>> stacked = span;
  stacked.push_back(v);
  return span_rank(f, stacked) == span_rank(f, span);
}

std::optional<std::vector<Scalar>> coordinates_in_span(
    const Field& f, const std::vector<std::vector<Scalar>>& span,
    const std::vector<Scalar>& v) {
  if (span.empty()) return std::nullopt;
  // Solve span^T c = v.
  Matrix st = Matrix::from_rows(f, span).transposed();
  return solve(st, v);
}

bool spans_equal(const Field& f, const std::vector<std::vector<Scalar>>& a,
                 const std::vector<std::vector<Scalar>>& b) {
  return canonical_span(f, a) == canonical_span(f, b);
}

}  // namespace spinver
