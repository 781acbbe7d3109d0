#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "katzp/exactcore/poly.hpp"
#include "katzp/exactcore/rational_function.hpp"

namespace katzp {

template <FieldContext F>
using Vec = std::vector<typename F::value_type>;

/// Dense row-major matrix over a field context.
template <FieldContext F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix() = default;
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}
  Matrix(F field, std::vector<std::vector<value_type>> rows) : field_(std::move(field)) {
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
      if (r.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }
  static Matrix from_columns(const F& field, std::size_t rows, const std::vector<Vec<F>>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) fail(ErrorCode::DimensionMismatch, "column length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec<F> column(std::size_t j) const {
    Vec<F> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<F> row(std::size_t i) const { return Vec<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!F::is_zero(x)) return false;
    return true;
  }

  template <class Fn>
  Matrix map(Fn&& fn) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = fn(x);
    return m;
  }

  Matrix transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = a.a_[k] + b.a_[k];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = a.a_[k] - b.a_[k];
    return m;
  }
  Matrix operator-() const {
    return map([](const value_type& x) { return -x; });
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape");
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k);
        if (F::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) = m(i, j) + x * b(k, j);
      }
    return m;
  }
  friend Matrix operator*(const value_type& s, const Matrix& a) {
    return a.map([&](const value_type& x) { return s * x; });
  }
  friend Vec<F> operator*(const Matrix& a, const Vec<F>& v) {
    if (a.cols_ != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector shape");
    Vec<F> out(a.rows_, a.field_.zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!F::is_zero(v[k])) out[i] = out[i] + a(i, k) * v[k];
    return out;
  }

  Matrix pow(std::uint64_t e) const {
    Matrix base = *this, acc = identity(field_, rows_);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << "]";
    }
    return os << "]";
  }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }

  F field_{};
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<value_type> a_;
};

using MatrixRF = Matrix<FunctionField>;
using VectorRF = Vec<FunctionField>;
using MatrixFp = Matrix<PrimeField>;

/// Row echelon data from Gaussian elimination over the field.
template <FieldContext F>
struct Echelon {
  Matrix<F> reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
  typename F::value_type det;        // determinant (square input only)
};

template <FieldContext F>
Echelon<F> row_reduce(Matrix<F> m) {
  const F& fld = m.field();
  auto det = fld.one();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && F::is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
      det = -det;
    }
    const auto lead = m(r, c);
    det = det * lead;
    const auto inv = fld.one() / lead;
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || F::is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if (!m.is_square() || r < m.rows()) det = fld.zero();
  return {std::move(m), std::move(pivots), det};
}

template <FieldContext F>
std::size_t rank(const Matrix<F>& m) { return row_reduce(m).pivots.size(); }

template <FieldContext F>
typename F::value_type determinant(const Matrix<F>& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  return row_reduce(m).det;
}

/// Inverse by Gauss-Jordan; nullopt when singular.
template <FieldContext F>
std::optional<Matrix<F>> try_inverse(const Matrix<F>& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  auto ech = row_reduce(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

/// Coordinates x with columns * x = target, or nullopt if target is outside
/// the column span. Columns are assumed linearly independent.
template <FieldContext F>
std::optional<Vec<F>> solve_in_span(const F& field, std::size_t dim, const std::vector<Vec<F>>& columns,
                                    const Vec<F>& target) {
  if (target.size() != dim) fail(ErrorCode::DimensionMismatch, "target length");
  const std::size_t k = columns.size();
  Matrix<F> aug(field, dim, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (columns[j].size() != dim) fail(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < dim; ++i) aug(i, j) = columns[j][i];
  }
  for (std::size_t i = 0; i < dim; ++i) aug(i, k) = target[i];
  auto ech = row_reduce(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == k) return std::nullopt;
  if (ech.pivots.size() != k) fail(ErrorCode::InvalidInput, "spanning columns are dependent");
  Vec<F> x(k, field.zero());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, k);
  return x;
}

}  // namespace katzp

namespace katzp {

/// Right kernel basis over the field by Gauss-Jordan (one vector per free column).
template <FieldContext F>
std::vector<Vec<F>> nullspace(const Matrix<F>& m) {
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace katzp
