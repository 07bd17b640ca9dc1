#pragma once

// Dense exact matrices over Q: row reduction, rank, kernels, solves.

#include "prvkit/core.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace prvkit {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const {
    std::vector<Rational> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (sgn(x) != 0) return false;
    return true;
  }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    assert(a.cols_ == b.rows_);
    QMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& x = a(i, k);
        if (sgn(x) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
      }
    return m;
  }

  friend QMatrix operator+(QMatrix a, const QMatrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend QMatrix operator-(QMatrix a, const QMatrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  QMatrix scaled(const Rational& s) const {
    QMatrix m(*this);
    for (auto& x : m.data_) x *= s;
    return m;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    assert(v.size() == cols_);
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  /// Stacks `b` below this matrix (column counts must agree).
  void append_rows(const QMatrix& b) {
    if (rows_ == 0) {
      *this = b;
      return;
    }
    assert(b.cols_ == cols_);
    data_.insert(data_.end(), b.data_.begin(), b.data_.end());
    rows_ += b.rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot columns in order.
inline std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(QMatrix m) {
  return rref(m).size();
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> kernel_basis(QMatrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::size_t nullity(const QMatrix& m) {
  return m.cols() - rank(m);
}

/// Inverse of a square nonsingular matrix; throws InvariantViolation if singular.
inline QMatrix inverse(const QMatrix& a) {
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  ensure(piv.size() == n && (n == 0 || piv.back() == n - 1), "inverse: singular matrix");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

inline Rational determinant(QMatrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(m(p, col)) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      m.swap_rows(p, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

/// Incrementally maintained row-echelon basis of a subspace of Q^n.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t n = 0) : n_(n) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<std::vector<Rational>>& basis() const { return originals_; }

  /// Reduces v against the span; returns true (and stores v) if independent.
  bool insert(const std::vector<Rational>& v) {
    std::vector<Rational> r = v;
    reduce(r);
    auto lead = leading(r);
    if (lead == n_) return false;
    Rational inv = 1 / r[lead];
    for (auto& x : r) x *= inv;
    rows_.push_back(std::move(r));
    leads_.push_back(lead);
    originals_.push_back(v);
    return true;
  }

  bool contains(const std::vector<Rational>& v) const {
    std::vector<Rational> r = v;
    reduce(r);
    return leading(r) == n_;
  }

 private:
  void reduce(std::vector<Rational>& r) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto lead = leads_[k];
      if (sgn(r[lead]) == 0) continue;
      Rational f = r[lead];
      for (std::size_t c = 0; c < n_; ++c)
        if (sgn(rows_[k][c]) != 0) r[c] -= f * rows_[k][c];
    }
  }

  std::size_t leading(const std::vector<Rational>& r) const {
    for (std::size_t c = 0; c < n_; ++c)
      if (sgn(r[c]) != 0) return c;
    return n_;
  }

  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> leads_;
  std::vector<std::vector<Rational>> originals_;
};

}  // namespace prvkit
