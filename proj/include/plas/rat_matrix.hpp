#ifndef PLAS_RAT_MATRIX_HPP
#define PLAS_RAT_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "plas/errors.hpp"
#include "plas/rational.hpp"
#include "plas/upoly.hpp"

namespace plas {

/// Dense matrix over Q for exact row reduction.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    a.require_same_shape(b);
    RatMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
  }
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    a.require_same_shape(b);
    RatMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
  }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
    RatMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend RatMatrix operator*(const Rational& s, RatMatrix m) {
    for (auto& x : m.a_) x *= s;
    return m;
  }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      swap_rows(p, r);
      Rational inv = Rational(1) / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        Rational f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    RatMatrix m = *this;
    return m.rref().size();
  }

  /// Basis of { v : M v = 0 }, one vector per free column.
  std::vector<std::vector<Rational>> nullspace() const {
    RatMatrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Rational> v(cols_);
      v[free] = Rational(1);
      for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  RatMatrix inverse() const {
    if (!is_square()) throw DimensionError("inverse of a non-square matrix");
    std::size_t n = rows_;
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = Rational(1);
    }
    auto pivots = aug.rref();
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  }

  Rational determinant() const {
    if (!is_square()) throw DimensionError("determinant of a non-square matrix");
    RatMatrix m = *this;
    Rational det(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && m(p, c).is_zero()) ++p;
      if (p == rows_) return Rational(0);
      if (p != c) {
        m.swap_rows(p, c);
        det = -det;
      }
      det *= m(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (m(i, c).is_zero()) continue;
        Rational f = m(i, c) / m(c, c);
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return det;
  }

  RatMatrix pow(unsigned k) const {
    if (!is_square()) throw DimensionError("power of a non-square matrix");
    RatMatrix r = identity(rows_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void require_same_shape(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// p(M) by Horner's rule.
inline RatMatrix evaluate(const UPoly& p, const RatMatrix& m) {
  std::size_t n = m.rows();
  RatMatrix acc(n, n);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * m + *it * RatMatrix::identity(n);
  return acc;
}

/// Minimal polynomial via the first linear dependence among I, M, M^2, ...
inline UPoly minimal_polynomial(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("minimal polynomial of a non-square matrix");
  std::size_t n = m.rows();
  std::vector<RatMatrix> powers{RatMatrix::identity(n)};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * m);
    RatMatrix sys(n * n, k + 1);
    for (std::size_t p = 0; p <= k; ++p)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sys(i * n + j, p) = powers[p](i, j);
    auto ns = sys.nullspace();
    if (!ns.empty()) return UPoly(ns.front()).monic();
  }
  throw Error("minimal polynomial search exceeded the matrix size");
}

}  // namespace plas

#endif  // PLAS_RAT_MATRIX_HPP
