#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "agr/gaussq.hpp"
#include "agr/mpoly.hpp"

namespace agr {

inline GaussQ exact_div(const GaussQ& a, const GaussQ& b) { return a / b; }

// Dense exact matrix over a commutative ring K (GaussQ or MPoly).
template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, K fill = K())
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const K& one = K(1)) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const K& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix z(x.rows_, y.cols_);
    for (std::size_t r = 0; r < x.rows_; ++r)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const K& v = x.at(r, k);
        for (std::size_t c = 0; c < y.cols_; ++c) z.at(r, c) += v * y.at(k, c);
      }
    return z;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
    Matrix z = x;
    for (std::size_t k = 0; k < z.a_.size(); ++k) z.a_[k] += y.a_[k];
    return z;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
    Matrix z = x;
    for (std::size_t k = 0; k < z.a_.size(); ++k) z.a_[k] -= y.a_[k];
    return z;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix: apply arity");
    std::vector<K> out(rows_, K());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
    return out;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<K> a_;
};

namespace detail {
template <class K>
bool entry_is_zero(const K& v) {
  return v.is_zero();
}
}  // namespace detail

// Exact rank by one-step fraction-free (Bareiss) elimination.  Pivot choice
// is the first nonzero entry in column order, so the result is deterministic.
template <class K>
std::size_t rank(Matrix<K> m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t r = 0;
  bool have_prev = false;
  K prev{};
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && detail::entry_is_zero(m.at(p, c))) ++p;
    if (p == nr) continue;
    if (p != r)
      for (std::size_t j = c; j < nc; ++j) std::swap(m.at(r, j), m.at(p, j));
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        K num = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
        m.at(i, j) = have_prev ? exact_div(num, prev) : num;
      }
      m.at(i, c) = K();
    }
    prev = m.at(r, c);
    have_prev = true;
    ++r;
  }
  return r;
}

// Reduced row echelon form over the field GaussQ; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix<GaussQ>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(p, j));
    GaussQ inv = GaussQ(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      GaussQ f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Basis of the right kernel; each vector rescaled so its first nonzero
// coordinate is 1 (reproducible golden outputs).
inline std::vector<std::vector<GaussQ>> kernel(Matrix<GaussQ> m) {
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<GaussQ>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<GaussQ> v(m.cols(), GaussQ(0));
    v[f] = GaussQ(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, f);
    for (const GaussQ& x : v) {
      if (!x.is_zero()) {
        GaussQ inv = GaussQ(1) / x;
        for (GaussQ& y : v) y *= inv;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve m * x = b exactly; m must be square invertible over GaussQ.
inline std::vector<GaussQ> solve(const Matrix<GaussQ>& m, const std::vector<GaussQ>& b) {
  if (m.rows() != m.cols() || b.size() != m.rows())
    throw std::invalid_argument("solve: shape mismatch");
  Matrix<GaussQ> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != m.rows() || (!pivots.empty() && pivots.back() == m.cols()))
    throw std::domain_error("solve: singular matrix");
  std::vector<GaussQ> x(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) x[r] = aug.at(r, m.cols());
  return x;
}

inline Matrix<GaussQ> inverse(const Matrix<GaussQ>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = m.rows();
  Matrix<GaussQ> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = GaussQ(1);
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots[n - 1] != n - 1)
    throw std::domain_error("inverse: singular matrix");
  Matrix<GaussQ> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

template <class K>
K det3(const K& a, const K& b, const K& c, const K& d, const K& e, const K& f,
       const K& g, const K& h, const K& i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Row span of x contains row v?
inline bool row_space_contains(const Matrix<GaussQ>& x, const std::vector<GaussQ>& v) {
  Matrix<GaussQ> aug(x.rows() + 1, x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) aug.at(r, c) = x.at(r, c);
  for (std::size_t c = 0; c < x.cols(); ++c) aug.at(x.rows(), c) = v[c];
  return rank(aug) == rank(x);
}

inline Matrix<MPoly> lift(const Matrix<GaussQ>& m, const RingPtr& ring) {
  Matrix<MPoly> out(m.rows(), m.cols(), MPoly(ring));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.at(r, c) = MPoly::constant(ring, m.at(r, c));
  return out;
}

}  // namespace agr
