#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hart/error.hpp"

namespace hart {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

// Dense matrix with exact rational entries, row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat from_rows(std::vector<Vec> rows) {
    Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw UsageError("ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const {
    return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  Vec col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw UsageError("matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          if (o(k, j) != 0) r(i, j) += a * o(k, j);
        }
      }
    return r;
  }
  Mat operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix sum shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix diff shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }
  Mat operator*(const Rational& c) const {
    Mat r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
  }

  Vec apply(const Vec& v) const {
    if (v.size() != cols_) throw UsageError("matrix apply shape mismatch");
    Vec r(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  // Stacks o below this.
  Mat vstack(const Mat& o) const {
    if (o.rows() == 0) return *this;
    if (rows_ == 0) return o;
    if (cols_ != o.cols_) throw UsageError("vstack shape mismatch");
    Mat r(rows_ + o.rows_, cols_);
    r.data_ = data_;
    r.data_.insert(r.data_.end(), o.data_.begin(), o.data_.end());
    return r;
  }
  Mat hstack(const Mat& o) const {
    if (o.cols() == 0) return *this;
    if (rows_ == 0 && cols_ == 0) return o;
    if (rows_ != o.rows_) throw UsageError("hstack shape mismatch");
    Mat r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

struct RrefResult {
  Mat m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// Unique reduced row-echelon form.
inline RrefResult rref(Mat m) {
  RrefResult res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.m = std::move(m);
  return res;
}

inline std::size_t rank(const Mat& m) { return rref(m).rank; }

inline Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw UsageError("inverse of a non-square matrix");
  std::size_t n = m.rows();
  Mat aug = m.hstack(Mat::identity(n));
  auto rr = rref(aug);
  if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1))
    throw UsageError("matrix is singular");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.m(i, n + j);
  return inv;
}

// A subspace of Q^n stored as an RREF row basis, so equality is structural.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  Subspace(std::size_t ambient, const Mat& spanning) : ambient_(ambient) {
    if (spanning.rows() > 0 && spanning.cols() != ambient)
      throw UsageError("spanning vectors have wrong ambient dimension");
    auto rr = rref(spanning);
    basis_ = Mat(rr.rank, ambient);
    for (std::size_t i = 0; i < rr.rank; ++i)
      for (std::size_t j = 0; j < ambient; ++j) basis_(i, j) = rr.m(i, j);
    pivots_ = rr.pivots;
  }

  static Subspace full(std::size_t ambient) { return Subspace(ambient, Mat::identity(ambient)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  bool contains(const Vec& v) const {
    if (v.size() != ambient_) throw UsageError("vector has wrong ambient dimension");
    Vec w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      const Rational& c = w[pivots_[i]];
      if (c == 0) continue;
      Rational f = c;
      for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_(i, j);
    }
    for (const auto& x : w)
      if (x != 0) return false;
    return true;
  }

  bool contains(const Subspace& o) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_.row(i))) return false;
    return true;
  }

  friend Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw UsageError("subspace sum: ambient mismatch");
    return Subspace(a.ambient_, a.basis_.vstack(b.basis_));
  }

  friend Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw UsageError("subspace intersection: ambient mismatch");
    // x = u A = v B  <=>  (u, v) in kernel of [A^T | -B^T].
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_);
    Mat sys = a.basis_.transpose().hstack(b.basis_.transpose() * Rational(-1));
    Mat ker = kernel_matrix(sys);
    Mat rows(ker.rows(), a.ambient_);
    for (std::size_t i = 0; i < ker.rows(); ++i)
      for (std::size_t j = 0; j < a.ambient_; ++j)
        for (std::size_t t = 0; t < a.dim(); ++t) rows(i, j) += ker(i, t) * a.basis_(t, j);
    return Subspace(a.ambient_, rows);
  }

  // Kernel of m as a matrix whose rows are the RREF basis vectors.
  static Mat kernel_matrix(const Mat& m) {
    auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    Mat ker(free_cols.size(), m.cols());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      std::size_t fc = free_cols[k];
      ker(k, fc) = 1;
      for (std::size_t i = 0; i < rr.rank; ++i) ker(k, rr.pivots[i]) = -rr.m(i, fc);
    }
    // Rows are already pairwise reduced; re-echelonize to pin the sign/order convention.
    auto rr2 = rref(ker);
    Mat out(rr2.rank, m.cols());
    for (std::size_t i = 0; i < rr2.rank; ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = rr2.m(i, j);
    return out;
  }

 private:
  std::size_t ambient_;
  Mat basis_;  // RREF rows
  std::vector<std::size_t> pivots_;
};

// Solutions v of m v = 0.
inline Subspace kernel_basis(const Mat& m) {
  return Subspace(m.cols(), Subspace::kernel_matrix(m));
}

// One solution of m x = b, or nothing if inconsistent.
inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw UsageError("solve: rhs length mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto rr = rref(aug);
  Vec x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < rr.rank; ++i) {
    if (rr.pivots[i] == m.cols()) return std::nullopt;  // row (0 ... 0 | 1)
    x[rr.pivots[i]] = rr.m(i, m.cols());
  }
  return x;
}

// Coordinates of v in the row space of `basis` (rows assumed independent), if any.
inline std::optional<Vec> coordinates_in_rows(const Mat& basis, const Vec& v) {
  auto sol = solve(basis.transpose(), v);
  return sol;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hart
