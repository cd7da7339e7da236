#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgcss/types.hpp"

namespace rgcss {

/// Dense, column-addressable matrix of 64-bit reals.
///
/// Storage is column-major: element (i, j) lives at data()[j * rows() + i].
/// All I/O, tests and traversal-order guarantees in this library assume this
/// layout. Matrices are immutable by convention once handed to an algorithm
/// and safe to share read-only across threads.
class DenseMatrix {
 public:
  DenseMatrix() = default;

  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> column_major)
      : rows_(rows), cols_(cols), data_(std::move(column_major)) {
    if (data_.size() != rows_ * cols_)
      throw std::invalid_argument("DenseMatrix: data length " + std::to_string(data_.size()) +
                                  " does not match " + std::to_string(rows_) + "x" +
                                  std::to_string(cols_));
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  /// Row-wise construction, convenient for literals in tests.
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    DenseMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("DenseMatrix::from_rows: ragged rows");
      std::size_t j = 0;
      for (double v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[j * rows_ + i];
  }
  double operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[j * rows_ + i];
  }

  std::span<const double> col(std::size_t j) const {
    assert(j < cols_);
    return {data_.data() + j * rows_, rows_};
  }
  double* col_data(std::size_t j) {
    assert(j < cols_);
    return data_.data() + j * rows_;
  }
  const double* col_data(std::size_t j) const {
    assert(j < cols_);
    return data_.data() + j * rows_;
  }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Ordered set of distinct 0-based column indices. Order records greedy
/// insertion order; duplicates are rejected.
class ColumnSet {
 public:
  ColumnSet() = default;

  explicit ColumnSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    for (std::size_t a = 0; a < indices_.size(); ++a)
      for (std::size_t b = a + 1; b < indices_.size(); ++b)
        if (indices_[a] == indices_[b])
          throw std::invalid_argument("ColumnSet: duplicate index " +
                                      std::to_string(indices_[a]));
  }

  ColumnSet(std::initializer_list<std::size_t> indices)
      : ColumnSet(std::vector<std::size_t>(indices)) {}

  void add(std::size_t i) {
    if (contains(i))
      throw std::invalid_argument("ColumnSet::add: duplicate index " + std::to_string(i));
    indices_.push_back(i);
  }

  bool contains(std::size_t i) const {
    return std::find(indices_.begin(), indices_.end(), i) != indices_.end();
  }

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }

  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  const std::vector<std::size_t>& indices() const { return indices_; }

  /// Complement within [0, n), ascending.
  ColumnSet complement(std::size_t n) const {
    std::vector<std::size_t> out;
    out.reserve(n - std::min(n, size()));
    for (std::size_t i = 0; i < n; ++i)
      if (!contains(i)) out.push_back(i);
    return ColumnSet(std::move(out));
  }

  bool operator==(const ColumnSet& other) const { return indices_ == other.indices_; }

 private:
  std::vector<std::size_t> indices_;
};

/// Returns the rows x |S| matrix whose j-th column is A_{:S[j]}.
/// An empty S yields a rows x 0 matrix.
inline DenseMatrix gather_columns(const DenseMatrix& a, const ColumnSet& s) {
  DenseMatrix out(a.rows(), s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    const std::size_t src = s[j];
    if (src >= a.cols())
      throw std::invalid_argument("gather_columns: index " + std::to_string(src) +
                                  " out of range for " + std::to_string(a.cols()) + " columns");
    std::copy_n(a.col_data(src), a.rows(), out.col_data(j));
  }
  return out;
}

inline double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

/// A^T A, exactly symmetric: each triangle entry is computed once and
/// mirrored bit-for-bit.
inline DenseMatrix gram(const DenseMatrix& a) {
  const std::size_t n = a.cols();
  DenseMatrix g(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      const double v = dot(a.col(i), a.col(j));
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

/// A A^T, exactly symmetric. Accumulated column-by-column so access stays
/// contiguous in the column-major layout.
inline DenseMatrix gram_rows(const DenseMatrix& a) {
  const std::size_t m = a.rows();
  DenseMatrix g(m, m);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const double* c = a.col_data(k);
    for (std::size_t j = 0; j < m; ++j) {
      const double cj = c[j];
      double* gcol = g.col_data(j);
      for (std::size_t i = 0; i <= j; ++i) gcol[i] += c[i] * cj;
    }
  }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i) g(j, i) = g(i, j);
  return g;
}

inline double frobenius_sq(const DenseMatrix& a) {
  double s = 0.0;
  for (double v : a.data()) s += v * v;
  return s;
}

/// C = A * B.
inline DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  assert(a.cols() == b.rows());
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    double* cj = c.col_data(j);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double bkj = b(k, j);
      if (bkj == 0.0) continue;
      const double* ak = a.col_data(k);
      for (std::size_t i = 0; i < a.rows(); ++i) cj[i] += ak[i] * bkj;
    }
  }
  return c;
}

/// C = A^T * B, computed as column-by-column inner products.
inline DenseMatrix multiply_at_b(const DenseMatrix& a, const DenseMatrix& b) {
  assert(a.rows() == b.rows());
  DenseMatrix c(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i) c(i, j) = dot(a.col(i), b.col(j));
  return c;
}

/// y = A * x.
inline std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x) {
  assert(x.size() == a.cols());
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const double xk = x[k];
    if (xk == 0.0) continue;
    const double* ak = a.col_data(k);
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] += ak[i] * xk;
  }
  return y;
}

/// y = A^T * x.
inline std::vector<double> matvec_t(const DenseMatrix& a, std::span<const double> x) {
  assert(x.size() == a.rows());
  std::vector<double> y(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) y[j] = dot(a.col(j), x);
  return y;
}

inline DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) c.data()[i] = a.data()[i] - b.data()[i];
  return c;
}

}  // namespace rgcss
