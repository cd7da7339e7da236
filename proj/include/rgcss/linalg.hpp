#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "rgcss/matrix.hpp"
#include "rgcss/types.hpp"

namespace rgcss {

namespace detail {
// A Cholesky pivot this far below the largest diagonal of C^T C + lambda I is
// treated as a sign of rank deficiency.
inline constexpr double kCholeskyPivotTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffTol = 1e-12;
}  // namespace detail

/// Solves (C^T C + lambda I) X = R by Cholesky factorization and returns X.
///
/// lambda > 0 guarantees positive definiteness and the solve always succeeds;
/// with lambda = 0 a pivot smaller than 1e-12 times the largest diagonal
/// raises SingularSystemError naming the offending pivot.
inline DenseMatrix solve_regularized_normal(const DenseMatrix& c, const DenseMatrix& r,
                                            double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("solve_regularized_normal: lambda must be >= 0");
  const std::size_t k = c.cols();
  if (r.rows() != k)
    throw std::invalid_argument("solve_regularized_normal: rhs has " +
                                std::to_string(r.rows()) + " rows, expected " +
                                std::to_string(k));
  if (k == 0) return DenseMatrix(0, r.cols());

  DenseMatrix mat = gram(c);
  double max_diag = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    mat(i, i) += lambda;
    max_diag = std::max(max_diag, mat(i, i));
  }
  const double pivot_tol = detail::kCholeskyPivotTol * max_diag;

  // In-place lower Cholesky.
  for (std::size_t j = 0; j < k; ++j) {
    double d = mat(j, j);
    for (std::size_t p = 0; p < j; ++p) d -= mat(j, p) * mat(j, p);
    if (!(d > pivot_tol))
      throw SingularSystemError("solve_regularized_normal: pivot " + std::to_string(j) +
                                " is " + std::to_string(d) + ", below tolerance " +
                                std::to_string(pivot_tol));
    const double l = std::sqrt(d);
    mat(j, j) = l;
    for (std::size_t i = j + 1; i < k; ++i) {
      double s = mat(i, j);
      for (std::size_t p = 0; p < j; ++p) s -= mat(i, p) * mat(j, p);
      mat(i, j) = s / l;
    }
  }

  // Forward and back substitution per right-hand-side column.
  DenseMatrix x = r;
  for (std::size_t col = 0; col < x.cols(); ++col) {
    double* xc = x.col_data(col);
    for (std::size_t i = 0; i < k; ++i) {
      double s = xc[i];
      for (std::size_t p = 0; p < i; ++p) s -= mat(i, p) * xc[p];
      xc[i] = s / mat(i, i);
    }
    for (std::size_t ir = k; ir-- > 0;) {
      double s = xc[ir];
      for (std::size_t p = ir + 1; p < k; ++p) s -= mat(p, ir) * xc[p];
      xc[ir] = s / mat(ir, ir);
    }
  }
  return x;
}

struct SymmetricEigen {
  std::vector<double> values;  // descending
  DenseMatrix vectors;         // column j pairs with values[j]
};

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps stop when the off-diagonal Frobenius mass falls below
/// 1e-12 * ||M||_F; more than 100 sweeps raises NumericalError.
inline SymmetricEigen symmetric_eigen(DenseMatrix m, bool want_vectors = true) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("symmetric_eigen: matrix must be square");
  DenseMatrix v = want_vectors ? DenseMatrix::identity(n) : DenseMatrix();

  const double norm = std::sqrt(frobenius_sq(m));
  const double tol = detail::kJacobiOffTol * norm;

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t p = 0; p < q; ++p) s += 2.0 * m(p, q) * m(p, q);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > tol) {
    if (++sweep > detail::kJacobiMaxSweeps)
      throw NumericalError("symmetric_eigen: no convergence after " +
                           std::to_string(detail::kJacobiMaxSweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (std::abs(apq) <= tol / (double(n) * double(n))) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cs = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * cs;
        for (std::size_t i = 0; i < n; ++i) {
          const double mip = m(i, p), miq = m(i, q);
          m(i, p) = cs * mip - sn * miq;
          m(i, q) = sn * mip + cs * miq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double mpi = m(p, i), mqi = m(q, i);
          m(p, i) = cs * mpi - sn * mqi;
          m(q, i) = sn * mpi + cs * mqi;
        }
        if (want_vectors) {
          for (std::size_t i = 0; i < n; ++i) {
            const double vip = v(i, p), viq = v(i, q);
            v(i, p) = cs * vip - sn * viq;
            v(i, q) = sn * vip + cs * viq;
          }
        }
      }
    }
  }

  SymmetricEigen out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = m(i, i);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return out.values[a] > out.values[b]; });
  std::vector<double> sorted(n);
  for (std::size_t i = 0; i < n; ++i) sorted[i] = out.values[perm[i]];
  out.values = std::move(sorted);
  if (want_vectors) {
    out.vectors = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j)
      std::copy_n(v.col_data(perm[j]), n, out.vectors.col_data(j));
  }
  return out;
}

inline std::vector<double> symmetric_eigenvalues(DenseMatrix m) {
  return symmetric_eigen(std::move(m), /*want_vectors=*/false).values;
}

/// Singular values of A, descending. Computed as square roots of the
/// eigenvalues of the smaller of A^T A and A A^T; singular vectors are never
/// formed.
inline std::vector<double> singular_values(const DenseMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return {};
  DenseMatrix g = a.cols() <= a.rows() ? gram(a) : gram_rows(a);
  std::vector<double> ev = symmetric_eigenvalues(std::move(g));
  for (double& v : ev) v = std::sqrt(std::max(v, 0.0));
  return ev;
}

/// sigma_1 / sigma_k. A sigma_k below 1e-300 reports infinity instead of
/// overflowing or crashing.
inline double condition_number(const DenseMatrix& a, std::size_t k) {
  const std::size_t r = std::min(a.rows(), a.cols());
  if (k < 1 || k > r)
    throw std::invalid_argument("condition_number: k = " + std::to_string(k) +
                                " outside [1, " + std::to_string(r) + "]");
  const std::vector<double> sv = singular_values(a);
  if (sv[k - 1] < 1e-300) return std::numeric_limits<double>::infinity();
  return sv[0] / sv[k - 1];
}

}  // namespace rgcss
