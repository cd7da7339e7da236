#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rgcss/linalg.hpp"
#include "rgcss/matrix.hpp"
#include "rgcss/types.hpp"

// Slow, obviously-correct reference implementations of the selection
// objectives and greedy steps. Everything here evaluates the defining
// formulas densely; the incremental engine is validated against this module
// and must never be called from it.

namespace rgcss::oracle {

namespace detail {

// Coefficient matrix (C^T C + lambda I)^{-1} C^T R. With lambda = 0 and a
// rank-deficient C, falls back to an eigenvalue-truncated pseudoinverse,
// dropping singular values below 1e-10 * sigma_max.
inline DenseMatrix regularized_coefficients(const DenseMatrix& c, const DenseMatrix& r,
                                            double lambda) {
  const DenseMatrix rhs = multiply_at_b(c, r);
  try {
    return solve_regularized_normal(c, rhs, lambda);
  } catch (const SingularSystemError&) {
    if (lambda > 0.0) throw;
  }
  const SymmetricEigen eig = symmetric_eigen(gram(c));
  const double sigma_max = std::sqrt(std::max(eig.values.empty() ? 0.0 : eig.values[0], 0.0));
  const double cut = 1e-10 * sigma_max;
  const std::size_t k = c.cols();
  DenseMatrix x(k, rhs.cols());
  // x = V diag(1/ev) V^T rhs over the retained spectrum.
  for (std::size_t e = 0; e < k; ++e) {
    if (std::sqrt(std::max(eig.values[e], 0.0)) <= cut) continue;
    const double inv = 1.0 / eig.values[e];
    for (std::size_t col = 0; col < rhs.cols(); ++col) {
      const double proj = inv * dot(eig.vectors.col(e), rhs.col(col));
      double* xc = x.col_data(col);
      const double* ve = eig.vectors.col_data(e);
      for (std::size_t i = 0; i < k; ++i) xc[i] += proj * ve[i];
    }
  }
  return x;
}

}  // namespace detail

/// f_A(S, lambda) = A_S (A_S^T A_S + lambda I)^{-1} A_S^T A.
/// The empty set maps to the zero matrix.
inline DenseMatrix approximate(const DenseMatrix& a, const ColumnSet& s, double lambda) {
  if (s.empty()) return DenseMatrix(a.rows(), a.cols());
  const DenseMatrix c = gather_columns(a, s);
  return multiply(c, detail::regularized_coefficients(c, a, lambda));
}

/// Selection objective for subset S.
///
/// Full: ||A - f_A(S, lambda)||_F^2 over every column.
/// FeatureSelection: the same residual restricted to unselected columns.
inline double objective(const DenseMatrix& a, const ColumnSet& s, double lambda,
                        Objective variant) {
  const DenseMatrix f = approximate(a, s, lambda);
  double loss = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (variant == Objective::FeatureSelection && s.contains(j)) continue;
    const double* ac = a.col_data(j);
    const double* fc = f.col_data(j);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const double d = ac[i] - fc[i];
      loss += d * d;
    }
  }
  return loss;
}

struct GreedyStep {
  std::size_t index = 0;
  double value = 0.0;  // objective at S + {index}
};

/// Best single addition to S by exhaustive evaluation of the objective.
/// Ties break toward the lowest index.
inline GreedyStep greedy_step(const DenseMatrix& a, const ColumnSet& s, double lambda,
                              Objective variant) {
  if (s.size() >= a.cols())
    throw std::invalid_argument("greedy_step: no unselected column remains");
  std::optional<GreedyStep> best;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    if (s.contains(i)) continue;
    ColumnSet trial = s;
    trial.add(i);
    const double v = objective(a, trial, lambda, variant);
    if (!best || v < best->value) best = GreedyStep{i, v};
  }
  return *best;
}

/// Runner-up gap of the greedy step: objective(second best) - objective(best).
/// Used by validation suites to recognize near-ties. Returns +inf when only
/// one candidate exists.
inline double greedy_step_gap(const DenseMatrix& a, const ColumnSet& s, double lambda,
                              Objective variant) {
  double best = std::numeric_limits<double>::infinity();
  double second = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.cols(); ++i) {
    if (s.contains(i)) continue;
    ColumnSet trial = s;
    trial.add(i);
    const double v = objective(a, trial, lambda, variant);
    if (v < best) {
      second = best;
      best = v;
    } else if (v < second) {
      second = v;
    }
  }
  return second - best;
}

inline constexpr std::size_t kExhaustiveMaxCols = 20;
inline constexpr std::size_t kExhaustiveMaxK = 6;

/// Globally optimal size-k subset by enumeration. Only intended for tiny
/// instances; the cap keeps runaway calls out. Ties resolve to the
/// lexicographically smallest subset.
inline ColumnSet best_subset_exhaustive(const DenseMatrix& a, std::size_t k, double lambda,
                                        Objective variant) {
  const std::size_t n = a.cols();
  if (n > kExhaustiveMaxCols || k > kExhaustiveMaxK)
    throw std::invalid_argument("best_subset_exhaustive: instance exceeds the n <= 20, k <= 6 cap");
  if (k < 1 || k > n) throw std::invalid_argument("best_subset_exhaustive: invalid k");

  std::vector<std::size_t> combo(k);
  for (std::size_t i = 0; i < k; ++i) combo[i] = i;
  std::vector<std::size_t> best_combo;
  double best_value = std::numeric_limits<double>::infinity();

  while (true) {
    const double v = objective(a, ColumnSet(std::vector<std::size_t>(combo)), lambda, variant);
    if (v < best_value) {
      best_value = v;
      best_combo = combo;
    }
    // Advance to the next combination in lexicographic order.
    std::size_t pos = k;
    while (pos > 0 && combo[pos - 1] == pos - 1 + n - k) --pos;
    if (pos == 0) return ColumnSet(std::move(best_combo));
    ++combo[pos - 1];
    for (std::size_t i = pos; i < k; ++i) combo[i] = combo[i - 1] + 1;
  }
}

}  // namespace rgcss::oracle
