#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "rgcss/matrix.hpp"
#include "rgcss/selection_result.hpp"

// Unregularized greedy column subset selection. The criterion maximizes
// ||G_{:i}||^2 / G_ii over the residual Gram matrix G = E^T E, and each pick
// deflates G by the rank-one factor of the chosen column, which is the Gram-
// space image of projecting the residual out of E.

namespace rgcss {

/// Residual-Gram state of the unregularized baseline. Owned by one selection
/// run and mutated sequentially.
struct BaselineState {
  DenseMatrix gram;                  // current residual Gram, n x n
  std::vector<double> col_norm_sq;   // ||G_{:i}||^2
  std::vector<double> diag;          // G_ii
  ColumnSet selected;
  double epsilon = 0.0;              // degenerate-diagonal threshold

  explicit BaselineState(const DenseMatrix& a) : gram(rgcss::gram(a)) {
    const std::size_t n = gram.cols();
    diag.resize(n);
    col_norm_sq.resize(n);
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, gram(i, i));
    epsilon = 1e-12 * max_diag;
    refresh();
  }

  void refresh() {
    for (std::size_t i = 0; i < gram.cols(); ++i) {
      diag[i] = gram(i, i);
      col_norm_sq[i] = dot(gram.col(i), gram.col(i));
    }
  }

  double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < gram.cols(); ++i) t += gram(i, i);
    return t;
  }

  /// Best unselected column with a non-degenerate diagonal, or nothing once
  /// the span is exhausted. Ties break toward the lowest index.
  std::optional<std::size_t> best_candidate(double* criterion = nullptr) const {
    std::optional<std::size_t> best;
    double best_value = 0.0;
    for (std::size_t i = 0; i < gram.cols(); ++i) {
      if (selected.contains(i) || diag[i] <= epsilon) continue;
      const double value = col_norm_sq[i] / diag[i];
      if (!best || value > best_value) {
        best = i;
        best_value = value;
      }
    }
    if (best && criterion) *criterion = best_value;
    return best;
  }

  /// G <- G - G_{:w} G_{w:} / G_ww, then refresh the cached criterion parts.
  void deflate(std::size_t w) {
    const std::size_t n = gram.cols();
    const std::vector<double> g(gram.col(w).begin(), gram.col(w).end());
    const double inv = 1.0 / g[w];
    for (std::size_t j = 0; j < n; ++j) {
      const double f = g[j] * inv;
      double* col = gram.col_data(j);
      for (std::size_t i = 0; i < n; ++i) col[i] -= g[i] * f;
    }
    selected.add(w);
    refresh();
  }
};

/// Greedy unregularized selection of k columns. Stops early with
/// rank_exhausted when every remaining diagonal falls below the degeneracy
/// threshold.
inline SelectionResult select_unregularized(const DenseMatrix& a, std::size_t k) {
  if (k < 1 || k > a.cols())
    throw std::invalid_argument("select_unregularized: k outside [1, cols]");
  using clock = std::chrono::steady_clock;
  BaselineState state(a);
  SelectionResult result;
  result.loss_trace.push_back(state.trace());
  while (state.selected.size() < k) {
    const auto start = clock::now();
    double criterion = 0.0;
    const auto w = state.best_candidate(&criterion);
    if (!w) {
      result.rank_exhausted = true;
      break;
    }
    state.deflate(*w);
    result.step_seconds.push_back(std::chrono::duration<double>(clock::now() - start).count());
    result.criterion_trace.push_back(criterion);
    result.loss_trace.push_back(state.trace());
  }
  result.indices = state.selected;
  return result;
}

}  // namespace rgcss
