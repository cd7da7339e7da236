#pragma once

#include <vector>

#include "rgcss/matrix.hpp"

namespace rgcss {

/// Outcome of a greedy selection run (regularized or baseline).
///
/// loss_trace has one more entry than indices: loss_trace[0] is the loss of
/// the empty selection, ||A||_F^2.
struct SelectionResult {
  ColumnSet indices;
  std::vector<double> loss_trace;
  std::vector<double> criterion_trace;  // chosen criterion value per step
  std::vector<double> step_seconds;     // wall time per step
  bool rank_exhausted = false;
  bool bound_reached = false;
};

}  // namespace rgcss
