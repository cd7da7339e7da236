#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rgcss {

/// Objective optimized by the greedy selection.
///
/// `Full` penalizes the regularized reconstruction error of every column,
/// including the selected ones. `FeatureSelection` measures the error over
/// unselected columns only, treating chosen features as exactly available.
enum class Objective { Full, FeatureSelection };

/// Stopping policy for the greedy loop.
enum class StopRule { FixedK, BoundGap };

/// A symmetric positive-definite factorization failed (rank deficiency at
/// lambda = 0, or loss of definiteness beyond the pivot tolerance).
class SingularSystemError : public std::runtime_error {
 public:
  explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative routine failed to converge, or internal state propagation
/// became inconsistent (e.g. a loss recurrence went negative).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rgcss
