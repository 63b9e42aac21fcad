#pragma once

#include <stdexcept>

namespace tms {

/// Tolerances and cutoffs shared by every quadrature-backed operation.
struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 60;
  double tail_cutoff_X = 1e6;   // abscissa where asymptotic tail handling of Ln a starts
  double pv_epsilon = 0.5;      // half-width (in log coordinates) of the principal-value subtraction window
  int grid_points_per_decade = 64;

  void validate() const {
    if (abs_tol <= 0 || rel_tol <= 0) throw std::invalid_argument("tolerances must be positive");
    if (max_subdivisions <= 0) throw std::invalid_argument("max_subdivisions must be positive");
    if (tail_cutoff_X <= 1.0) throw std::invalid_argument("tail_cutoff_X must exceed 1");
    if (pv_epsilon <= 0) throw std::invalid_argument("pv_epsilon must be positive");
    if (grid_points_per_decade < 4) throw std::invalid_argument("grid_points_per_decade too small");
  }
};

/// Thrown when an adaptive scheme cannot reach the requested tolerance,
/// or when a numeric consistency assertion fails.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tms
