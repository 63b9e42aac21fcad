#pragma once

#include "tms/config.hpp"
#include "tms/types.hpp"

namespace tms::constants {

/// Critical values of mu (and the corresponding masses m = 2/mu - 1).
struct CriticalConstants {
  double mu0;
  double mu1;
  double m0;
  double m1;
  double tol;  // half-width of the DoubleZero band around mu1
};

/// Root of sqrt(1-(mu/2)^2) = q0(mu) on (0,2): uniform scan then bisection.
/// Throws numeric_error if the scan does not find exactly one sign change.
double find_mu0(const QuadratureConfig& cfg);

/// Root of sqrt(1-(mu/2)^2) = q1(mu), using the closed form of q1 with a
/// quadrature cross-check at the root.
double find_mu1(const QuadratureConfig& cfg);

CriticalConstants compute(const QuadratureConfig& cfg, double double_zero_tol = 1e-9);

Regime classify(double mu, const CriticalConstants& cc);

}  // namespace tms::constants
