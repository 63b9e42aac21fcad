#pragma once

#include <optional>

#include "tms/config.hpp"
#include "tms/constants.hpp"
#include "tms/types.hpp"

namespace tms::zeros {

/// Raised when find_zeros is called below mu0 (the symbol has no zeros there).
class no_zeros_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Zero pair of N(z) in the strip together with its cut-plane image.
struct ZeroData {
  Regime regime;
  cplx z_plus;
  cplx z_minus;
  std::optional<double> t0;  // ImaginaryPairZeros: z± = i/2 ± i t0
  std::optional<double> s0;  // RealLineZeros:     z± = i/2 ± s0
  cplx w_plus;
  cplx w_minus;
  double residual_plus;   // |N(z+)|
  double residual_minus;  // |N(z-)|
};

/// Locate z± on the 1-D restriction where N is real (segment (0,i) or the
/// line Im z = 1/2, depending on the regime).
ZeroData find_zeros(double mu, const constants::CriticalConstants& cc,
                    const QuadratureConfig& cfg);

/// Positive root of N(i/2 + s) = 0 for mu in (mu1, 2); bracket grows
/// geometrically until the sign change is found.
double s0_of_mu(double mu, const constants::CriticalConstants& cc,
                const QuadratureConfig& cfg);

/// Root of N(i(1/2 + t)) = 0, t in (0, 1/2], for mu in (mu0, mu1).
double t0_of_mu(double mu, const constants::CriticalConstants& cc,
                const QuadratureConfig& cfg);

/// Winding number of N around the rectangle [-L, L] x [0, 1] (phase-continued
/// sampling, adaptive step refinement); equals the number of zeros inside.
int winding_strip_boundary(double mu, const QuadratureConfig& cfg);

/// Total argument increment of the normalized symbol along the lower coast;
/// approaches -2pi.
double coast_winding(double mu, const QuadratureConfig& cfg);

}  // namespace tms::zeros
