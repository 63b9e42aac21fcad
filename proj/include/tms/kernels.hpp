#pragma once

#include "tms/config.hpp"
#include "tms/types.hpp"

namespace tms::kernels {

/// v(x) = arcsin(mu x / 2).
double v(double x, double mu);

double sqrt_term(double mu);  // sqrt(1 - (mu/2)^2)

/// Lambda(z) by adaptive quadrature after the substitution x = (2/mu) sin u,
/// which removes the 1/cos v(x) endpoint singularity for every mu in (0,2).
/// Inside a disc of radius 1e-6 around z = i/2 the integrand is replaced by
/// its analytic limit.
cplx lambda_fn(const StripPoint& z, double mu, const QuadratureConfig& cfg);

/// Exact antiderivative of the same integral,
///   Lambda(z) = (4/mu^2) [zeta ch(v1 zeta) sin v1 - sh(v1 zeta) cos v1]
///               / ((zeta^2+1) sh(pi zeta / 2)),   zeta = z - i/2,
/// evaluated in exponential form when |Re zeta| is large. Valid on the whole
/// strip (and beyond); cross-checked against lambda_fn in the tests.
cplx lambda_closed(cplx z, double mu);

/// N(z) = 2 pi^2 (sqrt(1-(mu/2)^2) - Lambda(z)). On the line Im z = 1/2 and on
/// the segment (0,i) the value is real; the imaginary part is asserted small
/// and zeroed there.
cplx n_fn(const StripPoint& z, double mu, const QuadratureConfig& cfg);

/// Normalized symbol on the cut plane: N(z(w)) / (2 pi^2 sqrt(1-(mu/2)^2)),
/// z(w) = log_cut(w) / 2pi.
cplx n_star_w(const CutPlanePoint& w, double mu, const QuadratureConfig& cfg);

/// Same, evaluated through lambda_closed (used by the singular-integral machinery).
cplx n_star_w_closed(const CutPlanePoint& w, double mu);

/// Boundary curves of the critical-constant equations.
double q0(double mu, const QuadratureConfig& cfg);  // Re Lambda(0)
double q1(double mu, const QuadratureConfig& cfg);  // Re Lambda(i/2)
double q1_closed(double mu);  // (8/(pi mu^2)) (mu/2 - arcsin(mu/2) sqrt(1-mu^2/4))
double q0_closed(double mu);  // (4 sqrt(2)/mu^2) (sin(v1/2) - sin(3 v1/2)/3)

/// Multiplication symbol of the bounded part: strictly positive, strictly
/// decreasing, sup at r=0.
double m1_symbol(double r, double mu);
double m1_symbol_sup(double mu);

}  // namespace tms::kernels
