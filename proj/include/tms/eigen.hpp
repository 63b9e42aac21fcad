#pragma once

#include <utility>
#include <vector>

#include "tms/cauchy.hpp"
#include "tms/types.hpp"

namespace tms::eigen {

/// Spectral parameter lambda = |lambda| e^{i theta}, 0 < theta < 2pi, together
/// with its normalized companion lambda* = lambda / (2 pi^2 sqrt(1-(mu/2)^2)).
struct EigenParams {
  cplx lambda;
  double theta;
  cplx lambda_star;
  double mu, s0;
  cplx w_plus, w_minus;

  static EigenParams make(cplx lambda, const cauchy::CauchyMachinery& mach);
  /// exponent of the w-power in the adjoint eigenfunction
  cplx sigma() const { return cplx(theta, -std::log(std::abs(lambda_star))) / kTwoPi; }
};

struct PoleResidues {
  cplx res_plus;
  cplx res_minus;
};

/// Adjoint eigenfunction  G(w) = w^sigma e^{K(w)} / (h(w) (w - w_-)),
/// powers taken with the (0, 2pi] log branch.
cplx g_lambda(const CutPlanePoint& w, const EigenParams& p,
              const cauchy::CauchyMachinery& mach);

/// Boundary values on the coasts via the Sokhotski formula; the lower coast
/// picks up one extra factor lambda*.
cplx g_boundary(double t, Coast side, const EigenParams& p,
                const cauchy::CauchyMachinery& mach);
/// Same with a precomputed principal-value part (shared between coasts and lambdas).
cplx g_boundary_with_pv(double t, Coast side, const EigenParams& p, cplx pv,
                        const cauchy::CauchyMachinery& mach);

/// B(w) = (w - w_-) G(w): analytic at w_-, simple pole only at w_+.
cplx b_lambda(const CutPlanePoint& w, const EigenParams& p,
              const cauchy::CauchyMachinery& mach);

/// |G(w)|^2 in closed form: Poisson-type integral of Ln|N*| over the negative
/// axis for psi != pi, algebraic expression on the ray psi = pi.
double abs2_closed(cplx w, const EigenParams& p, const cauchy::CauchyMachinery& mach);

struct Traces {
  std::vector<double> t;
  std::vector<double> upper_abs2, lower_abs2;
  std::vector<double> upper_phase, lower_phase;
};

/// |G_+|^2 = (2pi)^2 t^{theta/pi} / (|t-w_+||t-w_-|), |G_-|^2 = |G_+|^2 *
/// |lambda*|^2 / |N*_-(t)|^2, plus the Sokhotski phases.
Traces boundary_traces(const std::vector<double>& t_grid, const EigenParams& p,
                       const cauchy::CauchyMachinery& mach);

/// The two deficiency-vector norms (quadratures of the coast traces at
/// lambda = ±i); equal by the t -> 1/t substitution.
std::pair<double, double> deficiency_norms(const cauchy::CauchyMachinery& mach);

/// Residues at w_±: cached-contour quadrature reconciled against a shrinking
/// (w-w_±) G(w) limit; throws if the two routes disagree beyond rel_tol.
PoleResidues residues(const EigenParams& p, const cauchy::CauchyMachinery& mach,
                      double rel_tol = 1e-6);
/// Fast route only (cached contour); used by the spectrum detector.
PoleResidues residues_contour(const EigenParams& p, const cauchy::CauchyMachinery& mach);

/// sup over a psi grid of the ray-wise L2 integrals outside discs of radius
/// rho_scale * min(|w_-|, |w_+ - w_-|) around the poles (class-membership test).
double membership_sup(const EigenParams& p, const cauchy::CauchyMachinery& mach,
                      int n_psi = 11, double rho_scale = 0.35);

}  // namespace tms::eigen
