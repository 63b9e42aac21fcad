#pragma once

#include <vector>

#include "tms/config.hpp"
#include "tms/constants.hpp"
#include "tms/types.hpp"

namespace tms::cauchy {

/// K-values cached on a circle; lets eigenfunction residues be re-evaluated
/// for many lambda without re-integrating.
struct ContourCache {
  cplx center;
  double radius = 0.0;
  std::vector<cplx> nodes;
  std::vector<cplx> k_values;
};

/// Branch-tracked data for the symbol a(x) = N*_-(x) h_+(x)/h_-(x) and the
/// regularized Cauchy transform K. Immutable after build(); evaluations are
/// pure. The heavy tails are handled in the log coordinate sigma = ln x / 2pi,
/// where the model part Ln[(u-i/2)/(u+i/2)] integrates in closed form against
/// the regularizing counterterm and the remainder decays exponentially.
class CauchyMachinery {
 public:
  static CauchyMachinery build(double mu, double s0, const QuadratureConfig& cfg);

  double mu() const { return mu_; }
  double s0() const { return s0_; }
  cplx w_plus() const { return w_plus_; }
  cplx w_minus() const { return w_minus_; }
  const QuadratureConfig& config() const { return cfg_; }

  /// Master-grid samples of Ln a on x in [1e-8, 1e12] plus the recorded
  /// branch diagnostics.
  const SampledFunction& ln_a_grid() const { return ln_a_; }
  double tail_coeff() const { return tail_coeff_; }          // fit of arg*ln x, last decade
  double tail_coeff_extended() const { return tail_ext_; }   // same fit at sigma ~ 300
  double arg_increment() const { return arg_increment_; }    // over sigma in [-5000, 5000]
  double max_abs_arg() const { return max_abs_arg_; }
  double min_abs_a() const { return min_abs_a_; }

  cplx h(const CutPlanePoint& w) const;
  cplx h_coast(double t, Coast side) const;
  cplx a(double x) const;
  cplx ln_a_sigma(double sigma) const;         // principal Ln a(e^{2 pi sigma})
  cplx nstar_lower_sigma(double sigma) const;  // N*(sigma + i)
  double nstar_line_sigma(double sigma) const; // N*(sigma + i/2), real

  /// Regularized Cauchy transform for w off the cut [0, inf).
  cplx k_reg(cplx w) const;
  cplx k_reg(cplx w, double split_X) const;
  /// Principal-value part at t > 0 (the shared half of both boundary values).
  cplx k_pv(double t) const;
  /// Boundary values K_± = PV ± (1/2) Ln a(t).
  cplx k_boundary(double t, Coast side) const;
  /// Direct truncation of the defining limit at height n (test oracle).
  cplx k_truncated(cplx w, double n) const;

  cplx k_at_w_plus() const { return k_wp_; }
  cplx k_at_w_minus() const { return k_wm_; }
  const ContourCache& contour_plus() const { return contour_plus_; }
  const ContourCache& contour_minus() const { return contour_minus_; }

 private:
  CauchyMachinery() = default;

  cplx k_core(cplx w, double S, double sig_min) const;

  double mu_ = 0, s0_ = 0;
  cplx w_plus_, w_minus_;
  QuadratureConfig cfg_;
  SampledFunction ln_a_;
  double tail_coeff_ = 0, tail_ext_ = 0, arg_increment_ = 0;
  double max_abs_arg_ = 0, min_abs_a_ = 0;
  cplx k_wp_, k_wm_;
  ContourCache contour_plus_, contour_minus_;
};

/// Convenience constructor: computes s0 from the zero finder. Requires the
/// RealLineZeros regime.
CauchyMachinery make_machinery(double mu, const constants::CriticalConstants& cc,
                               const QuadratureConfig& cfg);

}  // namespace tms::cauchy
