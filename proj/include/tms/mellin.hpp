#pragma once

#include <functional>

#include "tms/config.hpp"
#include "tms/types.hpp"

namespace tms::mellin {

using RadialFn = std::function<cplx(double)>;  // r in (0, inf)
using LineFn = std::function<cplx(double)>;    // s in (-inf, inf)

/// f(s) = (1/sqrt(2pi)) \int_0^inf r^{-is+1/2} phi(r) dr, computed as a
/// Fourier integral after r = e^u. Throws std::domain_error when phi does not
/// decay inside the probe window.
SampledFunction forward(const RadialFn& phi, const std::vector<double>& s_grid,
                        const QuadratureConfig& cfg);
SampledFunction forward(const SampledFunction& phi, const std::vector<double>& s_grid,
                        const QuadratureConfig& cfg);

/// phi(r) = (1/sqrt(2pi)) \int r^{is-3/2} f(s) ds (trapezoid over the sample grid).
SampledFunction inverse(const SampledFunction& f, const std::vector<double>& r_grid);

/// Norm in L2(r^2 dr) of a radial callable / in L2(ds) of line samples.
double norm_radial(const RadialFn& phi, const QuadratureConfig& cfg);
double norm_line(const SampledFunction& f);

/// Default line grid: [-40, 40] at 16 points per unit.
std::vector<double> default_s_grid();

CutPlanePoint strip_to_plane(const StripPoint& z);
StripPoint plane_to_strip(const CutPlanePoint& w);

/// Quadratic form of the Mellin-transformed operator from boundary samples on
/// the middle line: \int |F(i/2+s)|^2 N(i/2+s) ds.
double quadratic_form_m0(const SampledFunction& F, double mu, const QuadratureConfig& cfg);

}  // namespace tms::mellin
