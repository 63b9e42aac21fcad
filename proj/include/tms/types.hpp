#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tms {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Physical mass m of the third particle and the reduced parameter mu = 2/(m+1).
struct MassParams {
  double m;
  double mu;

  static MassParams from_m(double m) {
    if (!(m > 0)) throw std::domain_error("mass must be positive");
    return {m, 2.0 / (m + 1.0)};
  }
  static MassParams from_mu(double mu) {
    if (!(mu > 0 && mu < 2)) throw std::domain_error("mu must lie in (0,2)");
    return {2.0 / mu - 1.0, mu};
  }
};

/// Point of the closed strip I = { 0 <= Im z <= 1 }.
struct StripPoint {
  cplx z;

  explicit StripPoint(cplx zz) : z(zz) {
    if (z.imag() < -1e-14 || z.imag() > 1.0 + 1e-14)
      throw std::domain_error("point outside the closed strip 0 <= Im z <= 1");
  }
  bool on_lower_edge() const { return std::abs(z.imag()) < 1e-14; }        // l_+
  bool on_upper_edge() const { return std::abs(z.imag() - 1.0) < 1e-14; }  // l_-
};

enum class Coast { upper, lower };

/// Point of the cut plane (cut along [0, inf)); the coast tag disambiguates
/// boundary values when w is real positive.
struct CutPlanePoint {
  cplx w;
  std::optional<Coast> coast;

  CutPlanePoint(cplx ww, std::optional<Coast> c = std::nullopt) : w(ww), coast(c) {
    if (w == cplx(0.0, 0.0)) throw std::domain_error("w = 0 is outside the cut plane");
  }
};

/// log with imaginary part in (0, 2pi]; on the cut the coast decides the sheet side.
inline cplx log_cut(const CutPlanePoint& p) {
  const cplx w = p.w;
  if (p.coast) {
    if (!(w.real() > 0) || w.imag() != 0.0)
      throw std::domain_error("coast tag is only meaningful for real positive w");
    double im = (*p.coast == Coast::upper) ? 0.0 : kTwoPi;
    return {std::log(w.real()), im};
  }
  double a = std::arg(w);
  if (a <= 0.0) a += kTwoPi;
  if (w.imag() == 0.0 && w.real() > 0.0)
    throw std::domain_error("real positive w requires a coast tag");
  return {std::log(std::abs(w)), a};
}

enum class GridKind { radial_r, line_s, coast_t };

/// Samples of a function over an ordered real grid.
struct SampledFunction {
  std::vector<double> grid;
  std::vector<cplx> values;
  GridKind kind = GridKind::line_s;

  void validate() const {
    if (grid.size() != values.size()) throw std::invalid_argument("grid/value size mismatch");
    for (size_t i = 1; i < grid.size(); ++i)
      if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("grid must be strictly increasing");
    for (const auto& v : values)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::invalid_argument("non-finite sample");
  }
};

enum class Regime { SelfAdjoint, ImaginaryPairZeros, DoubleZero, RealLineZeros };

inline std::string to_string(Regime r) {
  switch (r) {
    case Regime::SelfAdjoint: return "self_adjoint";
    case Regime::ImaginaryPairZeros: return "imaginary_pair_zeros";
    case Regime::DoubleZero: return "double_zero";
    case Regime::RealLineZeros: return "real_line_zeros";
  }
  return "?";
}

}  // namespace tms
