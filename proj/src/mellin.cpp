#include "tms/mellin.hpp"

#include <algorithm>
#include <cmath>

#include "tms/kernels.hpp"
#include "tms/quadrature.hpp"

namespace tms::mellin {

namespace {

// Decay window of Phi(u) = e^{3u/2} phi(e^u); throws if the probe range does
// not contain the support.
std::pair<double, double> find_window(const std::function<cplx(double)>& Phi) {
  const double lo = -80.0, hi = 40.0, step = 0.25;
  double peak = 0.0;
  for (double u = lo; u <= hi; u += step) peak = std::max(peak, std::abs(Phi(u)));
  if (peak == 0.0) return {-1.0, 1.0};
  const double thresh = 1e-15 * peak;
  double a = hi, b = lo;
  for (double u = lo; u <= hi; u += step) {
    if (std::abs(Phi(u)) > thresh) {
      a = std::min(a, u);
      b = std::max(b, u);
    }
  }
  if (a <= lo + step || b >= hi - step)
    throw std::domain_error("mellin: input does not decay inside the probe window");
  return {a - 1.0, b + 1.0};
}

}  // namespace

SampledFunction forward(const RadialFn& phi, const std::vector<double>& s_grid,
                        const QuadratureConfig& cfg) {
  auto Phi = [&](double u) { return std::exp(1.5 * u) * phi(std::exp(u)); };
  const auto [ua, ub] = find_window(Phi);
  SampledFunction out;
  out.kind = GridKind::line_s;
  out.grid = s_grid;
  out.values.reserve(s_grid.size());
  const double norm = 1.0 / std::sqrt(kTwoPi);
  for (double s : s_grid) {
    auto f = [&](double u) { return std::exp(cplx(0.0, -s * u)) * Phi(u); };
    out.values.push_back(norm * quad::integrate<cplx>(f, ua, ub, cfg));
  }
  out.validate();
  return out;
}

SampledFunction forward(const SampledFunction& phi, const std::vector<double>& s_grid,
                        const QuadratureConfig& cfg) {
  phi.validate();
  if (phi.kind != GridKind::radial_r)
    throw std::invalid_argument("mellin::forward: samples must be on a radial grid");
  // linear interpolation in u = ln r, zero outside the sampled support
  auto fn = [g = phi.grid, v = phi.values](double r) -> cplx {
    if (r <= g.front() || r >= g.back()) return {0.0, 0.0};
    const auto it = std::upper_bound(g.begin(), g.end(), r);
    const size_t i = static_cast<size_t>(it - g.begin());
    const double t = (std::log(r) - std::log(g[i - 1])) / (std::log(g[i]) - std::log(g[i - 1]));
    return v[i - 1] * (1.0 - t) + v[i] * t;
  };
  return forward(RadialFn(fn), s_grid, cfg);
}

SampledFunction inverse(const SampledFunction& f, const std::vector<double>& r_grid) {
  f.validate();
  SampledFunction out;
  out.kind = GridKind::radial_r;
  out.grid = r_grid;
  out.values.reserve(r_grid.size());
  const double norm = 1.0 / std::sqrt(kTwoPi);
  for (double r : r_grid) {
    const double u = std::log(r);
    cplx acc = 0.0;
    for (size_t i = 0; i + 1 < f.grid.size(); ++i) {
      const double h = f.grid[i + 1] - f.grid[i];
      const cplx a = std::exp(cplx(0.0, u * f.grid[i])) * f.values[i];
      const cplx b = std::exp(cplx(0.0, u * f.grid[i + 1])) * f.values[i + 1];
      acc += 0.5 * h * (a + b);
    }
    out.values.push_back(norm * std::exp(-1.5 * u) * acc);
  }
  out.validate();
  return out;
}

double norm_radial(const RadialFn& phi, const QuadratureConfig& cfg) {
  auto Phi = [&](double u) { return std::exp(1.5 * u) * phi(std::exp(u)); };
  const auto [ua, ub] = find_window(Phi);
  auto f = [&](double u) { return std::norm(Phi(u)); };
  return std::sqrt(quad::integrate<double>(f, ua, ub, cfg));
}

double norm_line(const SampledFunction& f) {
  f.validate();
  double acc = 0.0;
  for (size_t i = 0; i + 1 < f.grid.size(); ++i)
    acc += 0.5 * (f.grid[i + 1] - f.grid[i]) *
           (std::norm(f.values[i]) + std::norm(f.values[i + 1]));
  return std::sqrt(acc);
}

std::vector<double> default_s_grid() {
  std::vector<double> g;
  const int per_unit = 16;
  for (int i = -40 * per_unit; i <= 40 * per_unit; ++i)
    g.push_back(static_cast<double>(i) / per_unit);
  return g;
}

CutPlanePoint strip_to_plane(const StripPoint& z) {
  if (z.on_lower_edge())
    return {cplx(std::exp(kTwoPi * z.z.real()), 0.0), Coast::upper};
  if (z.on_upper_edge())
    return {cplx(std::exp(kTwoPi * z.z.real()), 0.0), Coast::lower};
  return {std::exp(kTwoPi * z.z), std::nullopt};
}

StripPoint plane_to_strip(const CutPlanePoint& w) { return StripPoint(log_cut(w) / kTwoPi); }

double quadratic_form_m0(const SampledFunction& F, double mu, const QuadratureConfig& cfg) {
  F.validate();
  std::vector<double> nvals(F.grid.size());
  for (size_t i = 0; i < F.grid.size(); ++i)
    nvals[i] = kernels::n_fn(StripPoint(cplx(F.grid[i], 0.5)), mu, cfg).real();
  double acc = 0.0;
  for (size_t i = 0; i + 1 < F.grid.size(); ++i)
    acc += 0.5 * (F.grid[i + 1] - F.grid[i]) *
           (std::norm(F.values[i]) * nvals[i] + std::norm(F.values[i + 1]) * nvals[i + 1]);
  return acc;
}

}  // namespace tms::mellin
