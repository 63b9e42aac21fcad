#include "tms/constants.hpp"

#include <cmath>
#include <functional>

#include "tms/kernels.hpp"

namespace tms::constants {

namespace {

constexpr int kScanPoints = 2000;
constexpr double kMuLo = 1e-3;
constexpr double kMuHi = 2.0 - 1e-9;

double bisect(const std::function<double(double)>& g, double a, double b, double xtol) {
  double fa = g(a);
  for (int it = 0; it < 200 && b - a > xtol; ++it) {
    const double c = 0.5 * (a + b), fc = g(c);
    if ((fa < 0) == (fc < 0)) {
      a = c;
      fa = fc;
    } else {
      b = c;
    }
  }
  return 0.5 * (a + b);
}

double find_root(const std::function<double(double)>& g, const char* what) {
  double prev_mu = kMuLo, prev = g(prev_mu);
  double lo = 0, hi = 0;
  int crossings = 0;
  for (int i = 1; i <= kScanPoints; ++i) {
    const double mu = kMuLo + (kMuHi - kMuLo) * i / kScanPoints;
    const double cur = g(mu);
    if ((prev < 0) != (cur < 0)) {
      ++crossings;
      lo = prev_mu;
      hi = mu;
    }
    prev = cur;
    prev_mu = mu;
  }
  if (crossings != 1)
    throw numeric_error(std::string(what) + ": expected exactly one sign change, found " +
                        std::to_string(crossings));
  return bisect(g, lo, hi, 1e-12);
}

}  // namespace

double find_mu0(const QuadratureConfig& cfg) {
  auto g = [&](double mu) { return kernels::sqrt_term(mu) - kernels::q0(mu, cfg); };
  return find_root(g, "find_mu0");
}

double find_mu1(const QuadratureConfig& cfg) {
  auto g = [&](double mu) { return kernels::sqrt_term(mu) - kernels::q1_closed(mu); };
  const double mu1 = find_root(g, "find_mu1");
  const double cross = std::abs(kernels::q1(mu1, cfg) - kernels::q1_closed(mu1));
  if (cross > 1e3 * cfg.abs_tol)
    throw numeric_error("find_mu1: closed form and quadrature disagree at the root");
  return mu1;
}

CriticalConstants compute(const QuadratureConfig& cfg, double double_zero_tol) {
  CriticalConstants cc;
  cc.mu0 = find_mu0(cfg);
  cc.mu1 = find_mu1(cfg);
  if (!(cc.mu0 < cc.mu1)) throw numeric_error("critical constants out of order");
  cc.m0 = 2.0 / cc.mu0 - 1.0;
  cc.m1 = 2.0 / cc.mu1 - 1.0;
  cc.tol = double_zero_tol;
  return cc;
}

Regime classify(double mu, const CriticalConstants& cc) {
  if (!(mu > 0 && mu < 2)) throw std::domain_error("classify: mu outside (0,2)");
  if (std::abs(mu - cc.mu1) <= cc.tol) return Regime::DoubleZero;
  if (mu < cc.mu0) return Regime::SelfAdjoint;
  if (mu < cc.mu1) return Regime::ImaginaryPairZeros;
  return Regime::RealLineZeros;
}

}  // namespace tms::constants
