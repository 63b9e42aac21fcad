#include "tms/zeros.hpp"

#include <cmath>
#include <functional>

#include "tms/kernels.hpp"

namespace tms::zeros {

namespace {

double n_line(double s, double mu, const QuadratureConfig& cfg) {
  return kernels::n_fn(StripPoint(cplx(s, 0.5)), mu, cfg).real();
}

double n_tau(double t, double mu, const QuadratureConfig& cfg) {
  return kernels::n_fn(StripPoint(cplx(0.0, t)), mu, cfg).real();
}

double bisect(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int it = 0; it < 200 && b - a > 1e-13 * std::max(1.0, std::abs(b)); ++it) {
    const double c = 0.5 * (a + b), fc = f(c);
    if ((fa < 0) == (fc < 0)) {
      a = c;
      fa = fc;
    } else {
      b = c;
    }
  }
  return 0.5 * (a + b);
}

// Accumulate the continuous argument of f along [t0, t1], halving the step
// whenever a single move turns the phase by more than ~0.8 rad.
double march_arg(const std::function<cplx(double)>& f, double t0, double t1, int n0) {
  double total = 0.0;
  double t = t0;
  double h = (t1 - t0) / n0;
  cplx prev = f(t0);
  while (t < t1) {
    double step = std::min(h, t1 - t);
    for (;;) {
      const cplx cur = f(t + step);
      const double d = std::arg(cur / prev);
      if (std::abs(d) <= 0.8 || step < 1e-9 * (t1 - t0)) {
        total += d;
        prev = cur;
        t += step;
        break;
      }
      step *= 0.5;
    }
  }
  return total;
}

}  // namespace

double s0_of_mu(double mu, const constants::CriticalConstants& cc,
                const QuadratureConfig& cfg) {
  if (!(mu > cc.mu1 && mu < 2.0))
    throw std::domain_error("s0_of_mu: mu must lie in (mu1, 2)");
  auto f = [&](double s) { return n_line(s, mu, cfg); };
  double hi = 1.0;
  while (f(hi) < 0) {
    hi *= 2.0;
    if (hi > 1e4) throw numeric_error("s0_of_mu: no sign change found");
  }
  return bisect(f, 1e-12, hi);
}

double t0_of_mu(double mu, const constants::CriticalConstants& cc,
                const QuadratureConfig& cfg) {
  if (!(mu > cc.mu0 && mu < cc.mu1))
    throw std::domain_error("t0_of_mu: mu must lie in (mu0, mu1)");
  auto f = [&](double t) { return n_tau(0.5 + t, mu, cfg); };
  return bisect(f, 1e-12, 0.5);
}

ZeroData find_zeros(double mu, const constants::CriticalConstants& cc,
                    const QuadratureConfig& cfg) {
  const Regime reg = constants::classify(mu, cc);
  if (reg == Regime::SelfAdjoint)
    throw no_zeros_error("no zeros in the strip for mu <= mu0");

  ZeroData out;
  out.regime = reg;
  if (reg == Regime::DoubleZero) {
    out.t0 = 0.0;
    out.s0 = 0.0;
    out.z_plus = out.z_minus = cplx(0.0, 0.5);
    out.w_plus = out.w_minus = cplx(-1.0, 0.0);
  } else if (reg == Regime::ImaginaryPairZeros) {
    const double t0 = t0_of_mu(mu, cc, cfg);
    out.t0 = t0;
    out.z_plus = cplx(0.0, 0.5 + t0);
    out.z_minus = cplx(0.0, 0.5 - t0);
    out.w_plus = std::polar(1.0, kPi * (1.0 + 2.0 * t0));
    out.w_minus = std::polar(1.0, kPi * (1.0 - 2.0 * t0));
  } else {
    const double s0 = s0_of_mu(mu, cc, cfg);
    out.s0 = s0;
    out.z_plus = cplx(s0, 0.5);
    out.z_minus = cplx(-s0, 0.5);
    out.w_plus = cplx(-std::exp(kTwoPi * s0), 0.0);
    out.w_minus = cplx(-std::exp(-kTwoPi * s0), 0.0);
  }
  out.residual_plus = std::abs(kernels::n_fn(StripPoint(out.z_plus), mu, cfg));
  out.residual_minus = std::abs(kernels::n_fn(StripPoint(out.z_minus), mu, cfg));
  if (reg != Regime::DoubleZero &&
      std::max(out.residual_plus, out.residual_minus) > 1e-9)
    throw numeric_error("find_zeros: residual above 1e-9");
  return out;
}

int winding_strip_boundary(double mu, const QuadratureConfig& cfg) {
  // make sure line zeros (if any) are well inside the rectangle
  const double sq = kernels::sqrt_term(mu);
  double L = 12.0;
  while (std::abs(kernels::lambda_closed(cplx(L - 4.0, 0.5), mu)) > 0.1 * sq && L < 400.0)
    L += 8.0;
  auto N = [&](cplx z) { return kTwoPi * kPi * (sq - kernels::lambda_closed(z, mu)); };

  double total = 0.0;
  const int n0 = 400;
  total += march_arg([&](double t) { return N(cplx(-L + 2 * L * t, 0.0)); }, 0, 1, n0);
  total += march_arg([&](double t) { return N(cplx(L, t)); }, 0, 1, n0);
  total += march_arg([&](double t) { return N(cplx(L - 2 * L * t, 1.0)); }, 0, 1, n0);
  total += march_arg([&](double t) { return N(cplx(-L, 1.0 - t)); }, 0, 1, n0);

  const double windings = total / kTwoPi;
  const long rounded = std::lround(windings);
  if (std::abs(windings - static_cast<double>(rounded)) > 0.05)
    throw numeric_error("winding_strip_boundary: non-integer winding " +
                        std::to_string(windings));
  (void)cfg;
  return static_cast<int>(rounded);
}

double coast_winding(double mu, const QuadratureConfig& cfg) {
  const double alpha = 0.5 * kPi - std::asin(0.5 * mu);
  const double Sigma = std::max(25.0, 16.0 / alpha);
  auto nstar = [&](double sig) {
    return 1.0 - kernels::lambda_closed(cplx(sig, 1.0), mu) / kernels::sqrt_term(mu);
  };
  (void)cfg;
  return march_arg(nstar, -Sigma, Sigma, 4000);
}

}  // namespace tms::zeros
