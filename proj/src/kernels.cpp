#include "tms/kernels.hpp"

#include <cmath>

#include "tms/quadrature.hpp"

namespace tms::kernels {

namespace {

constexpr double kHalfPi = 0.5 * kPi;

// sinh(u*zeta)/sinh((pi/2)*zeta), stable for small |zeta| and for large |Re zeta|.
cplx sinh_ratio(double u, cplx zeta) {
  if (zeta.real() < 0) zeta = -zeta;  // even
  const double az = std::abs(zeta);
  if (az < 1e-6) {
    // sh(u z)/sh(c z) = (u/c)(1 + z^2 (u^2 - c^2)/6 + O(z^4))
    return (u / kHalfPi) * (1.0 + zeta * zeta * (u * u - kHalfPi * kHalfPi) / 6.0);
  }
  if (zeta.real() > 15.0) {
    const cplx num = std::exp((u - kHalfPi) * zeta) - std::exp(-(u + kHalfPi) * zeta);
    return num / (1.0 - std::exp(-kPi * zeta));
  }
  return std::sinh(u * zeta) / std::sinh(kHalfPi * zeta);
}

}  // namespace

double v(double x, double mu) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("v: x must lie in [0,1]");
  if (!(mu > 0.0 && mu < 2.0)) throw std::domain_error("v: mu must lie in (0,2)");
  const double s = 0.5 * mu * x;
  if (!(s >= 0.0 && s < 1.0)) throw std::domain_error("v: mu*x/2 outside [0,1)");
  return std::asin(s);
}

double sqrt_term(double mu) { return std::sqrt(1.0 - 0.25 * mu * mu); }

cplx lambda_fn(const StripPoint& z, double mu, const QuadratureConfig& cfg) {
  if (!(mu > 0.0 && mu < 2.0)) throw std::domain_error("lambda_fn: mu outside (0,2)");
  const cplx zeta = z.z - cplx(0.0, 0.5);
  const double v1 = std::asin(0.5 * mu);
  const double pref = 4.0 / (mu * mu);
  if (std::abs(zeta) < 1e-6) {
    // removable singularity at z = i/2: integrand limit is sin(u) * u/(pi/2)
    auto f = [&](double u) { return pref * std::sin(u) * (u / kHalfPi); };
    return cplx(quad::integrate<double>(f, 0.0, v1, cfg), 0.0);
  }
  auto f = [&](double u) { return pref * std::sin(u) * sinh_ratio(u, zeta); };
  return quad::integrate<cplx>(f, 0.0, v1, cfg);
}

cplx lambda_closed(cplx z, double mu) {
  if (!(mu > 0.0 && mu < 2.0)) throw std::domain_error("lambda_closed: mu outside (0,2)");
  cplx zeta = z - cplx(0.0, 0.5);
  if (zeta.real() < 0) zeta = -zeta;  // Lambda is even in zeta
  const double v1 = std::asin(0.5 * mu);
  const double sv = std::sin(v1), cv = std::cos(v1);
  const double pref = 4.0 / (mu * mu);
  const double az = std::abs(zeta);
  if (az < 1e-3) {
    // [zeta ch sv - sh cv]/((z^2+1) sh(c z)) expanded to O(zeta^2)
    const double c = kHalfPi;
    const double a0 = sv - v1 * cv;
    const cplx z2 = zeta * zeta;
    const cplx corr = z2 * (0.5 * v1 * v1 * sv - v1 * v1 * v1 * cv / 6.0 -
                            a0 * (1.0 + c * c / 6.0));
    return pref * (a0 + corr) / c;
  }
  cplx num, den;
  if (zeta.real() > 15.0) {
    // factor out e^{(v1 - pi/2) zeta}; all remaining exponents are negative
    const cplx e2v = std::exp(-2.0 * v1 * zeta);
    num = zeta * sv * (1.0 + e2v) - cv * (1.0 - e2v);
    den = (zeta * zeta + 1.0) * (1.0 - std::exp(-kPi * zeta));
    return pref * std::exp((v1 - kHalfPi) * zeta) * num / den;
  }
  num = zeta * std::cosh(v1 * zeta) * sv - std::sinh(v1 * zeta) * cv;
  den = (zeta * zeta + 1.0) * std::sinh(kHalfPi * zeta);
  return pref * num / den;
}

namespace {

cplx enforce_reality(cplx n, const StripPoint& z, const QuadratureConfig& cfg) {
  const bool on_line = std::abs(z.z.imag() - 0.5) < 1e-13;
  const bool on_tau = std::abs(z.z.real()) < 1e-13 && z.z.imag() > 0 && z.z.imag() < 1;
  if (on_line || on_tau) {
    const double tol = 1e3 * cfg.abs_tol * std::max(1.0, std::abs(n));
    if (std::abs(n.imag()) > tol)
      throw numeric_error("n_fn: symbol not real where it must be");
    return {n.real(), 0.0};
  }
  return n;
}

}  // namespace

cplx n_fn(const StripPoint& z, double mu, const QuadratureConfig& cfg) {
  const cplx n = kTwoPi * kPi * (sqrt_term(mu) - lambda_fn(z, mu, cfg));
  return enforce_reality(n, z, cfg);
}

cplx n_star_w(const CutPlanePoint& w, double mu, const QuadratureConfig& cfg) {
  const cplx z = log_cut(w) / kTwoPi;
  return n_fn(StripPoint(z), mu, cfg) / (kTwoPi * kPi * sqrt_term(mu));
}

cplx n_star_w_closed(const CutPlanePoint& w, double mu) {
  const cplx z = log_cut(w) / kTwoPi;
  return 1.0 - lambda_closed(z, mu) / sqrt_term(mu);
}

double q0(double mu, const QuadratureConfig& cfg) {
  return lambda_fn(StripPoint(cplx(0.0, 0.0)), mu, cfg).real();
}

double q1(double mu, const QuadratureConfig& cfg) {
  return lambda_fn(StripPoint(cplx(0.0, 0.5)), mu, cfg).real();
}

double q1_closed(double mu) {
  const double v1 = std::asin(0.5 * mu);
  return 8.0 / (kPi * mu * mu) * (0.5 * mu - v1 * std::sqrt(1.0 - 0.25 * mu * mu));
}

double q0_closed(double mu) {
  const double v1 = std::asin(0.5 * mu);
  return 4.0 * std::sqrt(2.0) / (mu * mu) *
         (std::sin(0.5 * v1) - std::sin(1.5 * v1) / 3.0);
}

double m1_symbol(double r, double mu) {
  if (!(r >= 0.0)) throw std::domain_error("m1_symbol: r must be nonnegative");
  const double a = 1.0 - 0.25 * mu * mu;
  // sqrt(a r^2 + 1) - sqrt(a) r == 1 / (sqrt(a r^2 + 1) + sqrt(a) r), exactly
  return kTwoPi * kPi / (std::sqrt(a * r * r + 1.0) + std::sqrt(a) * r);
}

double m1_symbol_sup(double) { return kTwoPi * kPi; }

}  // namespace tms::kernels
