#include "tms/cauchy.hpp"

#include <cmath>

#include "tms/kernels.hpp"
#include "tms/quadrature.hpp"
#include "tms/zeros.hpp"

namespace tms::cauchy {

namespace {

// antiderivative of atan(1/(2y)) on y > 0
double F_anti(double y) {
  return y * std::atan(1.0 / (2.0 * y)) + 0.25 * std::log1p(4.0 * y * y);
}

}  // namespace

cplx CauchyMachinery::h(const CutPlanePoint& w) const {
  return log_cut(w) / kTwoPi - cplx(s0_, 0.5);
}

cplx CauchyMachinery::h_coast(double t, Coast side) const {
  if (!(t > 0)) throw std::domain_error("h_coast: t must be positive");
  const double u = std::log(t) / kTwoPi - s0_;
  return side == Coast::upper ? cplx(u, -0.5) : cplx(u, 0.5);
}

cplx CauchyMachinery::nstar_lower_sigma(double sigma) const {
  return 1.0 - kernels::lambda_closed(cplx(sigma, 1.0), mu_) / kernels::sqrt_term(mu_);
}

double CauchyMachinery::nstar_line_sigma(double sigma) const {
  return 1.0 - kernels::lambda_closed(cplx(sigma, 0.5), mu_).real() / kernels::sqrt_term(mu_);
}

cplx CauchyMachinery::a(double x) const {
  if (!(x > 0)) throw std::domain_error("a: x must be positive");
  const double u = std::log(x) / kTwoPi - s0_;
  const cplx val = nstar_lower_sigma(std::log(x) / kTwoPi) * (cplx(u, -0.5) / cplx(u, 0.5));
  if (val == cplx(0.0, 0.0)) throw numeric_error("a(x) = 0: zero finder inconsistent");
  return val;
}

cplx CauchyMachinery::ln_a_sigma(double sigma) const {
  const double u = sigma - s0_;
  return std::log(nstar_lower_sigma(sigma) * (cplx(u, -0.5) / cplx(u, 0.5)));
}

// Shared core: the integral pieces of K for a split point S > s0 + 1.
// k(sigma, w) = 2 pi / (1 - w e^{-2 pi sigma}); model tail A_model =
// -2i atan(1/(2(sigma - s0))) integrates in closed form against +Ln ln n,
// leaving ln(pi) - 1 + 2 F(S - s0).
cplx CauchyMachinery::k_core(cplx w, double S, double sig_min) const {
  auto kern = [&](double s) { return kTwoPi / (1.0 - w * std::exp(-kTwoPi * s)); };
  auto model = [&](double s) {
    return cplx(0.0, -2.0) * std::atan(1.0 / (2.0 * (s - s0_)));
  };
  const cplx I1 = quad::integrate<cplx>(
      [&](double s) { return ln_a_sigma(s) * kern(s); }, sig_min, S, cfg_);
  // exponentially decaying remainder, integrated block by block
  cplx I2 = 0.0;
  double lo = S;
  for (double len : {20.0, 40.0, 80.0, 160.0, 320.0, 640.0, 1280.0}) {
    const cplx block = quad::integrate<cplx>(
        [&](double s) { return (ln_a_sigma(s) - model(s)) * kern(s); }, lo, lo + len, cfg_);
    I2 += block;
    lo += len;
    if (std::abs(block) < 0.01 * cfg_.abs_tol) break;
  }
  const cplx I3 = quad::integrate<cplx>(
      [&](double s) {
        const cplx e = w * std::exp(-kTwoPi * s);
        return model(s) * kTwoPi * e / (1.0 - e);
      },
      S, S + 25.0, cfg_);
  return (I1 + I2 + I3) / cplx(0.0, kTwoPi) + std::log(kPi) - 1.0 + 2.0 * F_anti(S - s0_);
}

cplx CauchyMachinery::k_reg(cplx w) const { return k_reg(w, cfg_.tail_cutoff_X); }

cplx CauchyMachinery::k_reg(cplx w, double split_X) const {
  if (w == cplx(0.0, 0.0) || (w.imag() == 0.0 && w.real() >= 0.0))
    throw std::domain_error("k_reg: w on the cut; use k_boundary");
  const double S = std::max(std::log(split_X) / kTwoPi, s0_ + 2.0);
  const double sig_min = std::min(std::log(std::abs(w)) / kTwoPi, 0.0) - 7.0;
  return k_core(w, S, sig_min);
}

cplx CauchyMachinery::k_pv(double t) const {
  if (!(t > 0)) throw std::domain_error("k_pv: t must be positive");
  const double tau = std::log(t) / kTwoPi;
  const double S = std::max({std::log(cfg_.tail_cutoff_X) / kTwoPi, s0_ + 2.0, tau + 2.0});
  const double sig_min = tau - 7.0;
  const double delta = cfg_.pv_epsilon;
  auto kern = [&](double s) { return kTwoPi / (1.0 - std::exp(-kTwoPi * (s - tau))); };
  auto model = [&](double s) {
    return cplx(0.0, -2.0) * std::atan(1.0 / (2.0 * (s - s0_)));
  };
  const cplx At = ln_a_sigma(tau);

  cplx acc = quad::integrate<cplx>(
      [&](double s) { return ln_a_sigma(s) * kern(s); }, sig_min, tau - delta, cfg_);
  acc += quad::integrate<cplx>(
      [&](double s) { return ln_a_sigma(s) * kern(s); }, tau + delta, S, cfg_);
  // subtracted window: [A(sigma)-A(tau)] * kernel is regular at sigma = tau,
  // and the PV of the kernel over the symmetric window is exactly 2 pi delta
  auto sub = [&](double s) { return (ln_a_sigma(s) - At) * kern(s); };
  acc += quad::integrate<cplx>(sub, tau - delta, tau, cfg_);
  acc += quad::integrate<cplx>(sub, tau, tau + delta, cfg_);
  acc += At * kTwoPi * delta;

  cplx I2 = 0.0;
  double lo = S;
  for (double len : {20.0, 40.0, 80.0, 160.0, 320.0, 640.0, 1280.0}) {
    const cplx block = quad::integrate<cplx>(
        [&](double s) { return (ln_a_sigma(s) - model(s)) * kern(s); }, lo, lo + len, cfg_);
    I2 += block;
    lo += len;
    if (std::abs(block) < 0.01 * cfg_.abs_tol) break;
  }
  const cplx I3 = quad::integrate<cplx>(
      [&](double s) {
        const double e = std::exp(-kTwoPi * (s - tau));
        return model(s) * kTwoPi * e / (1.0 - e);
      },
      S, S + 25.0, cfg_);
  return (acc + I2 + I3) / cplx(0.0, kTwoPi) + std::log(kPi) - 1.0 + 2.0 * F_anti(S - s0_);
}

cplx CauchyMachinery::k_boundary(double t, Coast side) const {
  const double lo = ln_a_.grid.front(), hi = ln_a_.grid.back();
  if (!(t > lo && t < hi))
    throw std::domain_error("k_boundary: t outside the grid support");
  const cplx pv = k_pv(t);
  const cplx half = 0.5 * ln_a_sigma(std::log(t) / kTwoPi);
  return side == Coast::upper ? pv + half : pv - half;
}

cplx CauchyMachinery::k_truncated(cplx w, double n) const {
  if (w == cplx(0.0, 0.0) || (w.imag() == 0.0 && w.real() >= 0.0))
    throw std::domain_error("k_truncated: w on the cut");
  if (!(n > 1.0) || !std::isfinite(n))
    throw std::domain_error("k_truncated: height must be finite and > 1");
  const double T = std::log(n) / kTwoPi;
  const double sig_min = std::min(std::log(std::abs(w)) / kTwoPi, 0.0) - 7.0;
  auto kern = [&](double s) { return kTwoPi / (1.0 - w * std::exp(-kTwoPi * s)); };
  cplx acc = 0.0;
  // march in moderate blocks; the integrand only decays like 1/sigma here
  double lo = sig_min;
  while (lo < T) {
    const double hi = std::min(lo + 25.0, T);
    acc += quad::integrate<cplx>([&](double s) { return ln_a_sigma(s) * kern(s); }, lo, hi,
                                 cfg_);
    lo = hi;
  }
  return acc / cplx(0.0, kTwoPi) + std::log(std::log(n));
}

CauchyMachinery CauchyMachinery::build(double mu, double s0, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(mu > 0 && mu < 2)) throw std::domain_error("machinery: mu outside (0,2)");
  if (!(s0 > 0)) throw std::domain_error("machinery: requires s0 > 0 (line-zero regime)");
  CauchyMachinery m;
  m.mu_ = mu;
  m.s0_ = s0;
  m.cfg_ = cfg;
  m.w_plus_ = cplx(-std::exp(kTwoPi * s0), 0.0);
  m.w_minus_ = cplx(-std::exp(-kTwoPi * s0), 0.0);

  // master grid on x in [1e-8, 1e12]
  const int n = 20 * cfg.grid_points_per_decade + 1;
  m.ln_a_.kind = GridKind::coast_t;
  m.ln_a_.grid.resize(n);
  m.ln_a_.values.resize(n);
  m.max_abs_arg_ = 0.0;
  m.min_abs_a_ = 1e300;
  double prev_arg = 0.0;
  for (int i = 0; i < n; ++i) {
    const double lg = -8.0 + 20.0 * i / (n - 1);
    const double x = std::pow(10.0, lg);
    const cplx lna = m.ln_a_sigma(std::log(x) / kTwoPi);
    m.ln_a_.grid[i] = x;
    m.ln_a_.values[i] = lna;
    m.max_abs_arg_ = std::max(m.max_abs_arg_, std::abs(lna.imag()));
    m.min_abs_a_ = std::min(m.min_abs_a_, std::exp(lna.real()));
    if (i > 0 && std::abs(lna.imag() - prev_arg) >= kPi)
      throw numeric_error("machinery: phase step >= pi, grid too coarse");
    prev_arg = lna.imag();
  }
  if (m.max_abs_arg_ >= kPi - 1e-9)
    throw numeric_error("machinery: |arg a| reached pi, principal branch invalid");
  if (!(m.min_abs_a_ > 0)) throw numeric_error("machinery: a vanished on the grid");

  // tail coefficient: fit arg a(x) ~ c / ln x over the last decade
  {
    double acc = 0.0;
    int cnt = 0;
    for (int i = 0; i < n; ++i) {
      const double x = m.ln_a_.grid[i];
      if (x >= 1e11) {
        acc += m.ln_a_.values[i].imag() * std::log(x);
        ++cnt;
      }
    }
    m.tail_coeff_ = acc / cnt;
  }
  // the same fit far out in the log coordinate (diagnostic for the asymptote)
  {
    double acc = 0.0;
    const int cnt = 33;
    for (int i = 0; i < cnt; ++i) {
      const double sig = 300.0 + static_cast<double>(i) / (cnt - 1);
      acc += m.ln_a_sigma(sig).imag() * (kTwoPi * sig);
    }
    m.tail_ext_ = acc / cnt;
  }
  // total argument increment: arg a -> 0 only like 1/(2 sigma), so evaluate far out
  {
    const double Sigma = 5000.0;
    // continuity guard between grid edge and the far evaluation points
    for (double sig : {10.0, 30.0, 100.0, 300.0, 1000.0, 3000.0, Sigma})
      if (std::abs(m.ln_a_sigma(sig).imag()) >= kPi ||
          std::abs(m.ln_a_sigma(-sig).imag()) >= kPi)
        throw numeric_error("machinery: principal branch invalid in the far tail");
    m.arg_increment_ = m.ln_a_sigma(Sigma).imag() - m.ln_a_sigma(-Sigma).imag();
  }

  m.k_wp_ = m.k_reg(m.w_plus_);
  m.k_wm_ = m.k_reg(m.w_minus_);

  // contour caches for residue extraction
  const int nodes = 64;
  for (ContourCache* cc : {&m.contour_plus_, &m.contour_minus_}) {
    const cplx center = (cc == &m.contour_plus_) ? m.w_plus_ : m.w_minus_;
    cc->center = center;
    cc->radius = 0.25 * std::min(std::abs(center), std::abs(m.w_plus_ - m.w_minus_));
    cc->nodes.resize(nodes);
    cc->k_values.resize(nodes);
    for (int j = 0; j < nodes; ++j) {
      const double th = kTwoPi * j / nodes;
      cc->nodes[j] = center + cc->radius * std::polar(1.0, th);
      cc->k_values[j] = m.k_reg(cc->nodes[j]);
    }
  }
  return m;
}

CauchyMachinery make_machinery(double mu, const constants::CriticalConstants& cc,
                               const QuadratureConfig& cfg) {
  if (constants::classify(mu, cc) != Regime::RealLineZeros)
    throw std::domain_error("machinery requires the RealLineZeros regime");
  const double s0 = zeros::s0_of_mu(mu, cc, cfg);
  return CauchyMachinery::build(mu, s0, cfg);
}

}  // namespace tms::cauchy
