#include "tms/eigen.hpp"

#include <cmath>

#include "tms/kernels.hpp"
#include "tms/quadrature.hpp"

namespace tms::eigen {

using cauchy::CauchyMachinery;

EigenParams EigenParams::make(cplx lambda, const CauchyMachinery& mach) {
  double th = std::arg(lambda);
  if (th <= 0) th += kTwoPi;
  if (lambda == cplx(0.0, 0.0) || (lambda.imag() == 0.0 && lambda.real() > 0.0))
    throw std::domain_error("lambda must lie off the positive semiaxis");
  EigenParams p;
  p.lambda = lambda;
  p.theta = th;
  p.mu = mach.mu();
  p.s0 = mach.s0();
  p.lambda_star = lambda / (kTwoPi * kPi * kernels::sqrt_term(p.mu));
  p.w_plus = mach.w_plus();
  p.w_minus = mach.w_minus();
  return p;
}

namespace {

cplx pow_cut(const CutPlanePoint& w, cplx sigma) { return std::exp(sigma * log_cut(w)); }

cplx g_from_k(const CutPlanePoint& w, const EigenParams& p, const CauchyMachinery& mach,
              cplx kval) {
  return pow_cut(w, p.sigma()) * std::exp(kval) / (mach.h(w) * (w.w - p.w_minus));
}

void check_off_poles(const cplx& w, const EigenParams& p) {
  if (std::abs(w - p.w_plus) < 1e-8 * std::abs(p.w_plus) ||
      std::abs(w - p.w_minus) < 1e-8 * std::abs(p.w_minus))
    throw std::domain_error("evaluation at a pole of G");
}

}  // namespace

cplx g_lambda(const CutPlanePoint& w, const EigenParams& p, const CauchyMachinery& mach) {
  check_off_poles(w.w, p);
  const cplx k = w.coast ? mach.k_boundary(w.w.real(), *w.coast) : mach.k_reg(w.w);
  return g_from_k(w, p, mach, k);
}

cplx g_boundary(double t, Coast side, const EigenParams& p, const CauchyMachinery& mach) {
  return g_boundary_with_pv(t, side, p, mach.k_pv(t), mach);
}

cplx g_boundary_with_pv(double t, Coast side, const EigenParams& p, cplx pv,
                        const CauchyMachinery& mach) {
  const cplx half = 0.5 * mach.ln_a_sigma(std::log(t) / kTwoPi);
  const cplx k = (side == Coast::upper) ? pv + half : pv - half;
  return g_from_k(CutPlanePoint(cplx(t, 0.0), side), p, mach, k);
}

cplx b_lambda(const CutPlanePoint& w, const EigenParams& p, const CauchyMachinery& mach) {
  if (std::abs(w.w - p.w_plus) < 1e-8 * std::abs(p.w_plus))
    throw std::domain_error("evaluation at the pole w_+ of B");
  const cplx k = w.coast ? mach.k_boundary(w.w.real(), *w.coast) : mach.k_reg(w.w);
  return pow_cut(w, p.sigma()) * std::exp(k) / mach.h(w);
}

namespace {

// int_{-inf}^0 Ln|N*(s)| / |s - w|^2 ds, via s = -e^{2 pi sigma}; the
// integrand has integrable log singularities at the symbol zeros s = w_±.
double half_line_integral(cplx w, const CauchyMachinery& mach) {
  const double s0 = mach.s0();
  const double alpha = 0.5 * kPi - std::asin(0.5 * mach.mu());
  const double Sig = std::max(25.0, 18.0 / alpha);
  auto f = [&](double sig) {
    const double e = std::exp(kTwoPi * sig);
    const double ln_abs = std::log(std::abs(mach.nstar_line_sigma(sig)));
    return ln_abs * kTwoPi * e / std::norm(cplx(-e, 0.0) - w);
  };
  const auto& cfg = mach.config();
  double acc = 0.0;
  acc += quad::tanh_sinh<double>(f, -Sig, -s0, cfg);
  acc += quad::tanh_sinh<double>(f, -s0, s0, cfg);
  acc += quad::tanh_sinh<double>(f, s0, Sig, cfg);
  return acc;
}

}  // namespace

double abs2_closed(cplx w, const EigenParams& p, const CauchyMachinery& mach) {
  check_off_poles(w, p);
  if (w == cplx(0.0, 0.0) || (w.imag() == 0.0 && w.real() >= 0.0))
    throw std::domain_error("abs2_closed: w must lie inside the cut plane");
  const double r = std::abs(w);
  double psi = std::arg(w);
  if (psi < 0) psi += kTwoPi;
  const double common = (kTwoPi * kTwoPi) * std::pow(r, p.theta / kPi) /
                        (std::abs(w - p.w_plus) * std::abs(w - p.w_minus));
  if (w.imag() == 0.0) {
    // psi = pi: algebraic form, valid outside [w_+, w_-]
    const double ns = mach.nstar_line_sigma(std::log(r) / kTwoPi);
    if (!(ns > 0))
      throw std::domain_error("abs2_closed: psi = pi form needs w outside (w_+, w_-)");
    return common * std::abs(p.lambda_star) / ns;
  }
  const double hl = half_line_integral(w, mach);
  double val = common * std::pow(std::abs(p.lambda_star), psi / kPi) *
               std::exp(-(w.imag() / kPi) * hl);
  if (psi > kPi) {
    const cplx ns = 1.0 - kernels::lambda_closed(log_cut(CutPlanePoint(w)) / kTwoPi, p.mu) /
                              kernels::sqrt_term(p.mu);
    val /= std::norm(ns);
  }
  return val;
}

Traces boundary_traces(const std::vector<double>& t_grid, const EigenParams& p,
                       const CauchyMachinery& mach) {
  Traces out;
  out.t = t_grid;
  const double ls2 = std::norm(p.lambda_star);
  for (double t : t_grid) {
    const double common = (kTwoPi * kTwoPi) * std::pow(t, p.theta / kPi) /
                          (std::abs(t - p.w_plus) * std::abs(t - p.w_minus));
    out.upper_abs2.push_back(common);
    const double nsl = std::abs(mach.nstar_lower_sigma(std::log(t) / kTwoPi));
    out.lower_abs2.push_back(common * ls2 / (nsl * nsl));
    const cplx pv = mach.k_pv(t);
    out.upper_phase.push_back(std::arg(g_boundary_with_pv(t, Coast::upper, p, pv, mach)));
    out.lower_phase.push_back(std::arg(g_boundary_with_pv(t, Coast::lower, p, pv, mach)));
  }
  return out;
}

std::pair<double, double> deficiency_norms(const CauchyMachinery& mach) {
  const cplx wp = mach.w_plus(), wm = mach.w_minus();
  const auto& cfg = mach.config();
  auto make = [&](double pow_coef) {
    // t^{pow} dt/t with t = e^{2 pi sigma}
    return quad::integrate<double>(
        [&](double sig) {
          const double t = std::exp(kTwoPi * sig);
          return (kTwoPi * kTwoPi) * std::exp(pow_coef * sig) /
                 (std::abs(t - wp) * std::abs(t - wm)) * kTwoPi;
        },
        -30.0, 30.0, cfg);
  };
  return {make(kPi), make(3.0 * kPi)};  // t^{1/2} and t^{3/2}
}

PoleResidues residues_contour(const EigenParams& p, const CauchyMachinery& mach) {
  PoleResidues out;
  auto run = [&](const cauchy::ContourCache& cc) {
    cplx acc = 0.0;
    const size_t n = cc.nodes.size();
    for (size_t j = 0; j < n; ++j) {
      const cplx w = cc.nodes[j];
      const cplx g = pow_cut(CutPlanePoint(w), p.sigma()) * std::exp(cc.k_values[j]) /
                     (mach.h(CutPlanePoint(w)) * (w - p.w_minus));
      acc += g * (w - cc.center);
    }
    return acc / static_cast<double>(n);
  };
  out.res_plus = run(mach.contour_plus());
  out.res_minus = run(mach.contour_minus());
  return out;
}

PoleResidues residues(const EigenParams& p, const CauchyMachinery& mach, double rel_tol) {
  const PoleResidues contour = residues_contour(p, mach);
  // shrinking-limit route: Neville extrapolation of (w - w_c) G(w) in the radius
  auto shrink = [&](cplx center) {
    const double r0 = 0.2 * std::min(std::abs(center), std::abs(p.w_plus - p.w_minus));
    std::vector<double> rs;
    std::vector<cplx> vals;
    for (int k = 0; k < 5; ++k) {
      const double r = r0 * std::pow(0.5, k);
      const cplx w = center + r * std::polar(1.0, 2.0 * kPi / 3.0);
      vals.push_back((w - center) * g_lambda(CutPlanePoint(w), p, mach));
      rs.push_back(r);
    }
    for (size_t m = 1; m < vals.size(); ++m)
      for (size_t i = vals.size() - 1; i >= m; --i)
        vals[i] = vals[i] + (vals[i] - vals[i - 1]) * rs[i] / (rs[i - m] - rs[i]);
    return vals.back();
  };
  const cplx sp = shrink(p.w_plus), sm = shrink(p.w_minus);
  if (std::abs(sp - contour.res_plus) > rel_tol * std::abs(contour.res_plus) ||
      std::abs(sm - contour.res_minus) > rel_tol * std::abs(contour.res_minus))
    throw numeric_error("residues: contour and shrinking-limit routes disagree");
  return contour;
}

namespace {

// sub-intervals of [lo, hi] in sigma = ln r / 2pi where the ray psi stays
// outside the disc |w - center| < rho
void cut_out_disc(std::vector<std::pair<double, double>>& segs, double psi, cplx center,
                  double rho) {
  const double R = std::abs(center);
  // |r e^{i psi} - center|^2 = r^2 - 2 r R cos(psi - arg) + R^2
  const double cosd = std::cos(psi - std::arg(center));
  const double disc = R * R * (cosd * cosd - 1.0) + rho * rho;
  if (disc <= 0) return;
  const double r1 = R * cosd - std::sqrt(disc), r2 = R * cosd + std::sqrt(disc);
  if (r2 <= 0) return;
  const double a = r1 > 0 ? std::log(r1) / kTwoPi : -1e9;
  const double b = std::log(r2) / kTwoPi;
  std::vector<std::pair<double, double>> out;
  for (auto [lo, hi] : segs) {
    if (b <= lo || a >= hi) {
      out.emplace_back(lo, hi);
      continue;
    }
    if (a > lo) out.emplace_back(lo, a);
    if (b < hi) out.emplace_back(b, hi);
  }
  segs = std::move(out);
}

}  // namespace

double membership_sup(const EigenParams& p, const CauchyMachinery& mach, int n_psi,
                      double rho_scale) {
  // ray-wise L2 integrals outside discs around w_±:
  //   int |G(r e^{i psi})|^2 dr / r  ->  2 pi int |G|^2 dsigma
  const double rho = rho_scale * std::min(std::abs(mach.w_minus()),
                                          std::abs(mach.w_plus() - mach.w_minus()));
  QuadratureConfig qcfg = mach.config();
  qcfg.abs_tol = 1e-8;
  qcfg.rel_tol = 1e-8;
  double sup = 0.0;
  for (int j = 0; j <= n_psi; ++j) {
    const double psi = kTwoPi * (j + 0.5) / (n_psi + 1);
    std::vector<std::pair<double, double>> segs{{-8.0, 8.0}};
    cut_out_disc(segs, psi, p.w_plus, rho);
    cut_out_disc(segs, psi, p.w_minus, rho);
    double acc = 0.0;
    for (auto [lo, hi] : segs)
      acc += quad::integrate<double>(
          [&](double sig) {
            const cplx w = std::polar(std::exp(kTwoPi * sig), psi);
            return std::norm(g_lambda(CutPlanePoint(w), p, mach)) * kTwoPi;
          },
          lo, hi, qcfg);
    sup = std::max(sup, acc);
  }
  return sup;
}

}  // namespace tms::eigen
