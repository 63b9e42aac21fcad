#include "tms/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "tms/kernels.hpp"
#include "tms/quadrature.hpp"

namespace tms::spectrum {

using cauchy::CauchyMachinery;
using eigen::EigenParams;
using eigen::PoleResidues;

ExtensionBeta ExtensionBeta::from_complex(cplx b) {
  const double m = std::abs(b);
  if (!(m > 0)) throw std::domain_error("beta must be nonzero");
  return {b / m};
}

ExtensionBeta ExtensionBeta::from_angle(double angle) { return {std::polar(1.0, angle)}; }

std::pair<cplx, double> gamma_eta(const ExtensionBeta& beta, double s0) {
  if (!(s0 > 0)) throw std::domain_error("gamma_eta: s0 must be positive");
  const double e = std::exp(-kPi * s0);  // scaled to stay finite for any s0
  const cplx ib = cplx(0.0, 1.0) * beta.beta;
  const cplx g = (e + ib) / (1.0 + ib * e);
  if (std::abs(std::abs(g) - 1.0) > 1e-14)
    throw numeric_error("gamma_eta: |gamma| deviates from 1");
  double eta = std::arg(g);
  if (eta <= 0) eta += kTwoPi;
  return {g, eta};
}

LadderResult ladder(const ExtensionBeta& beta, double s0, int n_min, int n_max) {
  if (n_min > n_max) throw std::invalid_argument("ladder: empty index range");
  const auto [g, eta] = gamma_eta(beta, s0);
  (void)g;
  LadderResult out;
  out.beta = beta;
  out.s0 = s0;
  out.eta = eta;
  out.ratio = std::exp(kPi / s0);
  out.lambda0 = -std::exp(-eta / (2.0 * s0));
  for (int n = n_min; n <= n_max; ++n) {
    const double expo = -eta / (2.0 * s0) + kPi * n / s0;
    if (std::abs(expo) > 700.0)
      throw std::domain_error("ladder: index out of double range");
    out.entries.push_back({n, -std::exp(expo)});
  }
  return out;
}

namespace {

// normalized determinant indicator: unit-modulus spiral whose zero phase marks
// the ladder; built from contour-extracted residues only
struct Indicator {
  const CauchyMachinery& mach;
  const cplx rhs_ratio;  // (res- at i + beta res- at -i) / (res+ at i + beta res+ at -i)

  Indicator(const ExtensionBeta& beta, const CauchyMachinery& m)
      : mach(m), rhs_ratio([&] {
          const PoleResidues ri =
              eigen::residues_contour(EigenParams::make(cplx(0, 1), m), m);
          const PoleResidues rmi =
              eigen::residues_contour(EigenParams::make(cplx(0, -1), m), m);
          return (ri.res_minus + beta.beta * rmi.res_minus) /
                 (ri.res_plus + beta.beta * rmi.res_plus);
        }()) {}

  cplx operator()(double lambda) const {
    const PoleResidues r = eigen::residues_contour(EigenParams::make(cplx(lambda, 0), mach), mach);
    return (r.res_plus / r.res_minus) * rhs_ratio;
  }
};

}  // namespace

ResolventSystem resolvent_system(double lambda, const ExtensionBeta& beta,
                                 const CauchyMachinery& mach,
                                 const std::function<cplx(double)>* source) {
  if (!(lambda < 0)) throw std::domain_error("resolvent_system: lambda must be negative");
  const EigenParams pl = EigenParams::make(cplx(lambda, 0.0), mach);
  const EigenParams pi_ = EigenParams::make(cplx(0.0, 1.0), mach);
  const EigenParams pmi = EigenParams::make(cplx(0.0, -1.0), mach);
  const PoleResidues rl = eigen::residues_contour(pl, mach);
  const PoleResidues ri = eigen::residues_contour(pi_, mach);
  const PoleResidues rmi = eigen::residues_contour(pmi, mach);

  ResolventSystem out;
  out.matrix[0][0] = rl.res_plus;
  out.matrix[0][1] = -(ri.res_plus + beta.beta * rmi.res_plus);
  out.matrix[1][0] = rl.res_minus;
  out.matrix[1][1] = -(ri.res_minus + beta.beta * rmi.res_minus);
  out.det = out.matrix[0][0] * out.matrix[1][1] - out.matrix[0][1] * out.matrix[1][0];

  if (source) {
    // L(w) = B(w) C(w) / (2 pi i lambda*), C(w) = int_0^inf B_+(x)^{-1} f(x)/(x-w) dx.
    // The Cauchy density is sampled on a fixed composite Gauss rule so the
    // expensive boundary values are computed once.
    const auto& cfg = mach.config();
    const double sig_lo = -2.5, sig_hi = 2.5;
    const int panels = 24, deg = 8;
    static const double gx[4] = {0.1834346424956498, 0.5255324099163290,
                                 0.7966664774136267, 0.9602898564975363};
    static const double gw[4] = {0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};
    std::vector<double> sig_nodes, wts;
    for (int p = 0; p < panels; ++p) {
      const double a = sig_lo + (sig_hi - sig_lo) * p / panels;
      const double b = sig_lo + (sig_hi - sig_lo) * (p + 1) / panels;
      for (int j = 0; j < deg / 2; ++j) {
        sig_nodes.push_back(0.5 * (a + b) - 0.5 * (b - a) * gx[j]);
        wts.push_back(0.5 * (b - a) * gw[j]);
        sig_nodes.push_back(0.5 * (a + b) + 0.5 * (b - a) * gx[j]);
        wts.push_back(0.5 * (b - a) * gw[j]);
      }
    }
    std::vector<cplx> dens(sig_nodes.size());
    for (size_t i = 0; i < sig_nodes.size(); ++i) {
      const double t = std::exp(kTwoPi * sig_nodes[i]);
      const cplx b_plus =
          eigen::b_lambda(CutPlanePoint(cplx(t, 0.0), Coast::upper), pl, mach);
      dens[i] = (*source)(t) / b_plus * kTwoPi * t;  // includes dx = 2 pi t dsigma
    }
    auto C_of = [&](cplx w) {
      cplx acc = 0.0;
      for (size_t i = 0; i < sig_nodes.size(); ++i)
        acc += wts[i] * dens[i] / (std::exp(kTwoPi * sig_nodes[i]) - w);
      return acc;
    };
    const cplx pref = 1.0 / (cplx(0.0, kTwoPi) * pl.lambda_star);
    // res_{w+} L = res_{w+} B * C(w+) / (2 pi i lambda*)
    const auto& cp = mach.contour_plus();
    cplx res_b = 0.0;
    for (size_t j = 0; j < cp.nodes.size(); ++j) {
      const cplx w = cp.nodes[j];
      const cplx bval = std::exp(pl.sigma() * log_cut(CutPlanePoint(w))) *
                        std::exp(cp.k_values[j]) / mach.h(CutPlanePoint(w));
      res_b += bval * (w - cp.center);
    }
    res_b /= static_cast<double>(cp.nodes.size());
    out.rhs_plus = -(res_b * C_of(mach.w_plus()) * pref);
    // res_{w-} L: contour quadrature; vanishes since B is analytic at w_-
    const auto& cm = mach.contour_minus();
    cplx res_l = 0.0;
    for (size_t j = 0; j < cm.nodes.size(); ++j) {
      const cplx w = cm.nodes[j];
      const cplx bval = std::exp(pl.sigma() * log_cut(CutPlanePoint(w))) *
                        std::exp(cm.k_values[j]) / mach.h(CutPlanePoint(w));
      res_l += bval * C_of(w) * pref * (w - cm.center);
    }
    out.rhs_minus = -(res_l / static_cast<double>(cm.nodes.size()));
    out.has_rhs = true;
    (void)cfg;
  }
  return out;
}

std::vector<double> detect_spectrum(const ExtensionBeta& beta, double lambda_min,
                                    double lambda_max, const CauchyMachinery& mach) {
  if (!(lambda_min < lambda_max && lambda_max < 0))
    throw std::domain_error("detect_spectrum: need lambda_min < lambda_max < 0");
  const Indicator ind(beta, mach);
  const double l_lo = std::log(-lambda_max), l_hi = std::log(-lambda_min);
  const double period = kPi / mach.s0();
  const int steps = std::max(48, static_cast<int>(24.0 * (l_hi - l_lo) / period));

  std::vector<double> found;
  cplx prev = ind(-std::exp(l_lo));
  double prev_l = l_lo;
  for (int i = 1; i <= steps; ++i) {
    const double l = l_lo + (l_hi - l_lo) * i / steps;
    const cplx cur = ind(-std::exp(l));
    if (std::abs(std::abs(cur) - 1.0) > 1e-6)
      throw numeric_error("detect_spectrum: indicator left the unit circle");
    if ((prev.imag() < 0) != (cur.imag() < 0) && prev.real() > 0 && cur.real() > 0) {
      double a = prev_l, b = l;
      double fa = ind(-std::exp(a)).imag();
      for (int it = 0; it < 120 && b - a > 1e-14; ++it) {
        const double c = 0.5 * (a + b);
        const double fc = ind(-std::exp(c)).imag();
        if ((fa < 0) == (fc < 0)) {
          a = c;
          fa = fc;
        } else {
          b = c;
        }
      }
      found.push_back(-std::exp(0.5 * (a + b)));
    }
    prev = cur;
    prev_l = l;
  }
  std::sort(found.begin(), found.end());
  return found;
}

BracketSet brackets(const LadderResult& lad, double mu) {
  BracketSet out;
  out.c = kernels::m1_symbol_sup(mu);
  const double c2 = 2.0 * out.c;
  for (const auto& e : lad.entries) out.brackets.push_back({e.lambda - c2, e.lambda + c2});
  // disjointness from index n0 on: |lambda_n| (ratio - 1) > 4c, monotone in n
  const double s0 = lad.s0, eta = lad.eta;
  const double thresh = 4.0 * out.c / (lad.ratio - 1.0);
  out.n0 = static_cast<int>(
      std::ceil((s0 / kPi) * (std::log(thresh) + eta / (2.0 * s0)) + 1e-12));
  for (size_t i = 0; i + 1 < lad.entries.size(); ++i) {
    // entries ascend in n; entry i+1 is deeper on the negative axis
    const double hi = lad.entries[i].lambda - c2;
    const double lo = lad.entries[i + 1].lambda + c2;
    if (lad.entries[i].n >= out.n0 && !(lo < hi))
      throw numeric_error("brackets: expected disjoint intervals past n0");
    out.gaps.push_back({lo, hi});
  }
  return out;
}

double h_level(double lambda, double eps) {
  if (lambda == 0.0) throw std::domain_error("h_level: lambda must be nonzero");
  if (eps == 0.0) throw std::domain_error("h_level: eps must be nonzero");
  const double q = lambda / eps;
  return -1.0 / (q * q);
}

}  // namespace tms::spectrum
