#pragma once

#include <array>
#include <functional>
#include <vector>

#include "tms/cauchy.hpp"
#include "tms/eigen.hpp"
#include "tms/types.hpp"

namespace tms::spectrum {

/// Unit-modulus extension parameter; normalized exactly on construction.
struct ExtensionBeta {
  cplx beta;
  static ExtensionBeta from_complex(cplx b);
  static ExtensionBeta from_angle(double angle);
};

/// gamma = (e^{-pi s0} + i beta)/(1 + i beta e^{-pi s0}); |gamma| = 1, and
/// eta = arg gamma normalized to (0, 2pi].
std::pair<cplx, double> gamma_eta(const ExtensionBeta& beta, double s0);

struct LadderEntry {
  int n;
  double lambda;
};

/// Two-sided geometric ladder lambda_n = -e^{-eta/(2 s0)} e^{(pi/s0) n};
/// consecutive ratio e^{pi/s0}.
struct LadderResult {
  ExtensionBeta beta;
  double s0;
  double eta;
  double lambda0;
  double ratio;
  std::vector<LadderEntry> entries;
};

LadderResult ladder(const ExtensionBeta& beta, double s0, int n_min, int n_max);

/// Homogeneous part of the 2x2 residue system determining the resolvent, plus
/// (optionally) the right side built from a source term f(t).
struct ResolventSystem {
  std::array<std::array<cplx, 2>, 2> matrix;
  cplx det;
  bool has_rhs = false;
  cplx rhs_plus;   // -res_{w+} L
  cplx rhs_minus;  // -res_{w-} L (zero: B is analytic at w_-)
};

ResolventSystem resolvent_system(double lambda, const ExtensionBeta& beta,
                                 const cauchy::CauchyMachinery& mach,
                                 const std::function<cplx(double)>* source = nullptr);

/// Zeros of the (phase-normalized) determinant on [lambda_min, lambda_max],
/// located by sign-change bracketing on Im of the normalized indicator with
/// Re > 0; ascending order (most negative first).
std::vector<double> detect_spectrum(const ExtensionBeta& beta, double lambda_min,
                                    double lambda_max,
                                    const cauchy::CauchyMachinery& mach);

struct BracketSet {
  double c;  // norm bound of the bounded perturbation (symbol sup)
  std::vector<std::array<double, 2>> brackets;  // (lambda_n - 2c, lambda_n + 2c)
  std::vector<std::array<double, 2>> gaps;      // (lambda_{n+1} + 2c, lambda_n - 2c)
  int n0;  // least index from which consecutive brackets are disjoint
};

BracketSet brackets(const LadderResult& lad, double mu);

/// Three-body energy of a spectral point: -(lambda/eps)^{-2}.
double h_level(double lambda, double eps);

}  // namespace tms::spectrum
