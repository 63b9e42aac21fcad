#pragma once

#include "tms/types.hpp"

namespace tms::special {

/// Gamma function for complex argument (Lanczos, g = 7, 9 terms); used by the
/// Mellin-pair checks.
inline cplx gamma(cplx z) {
  static const double c[9] = {0.99999999999980993,     676.5203681218851,
                              -1259.1392167224028,     771.32342877765313,
                              -176.61502916214059,     12.507343278686905,
                              -0.13857109526572012,    9.9843695780195716e-6,
                              1.5056327351493116e-7};
  if (z.real() < 0.5)
    return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
  z -= 1.0;
  cplx x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
  const cplx t = z + 7.5;
  return std::sqrt(kTwoPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace tms::special
