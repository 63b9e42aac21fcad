#include <doctest.h>

#include "tms/constants.hpp"
#include "tms/kernels.hpp"

using namespace tms;

namespace {
const QuadratureConfig cfg{};

const constants::CriticalConstants& cc() {
  static const auto c = constants::compute(cfg);
  return c;
}
}  // namespace

TEST_CASE("root functions have the expected signs at the interval ends") {
  CHECK(kernels::sqrt_term(1e-3) - kernels::q0(1e-3, cfg) > 0.9);
  CHECK(kernels::sqrt_term(1.9999) - kernels::q0(1.9999, cfg) < 0.0);
  CHECK(kernels::sqrt_term(1e-3) - kernels::q1_closed(1e-3) > 0.9);
  CHECK(kernels::sqrt_term(1.9999) - kernels::q1_closed(1.9999) < 0.0);
}

TEST_CASE("critical constants: values, ordering, stability") {
  // frozen from an independent high-precision root find (mpmath quadrature +
  // Brent bracketing)
  CHECK(cc().mu0 == doctest::Approx(1.8497720216743703).epsilon(1e-9));
  CHECK(cc().mu1 == doctest::Approx(1.8630790239832207).epsilon(1e-9));
  CHECK(cc().mu0 > 0.0);
  CHECK(cc().mu0 < cc().mu1);
  CHECK(cc().mu1 < 2.0);
  CHECK(cc().m1 < cc().m0);
  CHECK(cc().m0 == doctest::Approx(2.0 / cc().mu0 - 1.0).epsilon(1e-15));
  CHECK(cc().m1 == doctest::Approx(2.0 / cc().mu1 - 1.0).epsilon(1e-15));

  QuadratureConfig half = cfg;
  half.abs_tol *= 0.5;
  half.rel_tol *= 0.5;
  const auto c2 = constants::compute(half);
  CHECK(std::abs(c2.mu0 - cc().mu0) < 10 * cfg.abs_tol);
  CHECK(std::abs(c2.mu1 - cc().mu1) < 10 * cfg.abs_tol);
}

TEST_CASE("mass <-> mu conversions are mutually inverse") {
  for (double m : {0.01, 0.05, 0.5, 3.0, 100.0}) {
    const auto mp = MassParams::from_m(m);
    CHECK(MassParams::from_mu(mp.mu).m == doctest::Approx(m).epsilon(1e-14));
  }
  for (double mu : {0.1, 1.0, 1.86, 1.99}) {
    const auto mp = MassParams::from_mu(mu);
    CHECK(MassParams::from_m(mp.m).mu == doctest::Approx(mu).epsilon(1e-14));
  }
  CHECK_THROWS_AS(MassParams::from_m(-1.0), std::domain_error);
  CHECK_THROWS_AS(MassParams::from_mu(2.0), std::domain_error);
}

TEST_CASE("regime classification") {
  using constants::classify;
  CHECK(classify(0.5 * cc().mu0, cc()) == Regime::SelfAdjoint);
  CHECK(classify(0.5 * (cc().mu0 + cc().mu1), cc()) == Regime::ImaginaryPairZeros);
  CHECK(classify(0.5 * (cc().mu1 + 2.0), cc()) == Regime::RealLineZeros);
  CHECK(classify(cc().mu1 + 0.5 * cc().tol, cc()) == Regime::DoubleZero);
  CHECK(classify(cc().mu1 - 0.5 * cc().tol, cc()) == Regime::DoubleZero);
  CHECK_THROWS_AS(classify(2.5, cc()), std::domain_error);
}
