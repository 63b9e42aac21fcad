#include <doctest.h>

#include <random>

#include "tms/spectrum.hpp"

using namespace tms;
using spectrum::ExtensionBeta;

namespace {
const QuadratureConfig cfg{};

const cauchy::CauchyMachinery& mach() {
  static const auto m = [] {
    const auto cc = constants::compute(cfg);
    return cauchy::make_machinery(1.87, cc, cfg);
  }();
  return m;
}
}  // namespace

TEST_CASE("extension parameter is normalized on construction") {
  CHECK(std::abs(std::abs(ExtensionBeta::from_complex(cplx(3.0, -4.0)).beta) - 1.0) <
        1e-16);
  CHECK_THROWS_AS(ExtensionBeta::from_complex(cplx(0.0, 0.0)), std::domain_error);
}

TEST_CASE("gamma lies on the unit circle; beta = i gives eta = pi") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> ua(0.0, kTwoPi);
  for (int i = 0; i < 100; ++i) {
    const auto [g, eta] = spectrum::gamma_eta(ExtensionBeta::from_angle(ua(rng)), 0.7);
    CHECK(std::abs(std::abs(g) - 1.0) < 1e-14);
    CHECK(eta > 0.0);
    CHECK(eta <= kTwoPi);
  }
  const auto [g, eta] = spectrum::gamma_eta(ExtensionBeta::from_complex(cplx(0, 1)), 0.83);
  CHECK(std::abs(g - cplx(-1.0, 0.0)) < 1e-14);
  CHECK(eta == doctest::Approx(kPi).epsilon(1e-14));
  // large s0 must not overflow
  CHECK(std::abs(std::abs(spectrum::gamma_eta(ExtensionBeta::from_angle(1.0), 500.0).first) -
                 1.0) < 1e-14);
}

TEST_CASE("eta moves continuously with the extension parameter") {
  const double s0 = mach().s0();
  double prev = spectrum::gamma_eta(ExtensionBeta::from_angle(0.0), s0).second;
  double total = 0.0;
  const int n = 720;
  for (int i = 1; i <= n; ++i) {
    const double eta = spectrum::gamma_eta(ExtensionBeta::from_angle(kTwoPi * i / n), s0).second;
    double d = eta - prev;
    if (d > kPi) d -= kTwoPi;
    if (d < -kPi) d += kTwoPi;
    CHECK(std::abs(d) < 0.2);
    CHECK(d > 0.0);  // strictly monotone along the circle
    total += d;
    prev = eta;
  }
  CHECK(std::abs(total - kTwoPi) < 1e-10);  // one full monotone turn per beta loop
}

TEST_CASE("ladder: ratio, extension condition, reindexing invariance") {
  const double s0 = mach().s0();
  const auto beta = ExtensionBeta::from_angle(2.4);
  const auto lad = spectrum::ladder(beta, s0, -3, 3);
  const auto [g, eta] = spectrum::gamma_eta(beta, s0);
  CHECK(lad.lambda0 == doctest::Approx(-std::exp(-eta / (2 * s0))).epsilon(1e-15));
  for (size_t i = 0; i + 1 < lad.entries.size(); ++i) {
    CHECK(lad.entries[i + 1].lambda / lad.entries[i].lambda ==
          doctest::Approx(lad.ratio).epsilon(1e-12));
    CHECK(lad.entries[i + 1].lambda < lad.entries[i].lambda);  // all negative, deepening
  }
  for (const auto& e : lad.entries)
    CHECK(std::abs(std::exp(cplx(0.0, -2.0 * s0 * std::log(-e.lambda))) - g) < 1e-10);
  // shifting eta by a full turn only reindexes the set
  for (size_t i = 0; i + 1 < lad.entries.size(); ++i) {
    const double shifted =
        -std::exp(-(eta + kTwoPi) / (2 * s0) + kPi * (static_cast<int>(i) - 2) / s0);
    CHECK(shifted == doctest::Approx(lad.entries[i].lambda).epsilon(1e-12));
  }
  CHECK_THROWS_AS(spectrum::ladder(beta, s0, 2, 1), std::invalid_argument);
}

TEST_CASE("detector reproduces the ladder and sees nothing in a gap") {
  const auto beta = ExtensionBeta::from_angle(2.4);
  const auto lad = spectrum::ladder(beta, mach().s0(), -2, 2);
  const double hp = std::exp(0.5 * kPi / mach().s0());
  const auto det = spectrum::detect_spectrum(beta, lad.entries.back().lambda * hp,
                                             lad.entries.front().lambda / hp, mach());
  REQUIRE(det.size() == lad.entries.size());
  for (size_t i = 0; i < det.size(); ++i) {
    const double l0 = lad.entries[lad.entries.size() - 1 - i].lambda;
    CHECK(std::abs(det[i] - l0) < 1e-6 * std::abs(l0));
  }
  // a quarter-period window around the geometric midpoint contains no zero
  const double mid = -std::sqrt(lad.entries[2].lambda * lad.entries[3].lambda);
  const double qp = std::exp(0.125 * kPi / mach().s0());
  CHECK(spectrum::detect_spectrum(beta, mid * qp, mid / qp, mach()).empty());
}

TEST_CASE("resolvent system: determinant dips only on the ladder") {
  const auto beta = ExtensionBeta::from_angle(0.7);
  const auto lad = spectrum::ladder(beta, mach().s0(), 0, 1);
  const double on = lad.entries[0].lambda;
  const double off = -std::sqrt(lad.entries[0].lambda * lad.entries[1].lambda);
  const auto sys_on = spectrum::resolvent_system(on, beta, mach());
  const auto sys_off = spectrum::resolvent_system(off, beta, mach());
  const auto scale = [](const spectrum::ResolventSystem& s) {
    return std::abs(s.matrix[0][0] * s.matrix[1][1]) +
           std::abs(s.matrix[0][1] * s.matrix[1][0]);
  };
  CHECK(std::abs(sys_on.det) < 1e-8 * scale(sys_on));
  CHECK(std::abs(sys_off.det) > 1e-2 * scale(sys_off));
}

TEST_CASE("source term: no residue survives at the regular pole") {
  const auto beta = ExtensionBeta::from_angle(0.7);
  std::function<cplx(double)> f = [](double t) {
    const double sig = std::log(t) / kTwoPi;
    return cplx(std::exp(-4.0 * sig * sig), 0.0);
  };
  const auto sys = spectrum::resolvent_system(-2.5, beta, mach(), &f);
  REQUIRE(sys.has_rhs);
  CHECK(std::abs(sys.rhs_plus) > 0.0);
  CHECK(std::abs(sys.rhs_minus) < 1e-8 * std::abs(sys.rhs_plus));
}

TEST_CASE("brackets: geometry past n0 and the index's growth with s0") {
  const auto beta = ExtensionBeta::from_angle(1.0);
  const auto lad_small = spectrum::ladder(beta, 0.3846, -2, 14);
  const auto lad_large = spectrum::ladder(beta, 1.0858, -2, 14);
  const auto br_small = spectrum::brackets(lad_small, 1.87);
  const auto br_large = spectrum::brackets(lad_large, 2.0 / 1.05);
  CHECK(br_small.c == kTwoPi * kPi);
  for (size_t i = 0; i + 1 < lad_small.entries.size(); ++i) {
    if (lad_small.entries[i].n >= br_small.n0)
      CHECK(br_small.gaps[i][0] < br_small.gaps[i][1]);
  }
  // denser ladders (larger s0) separate later
  CHECK(br_small.n0 <= br_large.n0);
  CHECK(br_large.n0 < 40);
}

TEST_CASE("energy map") {
  CHECK(spectrum::h_level(1.0, 1.0) == -1.0);
  CHECK(spectrum::h_level(2.0, 1.0) == -0.25);
  CHECK_THROWS_AS(spectrum::h_level(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(spectrum::h_level(1.0, 0.0), std::domain_error);
  const auto lad = spectrum::ladder(ExtensionBeta::from_angle(0.7), 0.9, -3, 3);
  const double target = std::exp(-kTwoPi / 0.9);
  for (size_t i = 0; i + 1 < lad.entries.size(); ++i) {
    const double e0 = spectrum::h_level(lad.entries[i].lambda, 2.0);
    const double e1 = spectrum::h_level(lad.entries[i + 1].lambda, 2.0);
    CHECK(e1 / e0 == doctest::Approx(target).epsilon(1e-12));
    CHECK(e1 > e0);  // climbing toward 0-
    CHECK(e1 < 0.0);
  }
}
