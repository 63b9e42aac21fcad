#include <doctest.h>

#include <random>

#include "tms/constants.hpp"
#include "tms/mellin.hpp"
#include "tms/special.hpp"

using namespace tms;

namespace {
const QuadratureConfig cfg{};

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, double(i) / (n - 1));
  return g;
}
}  // namespace

TEST_CASE("exp(-r) transforms to Gamma(3/2 - is)/sqrt(2 pi)") {
  std::vector<double> pts{-5.0, -2.0, -0.5, 0.0, 0.5, 2.0, 5.0};
  const auto f = mellin::forward([](double r) { return cplx(std::exp(-r), 0.0); }, pts, cfg);
  for (size_t i = 0; i < pts.size(); ++i) {
    const cplx exact = special::gamma(cplx(1.5, -pts[i])) / std::sqrt(kTwoPi);
    CHECK(std::abs(f.values[i] - exact) < 1e-9 * std::abs(exact) + 1e-12);
  }
}

TEST_CASE("log-gaussian pair is exact") {
  // phi = exp(-(ln r)^2)  ->  f(s) = sqrt(pi) exp((3/2 - is)^2/4) / sqrt(2 pi)
  std::vector<double> pts{-3.0, -1.0, 0.0, 1.2, 3.0};
  const auto f = mellin::forward(
      [](double r) {
        const double u = std::log(r);
        return cplx(std::exp(-u * u), 0.0);
      },
      pts, cfg);
  for (size_t i = 0; i < pts.size(); ++i) {
    const cplx z = cplx(1.5, -pts[i]);
    const cplx exact = std::sqrt(kPi) * std::exp(0.25 * z * z) / std::sqrt(kTwoPi);
    CHECK(std::abs(f.values[i] - exact) < 1e-9 * std::abs(exact));
  }
}

TEST_CASE("Parseval: the exp(-r) norm in both pictures equals 1/2") {
  // |phi|^2 r^2 dr integrates to 1/4
  const auto nr = mellin::norm_radial([](double r) { return cplx(std::exp(-r), 0.0); }, cfg);
  CHECK(nr * nr == doctest::Approx(0.25).epsilon(1e-10));
  const auto f = mellin::forward([](double r) { return cplx(std::exp(-r), 0.0); },
                                 mellin::default_s_grid(), cfg);
  const double nl = mellin::norm_line(f);
  CHECK(nl * nl == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("linearity of the transform") {
  std::vector<double> pts{-1.0, 0.3, 2.0};
  auto p1 = [](double r) { return cplx(std::exp(-r), 0.0); };
  auto p2 = [](double r) { return cplx(r * std::exp(-r * r), 0.0); };
  const auto f1 = mellin::forward(p1, pts, cfg);
  const auto f2 = mellin::forward(p2, pts, cfg);
  const auto fs = mellin::forward([&](double r) { return p1(r) + p2(r); }, pts, cfg);
  for (size_t i = 0; i < pts.size(); ++i)
    CHECK(std::abs(fs.values[i] - f1.values[i] - f2.values[i]) < 1e-11);
}

TEST_CASE("round trips recover the input") {
  const auto s_grid = mellin::default_s_grid();
  const auto r_grid = log_grid(0.1, 8.0, 21);
  for (auto phi : {mellin::RadialFn([](double r) { return cplx(std::exp(-r), 0.0); }),
                   mellin::RadialFn([](double r) { return cplx(r * std::exp(-r * r), 0.0); })}) {
    const auto f = mellin::forward(phi, s_grid, cfg);
    const auto back = mellin::inverse(f, r_grid);
    double peak = 0.0;
    for (double r : r_grid) peak = std::max(peak, std::abs(phi(r)));
    for (size_t i = 0; i < r_grid.size(); ++i)
      CHECK(std::abs(back.values[i] - phi(r_grid[i])) < 1e-7 * peak);
  }
}

TEST_CASE("sampled input follows the callable route") {
  SampledFunction phi;
  phi.kind = GridKind::radial_r;
  for (int i = 0; i < 4000; ++i) {
    const double r = 1e-4 * std::pow(40.0 / 1e-4, i / 3999.0);
    phi.grid.push_back(r);
    phi.values.push_back(std::exp(-r));
  }
  std::vector<double> pts{-1.0, 0.0, 2.0};
  const auto fs = mellin::forward(phi, pts, cfg);
  const auto fc = mellin::forward([](double r) { return cplx(std::exp(-r), 0.0); }, pts, cfg);
  for (size_t i = 0; i < pts.size(); ++i)
    CHECK(std::abs(fs.values[i] - fc.values[i]) < 1e-4);
}

TEST_CASE("inverse of zero is zero") {
  SampledFunction f;
  f.grid = {-2.0, -1.0, 0.0, 1.0, 2.0};
  f.values.assign(5, cplx(0.0, 0.0));
  const auto back = mellin::inverse(f, {0.5, 1.0, 2.0});
  for (const auto& v : back.values) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("non-decaying input is rejected") {
  CHECK_THROWS_AS(
      mellin::forward([](double) { return cplx(1.0, 0.0); }, {0.0}, cfg),
      std::domain_error);
}

TEST_CASE("strip <-> cut plane coordinate maps") {
  const double s0 = 0.8;
  const auto wz = mellin::strip_to_plane(StripPoint(cplx(s0, 0.5)));
  CHECK(wz.w.real() == doctest::Approx(-std::exp(kTwoPi * s0)).epsilon(1e-13));
  const auto w0 = mellin::strip_to_plane(StripPoint(cplx(0.0, 0.0)));
  REQUIRE(w0.coast.has_value());
  CHECK(*w0.coast == Coast::upper);
  CHECK(w0.w == cplx(1.0, 0.0));
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ux(-2.0, 2.0), uy(1e-3, 1.0 - 1e-3);
  for (int i = 0; i < 20; ++i) {
    const cplx z(ux(rng), uy(rng));
    const auto back = mellin::plane_to_strip(mellin::strip_to_plane(StripPoint(z)));
    CHECK(std::abs(back.z - z) < 1e-12);
  }
}

TEST_CASE("quadratic form: zero input, positivity below mu1, negativity above") {
  const auto cc = constants::compute(cfg);
  std::vector<double> s;
  for (int i = -160; i <= 160; ++i) s.push_back(i / 16.0);

  SampledFunction zero;
  zero.grid = s;
  zero.values.assign(s.size(), cplx(0.0, 0.0));
  CHECK(mellin::quadratic_form_m0(zero, 1.0, cfg) == 0.0);

  std::mt19937 rng(9);
  std::uniform_real_distribution<double> uc(-1.0, 1.0);
  for (double mu : {0.7, cc.mu0 + 0.5 * (cc.mu1 - cc.mu0)}) {
    for (int k = 0; k < 3; ++k) {
      SampledFunction F;
      F.grid = s;
      const double c = uc(rng);
      for (double x : s)
        F.values.push_back(std::exp(-(x - c) * (x - c)) * std::exp(cplx(0.0, 0.5 * x)));
      CHECK(mellin::quadratic_form_m0(F, mu, cfg) >= -1e-9);
    }
  }
  // concentrated near s = 0 where N(i/2) < 0 for mu > mu1
  SampledFunction F;
  F.grid = s;
  for (double x : s) F.values.push_back(std::exp(-x * x / 0.02));
  CHECK(mellin::quadratic_form_m0(F, 1.9, cfg) < 0.0);
}
