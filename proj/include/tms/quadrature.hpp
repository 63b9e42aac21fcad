#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

#include "tms/config.hpp"

namespace tms::quad {

namespace detail {

// Gauss-7 / Kronrod-15 pair on [-1,1].
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
double norm_of(const T& v) {
  if constexpr (std::is_same_v<T, std::complex<double>>)
    return std::abs(v);
  else
    return std::fabs(v);
}

template <typename F, typename T>
void gk15(const F& f, double a, double b, T& kronrod, double& err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  T fc = f(c);
  T resk = kWgk[7] * fc;
  T resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    T f1 = f(c - dx), f2 = f(c + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  kronrod = resk * h;
  err = norm_of<T>((resk - resg) * h);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod over [a,b]: worst-interval refinement with a global
/// interval budget. T is double or complex<double>.
template <typename T, typename F>
T integrate(const F& f, double a, double b, const QuadratureConfig& cfg) {
  if (a == b) return T{};
  struct Piece {
    double a, b, err;
    T val;
  };
  std::vector<Piece> pieces;
  const size_t budget = 8 * static_cast<size_t>(cfg.max_subdivisions);
  pieces.reserve(budget + 1);
  Piece first{a, b, 0.0, T{}};
  detail::gk15<F, T>(f, a, b, first.val, first.err);
  pieces.push_back(first);
  T total = first.val;
  double err_total = first.err;
  while (pieces.size() < budget) {
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * detail::norm_of<T>(total));
    if (err_total <= tol) break;
    size_t worst = 0;
    for (size_t i = 1; i < pieces.size(); ++i)
      if (pieces[i].err > pieces[worst].err) worst = i;
    Piece cur = pieces[worst];
    const double mid = 0.5 * (cur.a + cur.b);
    if (!(mid > cur.a && mid < cur.b)) break;  // interval exhausted
    Piece left{cur.a, mid, 0.0, T{}}, right{mid, cur.b, 0.0, T{}};
    detail::gk15<F, T>(f, left.a, left.b, left.val, left.err);
    detail::gk15<F, T>(f, right.a, right.b, right.val, right.err);
    total += left.val + right.val - cur.val;
    err_total += left.err + right.err - cur.err;
    pieces[worst] = left;
    pieces.push_back(right);
  }
  const double tol = std::max(cfg.abs_tol, cfg.rel_tol * detail::norm_of<T>(total));
  if (err_total > 1e3 * tol * std::max(1.0, detail::norm_of<T>(total)))
    throw numeric_error("quadrature did not converge on [" + std::to_string(a) + "," +
                        std::to_string(b) + "]");
  return total;
}

/// tanh-sinh rule over [a,b]; robust to integrable endpoint singularities.
template <typename T, typename F>
T tanh_sinh(const F& f, double a, double b, const QuadratureConfig& cfg) {
  const double c = 0.5 * (a + b), h0 = 0.5 * (b - a);
  const double tmax = 6.1;  // abscissae within ~1e-280 of the endpoints
  auto node = [&](double t, double& x, double& w) {
    const double s = std::sinh(t);
    const double ch = std::cosh(0.5 * kPi * s);
    x = c + h0 * std::tanh(0.5 * kPi * s);
    w = h0 * 0.5 * kPi * std::cosh(t) / (ch * ch);
  };
  double step = 0.5;
  double x, w;
  node(0.0, x, w);
  T sum = w * f(x);
  // level 0
  for (double t = step; t <= tmax; t += step) {
    node(t, x, w);
    if (x > a && x < b) sum += w * f(x);
    node(-t, x, w);
    if (x > a && x < b) sum += w * f(x);
  }
  T prev = sum * step;
  double prev_diff = 1e300;
  for (int level = 1; level <= 11; ++level) {
    step *= 0.5;
    T add{};
    for (double t = step; t <= tmax; t += 2 * step) {
      node(t, x, w);
      if (x > a && x < b) add += w * f(x);
      node(-t, x, w);
      if (x > a && x < b) add += w * f(x);
    }
    sum += add;
    T cur = sum * step;
    const double diff = detail::norm_of<T>(cur - prev);
    prev = cur;
    if (level >= 3) {
      if (diff <= std::max(cfg.abs_tol, cfg.rel_tol * detail::norm_of<T>(cur))) return cur;
      if (level >= 6 && diff > 0.25 * prev_diff) return cur;  // rounding floor reached
    }
    prev_diff = diff;
  }
  return prev;
}

}  // namespace tms::quad
