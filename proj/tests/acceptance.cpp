// Acceptance gate: runs the full verification suite and prints one line per
// criterion. Exit code is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <vector>

#include "tms/report.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();

  tms::report::VerifyOptions opt;
  const auto rep = tms::report::verify_all(opt);

  static const char* kTitles[14] = {
      nullptr,
      "critical constants converge and are stable",
      "zero residuals, pairing and windings",
      "log-symbol suite: increment, tail coefficient, coast winding",
      "Plemelj boundary values of the regularized transform",
      "eigenfunction functional equation on the cut",
      "closed form of |G|^2 and the coast traces",
      "deficiency-norm equality",
      "spectrum oracle: determinant zeros reproduce the ladder",
      "kernel-identity quadrature vs closed form",
      "Mellin unitarity, round trip and the Gamma pair",
      "positivity, regime signs and the saddle",
      "brackets past n0 and the accumulating energy map",
      "ladder-constant adjudication by the detector"};

  std::map<int, std::vector<const tms::report::Check*>> by_criterion;
  for (const auto& c : rep.checks) by_criterion[c.criterion].push_back(&c);

  bool all_pass = true;
  for (int k = 1; k <= 13; ++k) {
    bool pass = true;
    double worst = 0.0, tol = 0.0;
    for (const auto* c : by_criterion[k]) {
      pass = pass && c->pass;
      if (!c->pass || worst == 0.0) {
        worst = c->measured;
        tol = c->tolerance;
      }
    }
    all_pass = all_pass && pass;
    std::printf("[%s] criterion %2d: %s (measured=%.3g, tol=%.3g)\n",
                pass ? "PASS" : "FAIL", k, kTitles[k], worst, tol);
    for (const auto* c : by_criterion[k])
      if (!c->pass)
        std::printf("       failing check: %s  measured=%.6g tol=%.3g  %s\n",
                    c->name.c_str(), c->measured, c->tolerance, c->note.c_str());
  }
  for (const auto* c : by_criterion[0])
    std::printf("[%s] extra: %s (measured=%.3g, tol=%.3g)\n", c->pass ? "PASS" : "FAIL",
                c->name.c_str(), c->measured, c->tolerance);

  const double secs =
      std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count() /
      1000.0;
  std::printf("%s in %.1f s (mu0=%.12f, mu1=%.12f)\n",
              all_pass ? "all criteria passed" : "SOME CRITERIA FAILED", secs, rep.cc.mu0,
              rep.cc.mu1);
  return all_pass ? 0 : 1;
}
