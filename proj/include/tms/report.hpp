#pragma once

#include <string>
#include <vector>

#include "tms/config.hpp"
#include "tms/constants.hpp"
#include "tms/types.hpp"

namespace tms::report {

/// One verified identity: name, the identity it pins down, the measured value
/// against its tolerance.
struct Check {
  std::string name;
  std::string anchor;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string note;
  int criterion = 0;  // acceptance criterion this check belongs to (0 = extra)
};

struct VerificationReport {
  std::vector<Check> checks;
  bool overall = false;
  constants::CriticalConstants cc{};
};

struct VerifyOptions {
  QuadratureConfig cfg{};
  // default sample points per regime; the regime-dependent lists are filled
  // from the computed constants when left empty
  std::vector<double> mu_self_adjoint{0.5, 1.2, 1.7};
  std::vector<double> mu_imag_pair{};                      // mu0 + {1/4, 1/2, 3/4}(mu1-mu0)
  std::vector<double> mu_line{1.87, 2.0 / 1.05, 1.95};
  std::vector<cplx> betas{{0.0, 1.0},
                          std::polar(1.0, 0.7),
                          std::polar(1.0, 2.4),
                          std::polar(1.0, 4.0)};
  std::string filter;       // substring filter on check names; empty = all
  unsigned seed = 20230817; // drives every "random" sample deterministically
};

/// Runs the full property suite; overall = conjunction of check statuses.
VerificationReport verify_all(const VerifyOptions& opt);

/// Max relative error between the quadrature and the closed form of the
/// resolvent kernel identity, over the (s, psi) grid.
double verify_5_38(const std::vector<double>& s_grid, const std::vector<double>& psi_grid,
                   const QuadratureConfig& cfg);

/// Writes the boundary-curve data (mu, sqrt term, q0, q1) as CSV or JSON and a
/// JSON sidecar (path + ".json") with the two crossing abscissae.
void emit_figure1(const std::vector<double>& mu_grid, const std::string& path,
                  const std::string& format, const QuadratureConfig& cfg);

std::string format_report_json(const VerificationReport& rep, const QuadratureConfig& cfg);

}  // namespace tms::report
