// Drives the installed CLI binary end to end: exit codes, JSON shapes, CSV
// headers, byte stability, config-file merging.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

int g_failures = 0;

#define EXPECT(cond, what)                                              \
  do {                                                                  \
    if (!(cond)) {                                                      \
      std::cerr << "[FAIL] " << __LINE__ << ": " << what << "\n";       \
      ++g_failures;                                                     \
    }                                                                   \
  } while (0)

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& cmd) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return {-1, ""};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int st = pclose(p);
  return {WEXITSTATUS(st), out};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: tms_cli_check <path-to-tms1>\n";
    return 2;
  }
  const std::string bin = argv[1];

  {  // constants: values and byte stability
    const auto r1 = run(bin + " constants");
    const auto r2 = run(bin + " constants");
    EXPECT(r1.code == 0, "constants exit code");
    EXPECT(r1.out == r2.out, "constants output is byte-stable");
    const json j = json::parse(r1.out);
    EXPECT(std::abs(j["data"]["mu0"].get<double>() - 1.84977202167) < 1e-9, "mu0 value");
    EXPECT(std::abs(j["data"]["mu1"].get<double>() - 1.86307902398) < 1e-9, "mu1 value");
    EXPECT(j["data"]["m1"].get<double>() < j["data"]["m0"].get<double>(), "m1 < m0");
  }

  {  // zeros in each regime
    const json line = json::parse(run(bin + " zeros --m 0.05").out);
    EXPECT(line["meta"]["regime"] == "real_line_zeros", "line regime");
    EXPECT(std::abs(line["data"]["s0"].get<double>() - 1.08581152259) < 1e-9, "s0 value");
    EXPECT(line["data"]["winding"] == 2, "line winding");
    const json sa = json::parse(run(bin + " zeros --mu 0.9").out);
    EXPECT(sa["meta"]["regime"] == "self_adjoint", "self-adjoint regime");
    EXPECT(sa["data"]["zeros"].is_null(), "no zeros below mu0");
    EXPECT(sa["data"]["winding"] == 0, "zero winding below mu0");
  }

  {  // ladder (the documented example shape) and its CSV twin
    const auto r =
        run(bin + " ladder --m 0.05 --beta 0,1 --n-min -3 --n-max 5 --eps 1");
    EXPECT(r.code == 0, "ladder exit");
    const json j = json::parse(r.out);
    EXPECT(j["data"].size() == 9, "ladder entry count");
    const double l0 = j["data"][3]["lambda_n"].get<double>();
    const double e0 = j["data"][3]["h_level"].get<double>();
    EXPECT(std::abs(e0 + 1.0 / (l0 * l0)) < 1e-12 * std::abs(e0), "energy map value");
    EXPECT(j["data"][0]["bracket"].size() == 2, "bracket bounds present");
    EXPECT(!j["meta"]["notes"].get<std::string>().empty(), "adjudication note present");
    const auto csv = run(bin + " ladder --m 0.05 --beta 0,1 --format csv");
    EXPECT(csv.out.rfind("n,lambda_n,bracket_lo,bracket_hi,h_level\n", 0) == 0,
           "ladder csv header");
  }

  {  // detector cross-check and hlevels
    const auto det = run(bin + " detect --m 0.05 --beta-angle 0.7 --n-min -1 --n-max 1");
    EXPECT(det.code == 0, "detect exit");
    const json j = json::parse(det.out);
    EXPECT(j["data"]["count_matches"].get<bool>(), "detector count");
    EXPECT(j["data"]["max_rel_dev"].get<double>() < 1e-6, "detector deviation");
    const auto hl = run(bin + " hlevels --m 0.05 --beta 0,1 --eps 2 --n-min 0 --n-max 3");
    const json h = json::parse(hl.out);
    const double r10 = h["data"][1]["energy"].get<double>() /
                       h["data"][0]["energy"].get<double>();
    const json zj = json::parse(run(bin + " zeros --m 0.05").out);
    const double s0 = zj["data"]["s0"].get<double>();
    EXPECT(std::abs(r10 - std::exp(-2 * 3.14159265358979 / s0)) < 1e-9, "energy ratio");
  }

  {  // eigenfunction traces (CSV)
    const auto r = run(bin +
                       " eigenfunction --m 0.05 --lambda 0,1 --t-min 0.1 --t-max 10 "
                       "--points 5 --format csv");
    EXPECT(r.code == 0, "eigenfunction exit");
    EXPECT(r.out.rfind("t,abs2_upper,abs2_lower,phase_upper,phase_lower\n", 0) == 0,
           "trace csv header");
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    EXPECT(lines == 6, "trace row count");
  }

  {  // config file merge; flags win
    std::ofstream f("cli_cfg.json");
    f << R"({"m": 0.05, "beta": [0,1], "n_min": 0, "n_max": 2})";
    f.close();
    const json a = json::parse(run(bin + " ladder --config cli_cfg.json").out);
    EXPECT(a["data"].size() == 3, "config n-range");
    const json b = json::parse(run(bin + " ladder --config cli_cfg.json --n-max 4").out);
    EXPECT(b["data"].size() == 5, "flag overrides config");
    std::remove("cli_cfg.json");
  }

  {  // curve emits the data file plus the crossings sidecar
    const auto r = run(bin + " curve --points 9 --mu-min 0.2 --mu-max 1.8 --format csv "
                             "--out cli_curve.csv");
    EXPECT(r.code == 0, "curve exit");
    std::ifstream f("cli_curve.csv");
    std::string header;
    std::getline(f, header);
    EXPECT(header == "mu,sqrt_term,q0,q1", "curve csv header");
    std::ifstream side("cli_curve.csv.json");
    EXPECT(side.good(), "curve sidecar exists");
    json sj;
    side >> sj;
    EXPECT(sj.contains("mu0") && sj.contains("mu1"), "sidecar crossings");
    std::remove("cli_curve.csv");
    std::remove("cli_curve.csv.json");
  }

  {  // verify subset passes and reports schema-shaped JSON
    const auto r = run(bin + " verify --check kernel-identity");
    EXPECT(r.code == 0, "verify subset exit");
    const json j = json::parse(r.out);
    EXPECT(j["data"]["checks"].size() == 1, "verify subset size");
    EXPECT(j["data"]["checks"][0]["status"] == "pass", "subset status");
  }

  {  // usage errors
    EXPECT(run(bin + " nosuchcommand").code == 2, "unknown subcommand exit 2");
    EXPECT(run(bin + " zeros").code == 2, "missing mass exit 2");
    EXPECT(run(bin + " zeros --mu 1.9 --m 0.05").code == 2, "exclusive flags exit 2");
    EXPECT(run(bin + " constants --format csv").code == 2, "constants csv rejected");
    EXPECT(run(bin + " ladder --m 0.5 --beta 0,1").code == 1, "wrong regime exit 1");
  }

  if (g_failures) {
    std::cerr << g_failures << " CLI check(s) failed\n";
    return 1;
  }
  std::puts("all CLI checks passed");
  return 0;
}
