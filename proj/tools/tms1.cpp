// Command-line interface: critical constants, symbol zeros, boundary curves,
// eigenvalue ladders and their detector cross-check, three-body energy levels,
// adjoint-eigenfunction traces, and the verification suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tms/cauchy.hpp"
#include "tms/eigen.hpp"
#include "tms/kernels.hpp"
#include "tms/report.hpp"
#include "tms/spectrum.hpp"
#include "tms/zeros.hpp"

using json = nlohmann::json;
using namespace tms;

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct CommonOpts {
  std::optional<double> mu, m;
  std::optional<std::string> beta_str;
  std::optional<double> beta_angle;
  std::optional<double> eps_opt;
  std::optional<int> n_min_opt, n_max_opt;
  std::optional<double> t_min_opt, t_max_opt;
  std::optional<int> points_opt;
  std::optional<std::string> lambda_str;
  std::optional<std::string> format_opt;
  std::string out_path;
  std::string config_path;
  std::string check_filter;
  double mu_min = 0.05, mu_max = 1.95;
  QuadratureConfig cfg;

  // resolved values (config fills unset flags; defaults last)
  double eps = 1.0;
  int n_min = -3, n_max = 5;
  double t_min = 1e-3, t_max = 1e3;
  int points = 100;
  std::string format = "json";

  void resolve_defaults() {
    if (eps_opt) eps = *eps_opt;
    if (n_min_opt) n_min = *n_min_opt;
    if (n_max_opt) n_max = *n_max_opt;
    if (t_min_opt) t_min = *t_min_opt;
    if (t_max_opt) t_max = *t_max_opt;
    if (points_opt) points = *points_opt;
    if (format_opt) format = *format_opt;
  }
};

cplx parse_pair(const std::string& s, const char* what) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError(std::string(what) + " expects \"re,im\"");
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

// Flags win over config values: only unset options are filled from the file.
void load_config(CommonOpts& o, bool tol_abs_set, bool tol_rel_set) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw CLI::ValidationError("cannot open config " + o.config_path);
  json j;
  in >> j;
  auto fill = [&](const char* key, auto& opt) {
    using T = typename std::decay_t<decltype(opt)>::value_type;
    if (!opt && j.contains(key)) opt = j[key].template get<T>();
  };
  fill("mu", o.mu);
  fill("m", o.m);
  if (!o.beta_str && !o.beta_angle && j.contains("beta")) {
    if (j["beta"].is_array())
      o.beta_str = fmt17(j["beta"][0].get<double>()) + "," + fmt17(j["beta"][1].get<double>());
    else
      o.beta_str = j["beta"].get<std::string>();
  }
  fill("beta_angle", o.beta_angle);
  fill("lambda", o.lambda_str);
  fill("eps", o.eps_opt);
  fill("n_min", o.n_min_opt);
  fill("n_max", o.n_max_opt);
  fill("t_min", o.t_min_opt);
  fill("t_max", o.t_max_opt);
  fill("points", o.points_opt);
  fill("format", o.format_opt);
  if (o.out_path.empty() && j.contains("out")) o.out_path = j["out"].get<std::string>();
  if (!tol_abs_set && j.contains("abs_tol")) o.cfg.abs_tol = j["abs_tol"].get<double>();
  if (!tol_rel_set && j.contains("rel_tol")) o.cfg.rel_tol = j["rel_tol"].get<double>();
  if (j.contains("tail_x")) o.cfg.tail_cutoff_X = j["tail_x"].get<double>();
  if (j.contains("grid_per_decade"))
    o.cfg.grid_points_per_decade = j["grid_per_decade"].get<int>();
}

MassParams resolve_mass(const CommonOpts& o) {
  if (o.mu && o.m) throw CLI::ValidationError("--mu and --m are mutually exclusive");
  if (o.mu) return MassParams::from_mu(*o.mu);
  if (o.m) return MassParams::from_m(*o.m);
  throw CLI::ValidationError("one of --mu / --m is required");
}

spectrum::ExtensionBeta resolve_beta(const CommonOpts& o) {
  if (o.beta_str && o.beta_angle)
    throw CLI::ValidationError("--beta and --beta-angle are mutually exclusive");
  if (o.beta_str) return spectrum::ExtensionBeta::from_complex(parse_pair(*o.beta_str, "--beta"));
  if (o.beta_angle) return spectrum::ExtensionBeta::from_angle(*o.beta_angle);
  throw CLI::ValidationError("one of --beta / --beta-angle is required");
}

json meta_for(const MassParams& mp, Regime reg, const QuadratureConfig& cfg,
              const std::string& notes = "") {
  return {{"mu", mp.mu},
          {"m", mp.m},
          {"regime", to_string(reg)},
          {"tolerances", {{"abs", cfg.abs_tol}, {"rel", cfg.rel_tol}}},
          {"notes", notes}};
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(o.out_path);
    if (!f) throw std::runtime_error("cannot open output " + o.out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }
}

void require_json(const CommonOpts& o, const char* sub) {
  if (o.format != "json")
    throw CLI::ValidationError(std::string(sub) + " supports only --format json");
}

std::string rows_to_csv(const std::vector<std::string>& header,
                        const std::vector<std::vector<double>>& rows) {
  std::ostringstream os;
  for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& r : rows) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << fmt17(r[i]);
    os << '\n';
  }
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"spectral analysis of the l=1 three-body contact operator"};
  app.require_subcommand(1);
  CommonOpts o;

  std::vector<CLI::Option*> tol_abs_opts, tol_rel_opts;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mu", o.mu, "reduced parameter in (0,2)");
    sub->add_option("--m", o.m, "mass of the third particle");
    tol_abs_opts.push_back(
        sub->add_option("--tol-abs", o.cfg.abs_tol, "absolute quadrature tolerance"));
    tol_rel_opts.push_back(
        sub->add_option("--tol-rel", o.cfg.rel_tol, "relative quadrature tolerance"));
    sub->add_option("--tail-x", o.cfg.tail_cutoff_X, "tail split abscissa");
    sub->add_option("--grid-per-decade", o.cfg.grid_points_per_decade, "grid density");
    sub->add_option("--out", o.out_path, "output file (default stdout)");
    sub->add_option("--format", o.format_opt, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--config", o.config_path, "JSON config; flags override it");
  };
  auto add_beta = [&](CLI::App* sub) {
    sub->add_option("--beta", o.beta_str, "extension parameter as re,im (normalized)");
    sub->add_option("--beta-angle", o.beta_angle, "extension parameter as an angle");
    sub->add_option("--eps", o.eps_opt, "energy-map scale (nonzero)");
    sub->add_option("--n-min", o.n_min_opt, "lowest ladder index");
    sub->add_option("--n-max", o.n_max_opt, "highest ladder index");
  };

  auto* sc_constants = app.add_subcommand("constants", "critical constants mu0, mu1, m0, m1");
  add_common(sc_constants);
  auto* sc_zeros = app.add_subcommand("zeros", "zero pair of the symbol N");
  add_common(sc_zeros);
  auto* sc_curve = app.add_subcommand("curve", "boundary curves q0, q1 vs sqrt(1-(mu/2)^2)");
  add_common(sc_curve);
  sc_curve->add_option("--mu-min", o.mu_min, "grid start");
  sc_curve->add_option("--mu-max", o.mu_max, "grid end");
  sc_curve->add_option("--points", o.points_opt, "grid size");
  auto* sc_ladder = app.add_subcommand("ladder", "negative-eigenvalue ladder of an extension");
  add_common(sc_ladder);
  add_beta(sc_ladder);
  auto* sc_detect = app.add_subcommand("detect", "determinant-zero detector cross-check");
  add_common(sc_detect);
  add_beta(sc_detect);
  auto* sc_hlevels = app.add_subcommand("hlevels", "three-body energy levels of the ladder");
  add_common(sc_hlevels);
  add_beta(sc_hlevels);
  auto* sc_eig = app.add_subcommand("eigenfunction", "coast traces of the adjoint eigenfunction");
  add_common(sc_eig);
  sc_eig->add_option("--lambda", o.lambda_str, "spectral parameter re,im");
  sc_eig->add_option("--t-min", o.t_min_opt, "trace grid start");
  sc_eig->add_option("--t-max", o.t_max_opt, "trace grid end");
  sc_eig->add_option("--points", o.points_opt, "trace grid size");
  auto* sc_verify = app.add_subcommand("verify", "run the verification suite");
  add_common(sc_verify);
  sc_verify->add_option("--check", o.check_filter, "run only checks whose name contains this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version vs usage error
  }
  bool tol_abs_set = false, tol_rel_set = false;
  for (auto* op : tol_abs_opts) tol_abs_set = tol_abs_set || op->count() > 0;
  for (auto* op : tol_rel_opts) tol_rel_set = tol_rel_set || op->count() > 0;
  load_config(o, tol_abs_set, tol_rel_set);
  o.resolve_defaults();
  o.cfg.validate();
  if (sc_eig->parsed() && !o.lambda_str)
    throw CLI::ValidationError("eigenfunction requires --lambda");

  const auto cc = constants::compute(o.cfg);

  if (sc_constants->parsed()) {
    require_json(o, "constants");
    json j;
    j["meta"] = {{"tolerances", {{"abs", o.cfg.abs_tol}, {"rel", o.cfg.rel_tol}}},
                 {"notes", ""}};
    j["data"] = {{"mu0", cc.mu0}, {"mu1", cc.mu1}, {"m0", cc.m0}, {"m1", cc.m1},
                 {"tol", cc.tol}};
    emit(o, j.dump(2));
    return 0;
  }

  if (sc_zeros->parsed()) {
    require_json(o, "zeros");
    const auto mp = resolve_mass(o);
    const Regime reg = constants::classify(mp.mu, cc);
    json j;
    j["meta"] = meta_for(mp, reg, o.cfg);
    const int winding = zeros::winding_strip_boundary(mp.mu, o.cfg);
    if (reg == Regime::SelfAdjoint) {
      j["data"] = {{"zeros", nullptr}, {"winding", winding}};
    } else {
      const auto zd = zeros::find_zeros(mp.mu, cc, o.cfg);
      json d = {{"z_plus", {zd.z_plus.real(), zd.z_plus.imag()}},
                {"z_minus", {zd.z_minus.real(), zd.z_minus.imag()}},
                {"w_plus", {zd.w_plus.real(), zd.w_plus.imag()}},
                {"w_minus", {zd.w_minus.real(), zd.w_minus.imag()}},
                {"residual_plus", zd.residual_plus},
                {"residual_minus", zd.residual_minus},
                {"winding", winding}};
      if (zd.t0) d["t0"] = *zd.t0;
      if (zd.s0) d["s0"] = *zd.s0;
      j["data"] = d;
    }
    emit(o, j.dump(2));
    return 0;
  }

  if (sc_curve->parsed()) {
    std::vector<double> grid;
    for (int i = 0; i < o.points; ++i)
      grid.push_back(o.mu_min + (o.mu_max - o.mu_min) * i / (o.points - 1));
    const std::string path = o.out_path.empty() ? "figure1.csv" : o.out_path;
    report::emit_figure1(grid, path, o.format, o.cfg);
    std::cout << "wrote " << path << " and " << path << ".json\n";
    return 0;
  }

  if (sc_ladder->parsed() || sc_detect->parsed() || sc_hlevels->parsed()) {
    const auto mp = resolve_mass(o);
    const auto beta = resolve_beta(o);
    if (o.eps == 0.0) throw CLI::ValidationError("--eps must be nonzero");
    const Regime reg = constants::classify(mp.mu, cc);
    if (reg != Regime::RealLineZeros)
      throw std::domain_error("ladder requires the regime with line zeros (mu > mu1)");
    const double s0 = zeros::s0_of_mu(mp.mu, cc, o.cfg);
    const auto lad = spectrum::ladder(beta, s0, o.n_min, o.n_max);
    const std::string note =
        "lambda0 = -exp(-eta/(2 s0)); the alternative closed-form candidate "
        "-exp(-eta)/(2 s0) is rejected by the detector";

    if (sc_ladder->parsed()) {
      const auto br = spectrum::brackets(lad, mp.mu);
      if (o.format == "csv") {
        std::vector<std::vector<double>> rows;
        for (size_t i = 0; i < lad.entries.size(); ++i)
          rows.push_back({static_cast<double>(lad.entries[i].n), lad.entries[i].lambda,
                          br.brackets[i][0], br.brackets[i][1],
                          spectrum::h_level(lad.entries[i].lambda, o.eps)});
        emit(o, rows_to_csv({"n", "lambda_n", "bracket_lo", "bracket_hi", "h_level"}, rows));
        return 0;
      }
      json j;
      j["meta"] = meta_for(mp, reg, o.cfg, note);
      j["meta"]["s0"] = s0;
      j["meta"]["eta"] = lad.eta;
      j["meta"]["ratio"] = lad.ratio;
      j["meta"]["n0"] = br.n0;
      j["data"] = json::array();
      for (size_t i = 0; i < lad.entries.size(); ++i)
        j["data"].push_back({{"n", lad.entries[i].n},
                             {"lambda_n", lad.entries[i].lambda},
                             {"bracket", {br.brackets[i][0], br.brackets[i][1]}},
                             {"h_level", spectrum::h_level(lad.entries[i].lambda, o.eps)}});
      emit(o, j.dump(2));
      return 0;
    }

    const auto machinery = cauchy::CauchyMachinery::build(mp.mu, s0, o.cfg);
    if (sc_detect->parsed()) {
      const double hp = std::exp(0.5 * kPi / s0);
      const auto det = spectrum::detect_spectrum(beta, lad.entries.back().lambda * hp,
                                                 lad.entries.front().lambda / hp, machinery);
      double worst = -1.0;
      if (det.size() == lad.entries.size())
        for (size_t i = 0; i < det.size(); ++i) {
          const double l0 = lad.entries[lad.entries.size() - 1 - i].lambda;
          worst = std::max(worst, std::abs(det[i] - l0) / std::abs(l0));
        }
      if (o.format == "csv") {
        std::vector<std::vector<double>> rows;
        for (size_t i = 0; i < det.size(); ++i) {
          const double l0 = lad.entries[lad.entries.size() - 1 - i].lambda;
          rows.push_back({det[i], l0, std::abs(det[i] - l0) / std::abs(l0)});
        }
        emit(o, rows_to_csv({"detected", "ladder", "rel_dev"}, rows));
        return worst >= 0 && worst < 1e-6 ? 0 : 1;
      }
      json j;
      j["meta"] = meta_for(mp, reg, o.cfg, note);
      j["meta"]["s0"] = s0;
      j["data"] = {{"detected", det}, {"max_rel_dev", worst},
                   {"count_matches", det.size() == lad.entries.size()}};
      json ladj = json::array();
      for (const auto& e : lad.entries) ladj.push_back(e.lambda);
      j["data"]["ladder"] = ladj;
      emit(o, j.dump(2));
      return worst >= 0 && worst < 1e-6 ? 0 : 1;
    }

    // hlevels
    if (o.format == "csv") {
      std::vector<std::vector<double>> rows;
      for (const auto& e : lad.entries)
        rows.push_back({static_cast<double>(e.n), e.lambda,
                        spectrum::h_level(e.lambda, o.eps)});
      emit(o, rows_to_csv({"n", "lambda_n", "energy"}, rows));
      return 0;
    }
    json j;
    j["meta"] = meta_for(mp, reg, o.cfg, note);
    j["meta"]["eps"] = o.eps;
    j["data"] = json::array();
    for (const auto& e : lad.entries)
      j["data"].push_back({{"n", e.n},
                           {"lambda_n", e.lambda},
                           {"energy", spectrum::h_level(e.lambda, o.eps)}});
    emit(o, j.dump(2));
    return 0;
  }

  if (sc_eig->parsed()) {
    const auto mp = resolve_mass(o);
    const Regime reg = constants::classify(mp.mu, cc);
    if (reg != Regime::RealLineZeros)
      throw std::domain_error("eigenfunction traces require mu > mu1");
    const cplx lambda = parse_pair(*o.lambda_str, "--lambda");
    const auto machinery = cauchy::make_machinery(mp.mu, cc, o.cfg);
    const auto p = eigen::EigenParams::make(lambda, machinery);
    std::vector<double> t_grid;
    for (int i = 0; i < o.points; ++i)
      t_grid.push_back(o.t_min * std::pow(o.t_max / o.t_min,
                                          static_cast<double>(i) / (o.points - 1)));
    const auto tr = eigen::boundary_traces(t_grid, p, machinery);
    if (o.format == "csv") {
      std::vector<std::vector<double>> rows;
      for (size_t i = 0; i < t_grid.size(); ++i)
        rows.push_back({t_grid[i], tr.upper_abs2[i], tr.lower_abs2[i], tr.upper_phase[i],
                        tr.lower_phase[i]});
      emit(o, rows_to_csv({"t", "abs2_upper", "abs2_lower", "phase_upper", "phase_lower"},
                          rows));
      return 0;
    }
    json j;
    j["meta"] = meta_for(mp, reg, o.cfg);
    j["meta"]["lambda"] = {lambda.real(), lambda.imag()};
    j["data"] = json::array();
    for (size_t i = 0; i < t_grid.size(); ++i)
      j["data"].push_back({{"t", t_grid[i]},
                           {"abs2_upper", tr.upper_abs2[i]},
                           {"abs2_lower", tr.lower_abs2[i]},
                           {"phase_upper", tr.upper_phase[i]},
                           {"phase_lower", tr.lower_phase[i]}});
    emit(o, j.dump(2));
    return 0;
  }

  if (sc_verify->parsed()) {
    require_json(o, "verify");
    report::VerifyOptions vo;
    vo.cfg = o.cfg;
    vo.filter = o.check_filter;
    const auto rep = report::verify_all(vo);
    emit(o, report::format_report_json(rep, o.cfg));
    return rep.overall ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
