#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tms/cauchy.hpp"
#include "tms/eigen.hpp"
#include "tms/report.hpp"

using namespace tms;
using json = nlohmann::json;

namespace {
const QuadratureConfig cfg{};

// minimal structural validator: type / required / properties / items / enum
bool conforms(const json& schema, const json& value) {
  if (schema.contains("enum")) {
    for (const auto& e : schema["enum"])
      if (e == value) return true;
    return false;
  }
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    if (t == "object" && !value.is_object()) return false;
    if (t == "array" && !value.is_array()) return false;
    if (t == "string" && !value.is_string()) return false;
    if (t == "number" && !value.is_number()) return false;
    if (t == "integer" && !value.is_number_integer()) return false;
    if (t == "boolean" && !value.is_boolean()) return false;
  }
  if (schema.contains("required"))
    for (const auto& k : schema["required"])
      if (!value.contains(k.get<std::string>())) return false;
  if (schema.contains("properties") && value.is_object())
    for (const auto& [k, sub] : schema["properties"].items())
      if (value.contains(k) && !conforms(sub, value[k])) return false;
  if (schema.contains("items") && value.is_array())
    for (const auto& item : value)
      if (!conforms(schema["items"], item)) return false;
  return true;
}
}  // namespace

TEST_CASE("kernel identity: quadrature equals the squared-factor closed form") {
  CHECK(report::verify_5_38({0.0}, {kPi}, cfg) < 1e-7);
  CHECK(report::verify_5_38({-1.0, 0.5}, {0.9, 4.4}, cfg) < 1e-7);
}

TEST_CASE("figure data: ordering, endpoints, annotated crossings") {
  const std::string path = "fig_test.csv";
  std::vector<double> grid;
  for (int i = 0; i < 41; ++i) grid.push_back(0.02 + (1.96 / 40.0) * i);
  report::emit_figure1(grid, path, "csv", cfg);

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "mu,sqrt_term,q0,q1");
  double mu, sq, q0, q1;
  char c;
  std::vector<std::array<double, 4>> rows;
  while (in >> mu >> c >> sq >> c >> q0 >> c >> q1) rows.push_back({mu, sq, q0, q1});
  REQUIRE(rows.size() == grid.size());
  CHECK(rows.front()[1] == doctest::Approx(1.0).epsilon(1e-4));    // sqrt term at mu ~ 0
  CHECK(rows.back()[1] < 0.21);                                    // and near mu = 2
  CHECK(rows.back()[2] > rows.back()[3]);                          // q0 above q1 near 2
  CHECK(rows.back()[3] > 0.0);

  std::ifstream side(path + ".json");
  REQUIRE(side.good());
  json j;
  side >> j;
  const auto cc = constants::compute(cfg);
  CHECK(std::abs(j["mu0"].get<double>() - cc.mu0) < 1e-8);
  CHECK(std::abs(j["mu1"].get<double>() - cc.mu1) < 1e-8);
  std::remove(path.c_str());
  std::remove((path + ".json").c_str());
}

TEST_CASE("check subsets can be selected by name") {
  report::VerifyOptions vo;
  vo.cfg = cfg;
  vo.filter = "kernel-identity";
  const auto rep = report::verify_all(vo);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].name == "kernel-identity-538");
  CHECK(rep.checks[0].pass);
  CHECK(rep.overall);
}

TEST_CASE("report JSON validates against the shipped schema") {
  report::VerifyOptions vo;
  vo.cfg = cfg;
  vo.filter = "kernel-identity";
  const auto rep = report::verify_all(vo);
  const json out = json::parse(report::format_report_json(rep, cfg));
  std::ifstream sf(TMS_SCHEMA_PATH);
  REQUIRE(sf.good());
  json schema;
  sf >> schema;
  CHECK(conforms(schema, out));
  // every check carries an identity anchor; overall is the conjunction
  bool conj = true;
  for (const auto& c : out["data"]["checks"]) {
    CHECK(!c["anchor"].get<std::string>().empty());
    conj = conj && c["status"] == "pass";
  }
  CHECK(out["data"]["overall"].get<bool>() == conj);
}

TEST_CASE("a corrupted s0 makes the closed-form cross-check fail") {
  const auto cc = constants::compute(cfg);
  const auto good = cauchy::make_machinery(1.87, cc, cfg);
  const auto bad = cauchy::CauchyMachinery::build(1.87, good.s0() * 1.01, cfg);
  const auto p = eigen::EigenParams::make(cplx(0.0, 1.0), bad);
  const cplx w = std::polar(2.0, 1.1);
  const double direct = std::norm(eigen::g_lambda(CutPlanePoint(w), p, bad));
  const double closed = eigen::abs2_closed(w, p, bad);
  CHECK(std::abs(direct - closed) / closed > 1e-6);
}
