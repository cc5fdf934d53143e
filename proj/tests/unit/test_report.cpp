#include <random>

#include "doctest.h"
#include "qes/catalog.hpp"
#include "qes/report.hpp"

using namespace qes;

namespace {

RunReport bender_dunne() {
  QesProblem prob = instantiate("T1.x", {{"alpha", 1}, {"beta", 0}, {"gamma", -1}}, 3);
  return run_solve(prob, "T1.x");
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(num(0.5) == "0.5");
  CHECK(num(kInf) == "inf");
  CHECK(num(-kInf) == "-inf");
  CHECK(std::stod(num(0.1)) == 0.1);
}

TEST_CASE("solve report JSON") {
  RunReport r = bender_dunne();
  CHECK(r.ok());
  auto j = report_json(r);
  CHECK(j["schema"] == "qes/1");
  CHECK(j["problem"]["model"] == "T1.x");
  CHECK(j["spectrum"]["eigenvalues"].size() == 4);
  CHECK(j["oracle"]["equal"] == true);
  CHECK(j["factorization"]["all_exact"] == true);
  CHECK(j.contains("timings_ms"));
  CHECK_FALSE(report_json(r, false).contains("timings_ms"));
}

TEST_CASE("reports are deterministic without timings") {
  CHECK(report_json(bender_dunne(), false).dump() == report_json(bender_dunne(), false).dump());
  CHECK(report_csv(bender_dunne()) == report_csv(bender_dunne()));
}

TEST_CASE("solve CSV") {
  std::string csv = report_csv(bender_dunne());
  CHECK(csv.rfind("i,E,root_count,residual,P_0,P_1,P_2,P_3\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("catalog listings") {
  CHECK(catalog_json()["count"] == 15);
  CHECK(catalog_json(4)["count"] == 7);
  CHECK(catalog_json(3)["count"] == 7);
  CHECK(catalog_text(4).find("7 models") != std::string::npos);
}

TEST_CASE("error JSON and exit codes") {
  auto j = error_json("solve", ErrorKind::constraint_violation, "bad");
  CHECK(j["error"]["kind"] == "constraint_violation");
  CHECK(j["error"]["message"] == "bad");
  CHECK(solve_exit_code(ErrorKind::constraint_violation) == 2);
  CHECK(solve_exit_code(ErrorKind::parse) == 2);
  CHECK(solve_exit_code(ErrorKind::oracle_divergence) == 3);
  CHECK(solve_exit_code(ErrorKind::factorization_failure) == 3);
  CHECK(solve_exit_code(ErrorKind::degenerate_spectrum) == 4);
  CHECK(solve_exit_code(ErrorKind::non_real_spectrum) == 4);
}

TEST_CASE("non-self-adjoint rows do not count oscillation failures") {
  std::mt19937_64 rng(8);
  SolveOptions opt;
  opt.self_adjoint = false;
  int solved = 0;
  for (int trial = 0; trial < 20 && solved < 3; ++trial) {
    auto params = sample_params(catalog_entry("T2.x4"), 2, rng);
    REQUIRE(params);
    QesProblem prob = instantiate("T2.x4", *params, 2);
    try {
      RunReport r = run_solve(prob, "T2.x4", opt);
      ++solved;
      for (const auto& f : r.failures) CHECK(f.find("oscillation") == std::string::npos);
      CHECK(report_json(r)["checks"]["oscillation"]["ok"].is_null());
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::non_real_spectrum);
    }
  }
  CHECK(solved > 0);
}
