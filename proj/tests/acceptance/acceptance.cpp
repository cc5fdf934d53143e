#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qes/catalog.hpp"
#include "qes/errors.hpp"
#include "qes/matrix_oracle.hpp"
#include "qes/potential.hpp"
#include "qes/spectrum.hpp"

#ifndef QES_CLI_PATH
#define QES_CLI_PATH "qes"
#endif

using namespace qes;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Command {
  int status = -1;
  std::string out;
  double seconds = 0;
};

Command run(const std::string& args) {
  Command c;
  std::string cmd = std::string(QES_CLI_PATH) + " " + args + " 2>/dev/null";
  auto t0 = Clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), got);
  int st = pclose(pipe);
  c.seconds = seconds_since(t0);
  c.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return c;
}

const ParamMap kBenderDunne{{"alpha", 1}, {"beta", 0}, {"gamma", -1}};

std::string fmt(double v) {
  char b[64];
  std::snprintf(b, sizeof b, "%.3g", v);
  return b;
}

Outcome c1() {
  Command c = run("solve --model T1.x --param alpha=1 --param beta=0 --param gamma=-1 --n 3 --format json");
  if (c.status != 0) return {false, "solve exited " + std::to_string(c.status)};
  auto j = nlohmann::json::parse(c.out);
  const std::vector<double> E = {-7.398556194, -2.293766823, 2.293766823, 7.398556194};
  const std::vector<std::vector<double>> table = {{1, 3.699278097, 3.561552813, -.962769686},
                                                  {1, 1.146883412, -.5615528135, -.4896337383},
                                                  {1, -1.146883412, -.5615528135, .4896337383},
                                                  {1, -3.699278097, 3.561552813, -.962769686}};
  double ev_err = 0, tab_err = 0;
  std::string bad;
  for (size_t i = 0; i < 4; ++i) {
    ev_err = std::max(ev_err, std::fabs(std::stod(j["spectrum"]["eigenvalues"][i].get<std::string>()) - E[i]));
    for (size_t m = 0; m < 4; ++m) {
      double got = std::stod(j["spectrum"]["coeff_table"][i][m].get<std::string>());
      double err = std::fabs(got - table[i][m]);
      tab_err = std::max(tab_err, err);
      if (err > 1e-8) bad += " P_" + std::to_string(m) + "(E_" + std::to_string(i) + ")=" + fmt(got) + " vs printed " + fmt(table[i][m]) + ";";
    }
  }
  bool ok = ev_err <= 1e-8 && tab_err <= 1e-8 && c.seconds < 1.0;
  std::string d = "eigenvalue err " + fmt(ev_err) + ", table err " + fmt(tab_err) + ", " + fmt(c.seconds) + " s";
  if (!bad.empty())
    d += ";" + bad + " the printed entry contradicts the printed P_3 = E/4 - E^3/144 and the odd parity of P_3";
  return {ok, d};
}

Outcome c2() {
  QesProblem p = instantiate("T1.x", kBenderDunne, 3);
  EnergySequence s = generate(p, 4);
  const std::vector<RatPoly> want = {
      RatPoly{0, Rational(-1, 2)},
      RatPoly{-1, 0, Rational(1, 12)},
      RatPoly{0, Rational(1, 4), 0, Rational(-1, 144)},
      RatPoly{Rational(1, 10), 0, Rational(-1, 48), 0, Rational(1, 2880)},
  };
  std::string bad;
  for (int m = 1; m <= 4; ++m)
    if (!(s[m] == want[static_cast<size_t>(m - 1)])) bad += " P_" + std::to_string(m) + " = " + s[m].to_string("E");
  return {bad.empty(), bad.empty() ? "P_1..P_4 exact" : "mismatch:" + bad};
}

Outcome c3() {
  std::mt19937_64 rng(3);
  int draws3 = 0, fails3 = 0, draws4 = 0, fails4 = 0;
  std::string first4;
  for (const auto& e : catalog()) {
    if (e.table == 0) continue;
    for (int d = 0; d < 4; ++d) {
      int n = 1 + d * 2;
      auto params = sample_params(e, n, rng, false);
      if (!params) continue;
      QesProblem p = instantiate(e.id, *params, n, {true, false});
      if (e.table == 1) {
        ++draws3;
        EnergySequence s = generate(p, 5);
        for (int m = 1; m <= 5; ++m)
          if (!(s[m] == closed_form_oracle(p, m))) {
            ++fails3;
            break;
          }
      } else {
        ++draws4;
        for (int m = 1; m <= 4; ++m)
          if (!(closed_form_mapped(p, m) == closed_form_oracle(p, m))) {
            ++fails4;
            if (first4.empty()) first4 = e.id + " P_" + std::to_string(m);
            break;
          }
      }
    }
  }
  std::string d = "order 3: " + std::to_string(draws3 - fails3) + "/" + std::to_string(draws3) +
                  " draws exact; order 4 with the fixed P -> -P, B -> -B mapping: " + std::to_string(draws4 - fails4) +
                  "/" + std::to_string(draws4);
  if (fails4)
    d += " (first: " + first4 +
         "; P_3 differs by 2 B'(0) E / (3 F(0) (2 A'(0) + F(0))), so no fixed sign convention reconciles the "
         "printed order 4 closed forms once B'(0) != 0)";
  return {draws3 >= 20 && fails3 == 0 && fails4 == 0, d};
}

Outcome c4() {
  std::mt19937_64 rng(4);
  int inst = 0, bad = 0;
  for (const auto& e : catalog()) {
    if (e.table == 0) continue;
    for (int n = 0; n <= 8; ++n) {
      auto params = sample_params(e, n, rng);
      if (!params) continue;
      QesProblem p = instantiate(e.id, *params, n);
      ++inst;
      try {
        if (!factorization_check(generate(p, n + 7), n, 6).all_exact) ++bad;
      } catch (const Error&) {
        ++bad;
      }
    }
  }
  QesProblem p = instantiate("T1.x", kBenderDunne, 3);
  p.B = p.B + RatPoly{0, 1};
  bool control_failed = false;
  try {
    control_failed = !factorization_check(generate(p, 10), 3, 6).all_exact;
  } catch (const Error&) {
    control_failed = true;
  }
  return {bad == 0 && control_failed,
          std::to_string(inst - bad) + "/" + std::to_string(inst) + " instances exact; perturbed-B control " +
              (control_failed ? "fails as required" : "did not fail")};
}

Outcome c5() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(5);
  int inst = 0, bad = 0;
  for (const auto& e : catalog()) {
    if (e.table == 0) continue;
    for (int d = 0; d < 25; ++d) {
      int n = d % 9;
      auto params = sample_params(e, n, rng, false);
      if (!params) continue;
      QesProblem p = instantiate(e.id, *params, n, {true, false});
      ++inst;
      OracleReport o = oracle_compare(p, generate(p, n + 1), false);
      if (!o.equal) ++bad;
    }
  }
  double s = seconds_since(t0);
  return {bad == 0 && inst >= 25 * 14 && s < 60,
          std::to_string(inst - bad) + "/" + std::to_string(inst) + " instances agree in " + fmt(s) + " s"};
}

Outcome c6() {
  std::mt19937_64 rng(6);
  int inst = 0, bad = 0;
  for (const auto& e : catalog()) {
    if (e.table == 0) continue;
    for (int n = 0; n <= 8; ++n) {
      auto params = sample_params(e, n, rng, false);
      if (!params) continue;
      QesProblem p = instantiate(e.id, *params, n, {true, false});
      ++inst;
      TaylorData t = taylor_data(p);
      bool ok = truncation_residuals(p).ok();
      for (const auto& row : invariance_conditions(p.order(), n)) ok = ok && row.residual(t) == 0;
      if (e.k() == 4) ok = ok && t.F[3] == -t.A[4] * (n - 1) / 2;
      if (!ok) ++bad;
    }
  }
  std::string d = std::to_string(inst - bad) + "/" + std::to_string(inst) + " instantiations satisfy every constraint;";
  bool rules = true;
  for (const auto& e : catalog()) {
    if (e.k() != 4 || e.table != 2) continue;
    auto r = alpha_rule_identity(e, e.alpha_rule_printed, 10, 66);
    if (!r.ok()) {
      rules = false;
      d += " printed alpha rule of " + e.id + " (" + e.alpha_rule_printed + ") fails at " + std::to_string(r.failures) +
           "/10 points, derived rule " + e.alpha_rule + (alpha_rule_identity(e, e.alpha_rule, 10, 66).ok() ? " holds" : " fails") + ";";
    }
  }
  if (rules) d += " printed alpha rules are identities";
  return {bad == 0 && rules, d};
}

Outcome c7() {
  std::mt19937_64 rng(7);
  int entries = 0, bad = 0;
  double worst = 0;
  std::string d;
  for (const auto& e : catalog()) {
    if (!e.has_closed_form()) continue;
    ++entries;
    auto params = sample_params(e, 2, rng);
    if (!params) return {false, "no parameters for " + e.id};
    QesProblem p = instantiate(e.id, *params, 2);
    const CoordMap& map = coord_map(e.coord_map);
    std::uniform_real_distribution<double> u(map.sample_range.lo, map.sample_range.hi);
    double err = 0;
    for (int i = 0; i < 50; ++i) {
      double t = u(rng);
      double vc = closed_form_V(e.id, p.spec.params, 2, t);
      double vr = potential_chain_rule(p, map, t);
      err = std::max(err, std::fabs(vr - vc) / std::max(std::fabs(vr), 1e-300));
    }
    worst = std::max(worst, err);
    if (err > 1e-9) {
      ++bad;
      d += " " + e.id + " rel err " + fmt(err) + " (chain rule normative);";
    }
  }
  return {bad == 0, std::to_string(entries - bad) + "/" + std::to_string(entries) + " entries within 1e-9, worst " + fmt(worst) + ";" + d};
}

Outcome c8() {
  QesProblem p = instantiate("T1.x", kBenderDunne, 3);
  SpectrumResult sp = solve_spectrum(generate(p, 4), 3);
  const CoordMap& map = coord_map("t^2/4");
  FdCheck fine = fd_check(p, map, sp.eigenvalues, 4001);
  FdCheck coarse = fd_check(p, map, sp.eigenvalues, 2001);
  double worst = 0, rmin = 1e300, rmax = 0;
  for (size_t i = 0; i < 4; ++i) {
    worst = std::max(worst, fine.rel_error[i]);
    double r = coarse.rel_error[i] / fine.rel_error[i];
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  bool ok = fine.ok && worst <= 0.01 && rmin >= 3.5 && rmax <= 4.5 && !fine.fd.unreliable_truncation;
  return {ok, "worst rel err " + fmt(worst) + " at 4001 points on [" + fmt(fine.domain.domain.lo) + ", " +
                  fmt(fine.domain.domain.hi) + "], halving ratios " + fmt(rmin) + ".." + fmt(rmax)};
}

Outcome c9() {
  std::mt19937_64 rng(9);
  int inst = 0, bad = 0;
  std::string d;
  for (const auto& e : catalog()) {
    if (e.table == 0) continue;
    int complex = 0, nodes = 0;
    for (int n = 0; n <= 8; ++n) {
      auto params = sample_params(e, n, rng);
      if (!params) continue;
      QesProblem p = instantiate(e.id, *params, n, {true, true});
      ++inst;
      try {
        SpectrumResult sp = solve_spectrum(generate(p, n + 1), n);
        if (!oscillation_check(sp, p.spec.interval).ok) ++nodes;
      } catch (const Error& ex) {
        if (ex.kind() != ErrorKind::non_real_spectrum) throw;
        ++complex;
      }
    }
    if (complex + nodes) {
      bad += complex + nodes;
      d += " " + e.id + (e.self_adjoint ? "" : " (not self-adjoint)") + ": " + std::to_string(complex) +
           " complex spectra, " + std::to_string(nodes) + " wrong node counts;";
    }
  }
  return {bad == 0, std::to_string(inst - bad) + "/" + std::to_string(inst) + " instances have node counts 0..n;" + d};
}

Outcome c10() {
  Command c = run("verify --all --trials 25 --format text --no-timings");
  std::string last;
  std::istringstream in(c.out);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) last = line;
  return {c.status == 0 && c.seconds < 120, "exit " + std::to_string(c.status) + " in " + fmt(c.seconds) + " s (" + last + ")"};
}

const std::vector<std::function<Outcome()>> kCriteria = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};

const char* kNames[] = {"Bender-Dunne reproduction", "polynomial identities", "closed-form oracle", "factorization",
                        "matrix oracle",            "constraint identities", "potential closed forms",
                        "finite-difference cross-check", "oscillation ordering", "property suite"};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int i = 1; i <= 10; ++i) which.push_back(i);
  int failed = 0;
  for (int c : which) {
    if (c < 1 || c > 10) {
      std::cerr << "no criterion " << c << "\n";
      return 2;
    }
    Outcome o;
    try {
      o = kCriteria[static_cast<size_t>(c - 1)]();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " c" << c << " " << kNames[c - 1] << ": " << o.detail << "\n";
    if (!o.pass) ++failed;
  }
  return failed ? 1 : 0;
}
