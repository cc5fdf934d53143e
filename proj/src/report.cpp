#include "qes/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

namespace qes {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json poly_json(const RatPoly& p, const std::string& var) {
  return {{"coeffs", p.coeff_strings()}, {"display", p.to_string(var)}};
}

nlohmann::json params_json(const ParamMap& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : p) j[k] = to_string(v);
  return j;
}

nlohmann::json problem_json(const QesProblem& prob, const std::string& model) {
  return {{"model", model},
          {"n", prob.n},
          {"k", prob.spec.k()},
          {"order", prob.order()},
          {"A", poly_json(prob.spec.A)},
          {"F", poly_json(prob.spec.F)},
          {"B", poly_json(prob.B)},
          {"interval", {num(prob.spec.interval.lo), num(prob.spec.interval.hi)}},
          {"params", params_json(prob.spec.params)}};
}

RunReport run_solve(const QesProblem& prob, const std::string& model, const SolveOptions& opt) {
  RunReport r;
  r.model = model;
  r.problem = prob;
  r.options = opt;
  const int n = prob.n;

  auto t0 = Clock::now();
  assert_truncation(prob);
  r.timings.push_back({"constraints", ms_since(t0)});

  t0 = Clock::now();
  r.sequence = generate(prob, n + 1 + opt.N_extra);
  r.timings.push_back({"recursion", ms_since(t0)});

  t0 = Clock::now();
  r.factorization = factorization_check(r.sequence, n, opt.N_extra);
  r.timings.push_back({"factorization", ms_since(t0)});

  t0 = Clock::now();
  r.oracle = oracle_compare(prob, r.sequence);
  if (!r.oracle.trace_ok) throw Error(ErrorKind::oracle_divergence, "trace of the restricted matrix disagrees with the critical polynomial");
  r.timings.push_back({"oracle", ms_since(t0)});

  t0 = Clock::now();
  r.spectrum = solve_spectrum(r.sequence, n, opt.tol);
  r.timings.push_back({"spectrum", ms_since(t0)});

  t0 = Clock::now();
  r.oscillation = oscillation_check(r.spectrum, prob.spec.interval);
  r.parity = parity_check(r.sequence);
  if (r.parity.applicable && r.parity.holds) {
    const auto& e = r.spectrum.eigenvalues;
    for (size_t i = 0; i < e.size(); ++i)
      if (std::fabs(e[i] + e[e.size() - 1 - i]) > 1e-10) r.spectrum_symmetric = false;
  }
  for (size_t i = 0; i < r.spectrum.eigenvalues.size(); ++i) {
    double scale = 1e-8 * (1 + std::fabs(r.spectrum.eigenvalues[i])) * r.spectrum.psi_scale[i];
    double ratio = r.spectrum.residual_norms[i] / scale;
    r.residual_bound = std::max(r.residual_bound, ratio);
  }
  r.residual_ok = r.residual_bound < 1;
  r.timings.push_back({"checks", ms_since(t0)});

  if (r.parity.applicable && !r.parity.holds) r.failures.push_back("parity");
  if (!r.spectrum_symmetric) r.failures.push_back("spectrum symmetry");
  if (opt.self_adjoint) {
    if (!r.oscillation.ok) r.failures.push_back("oscillation");
    if (!r.residual_ok) r.failures.push_back("residual");
  }
  return r;
}

nlohmann::json report_json(const RunReport& r, bool timings) {
  nlohmann::json j;
  j["schema"] = "qes/1";
  j["command"] = "solve";
  j["problem"] = problem_json(r.problem, r.model);
  j["critical_polynomial"] = poly_json(r.sequence[r.problem.n + 1], "E");

  nlohmann::json sp;
  std::vector<std::string> ev;
  for (double e : r.spectrum.eigenvalues) ev.push_back(num(e));
  sp["eigenvalues"] = ev;
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : r.spectrum.coeff_table) {
    std::vector<std::string> cells;
    for (double c : row) cells.push_back(num(c));
    table.push_back(cells);
  }
  sp["coeff_table"] = table;
  std::vector<std::string> res;
  for (double v : r.spectrum.residual_norms) res.push_back(num(v));
  sp["residual_norms"] = res;
  sp["root_counts"] = r.spectrum.root_counts;
  j["spectrum"] = sp;

  std::vector<int> qdeg;
  for (const auto& q : r.factorization.quotients) qdeg.push_back(q.degree());
  j["factorization"] = {{"N_max", r.factorization.N_max}, {"all_exact", r.factorization.all_exact}, {"quotient_degrees", qdeg}};
  j["oracle"] = {{"equal", r.oracle.equal}, {"trace_ok", r.oracle.trace_ok}, {"char_poly", poly_json(r.oracle.char_poly, "E")}};

  nlohmann::json checks;
  if (r.options.self_adjoint)
    checks["oscillation"] = {{"ok", r.oscillation.ok}, {"counts", r.oscillation.counts}};
  else
    checks["oscillation"] = {{"ok", nullptr}, {"counts", r.oscillation.counts}, {"note", "operator not self-adjoint; not asserted"}};
  checks["residual"] = {{"ok", r.residual_ok}, {"worst_ratio_to_bound", num(r.residual_bound)}};
  checks["parity"] = {{"applicable", r.parity.applicable}, {"holds", r.parity.holds}, {"spectrum_symmetric", r.spectrum_symmetric}};
  j["checks"] = checks;
  j["status"] = r.ok() ? "ok" : "failed";
  j["failures"] = r.failures;
  if (timings) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& s : r.timings) t[s.stage] = num(s.ms);
    j["timings_ms"] = t;
  }
  return j;
}

std::string report_csv(const RunReport& r) {
  const int n = r.problem.n;
  std::string out = "i,E,root_count,residual";
  for (int m = 0; m <= n; ++m) out += ",P_" + std::to_string(m);
  out += "\n";
  for (size_t i = 0; i < r.spectrum.eigenvalues.size(); ++i) {
    out += std::to_string(i) + "," + num(r.spectrum.eigenvalues[i]) + "," + std::to_string(r.spectrum.root_counts[i]) +
           "," + num(r.spectrum.residual_norms[i]);
    for (double c : r.spectrum.coeff_table[i]) out += "," + num(c);
    out += "\n";
  }
  return out;
}

std::string report_text(const RunReport& r) {
  const auto& p = r.problem;
  std::string out;
  char buf[256];
  out += "model      " + r.model + "\n";
  out += "A(x)       " + p.spec.A.to_string() + "\n";
  out += "F(x)       " + p.spec.F.to_string() + "\n";
  out += "B(x)       " + p.B.to_string() + "\n";
  out += "n          " + std::to_string(p.n) + "\n";
  out += "P_{n+1}(E) " + r.sequence[p.n + 1].to_string("E") + "\n\n";
  out += "  i                        E  nodes      residual\n";
  for (size_t i = 0; i < r.spectrum.eigenvalues.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%3zu %24.15g %6d %13.3e\n", i, r.spectrum.eigenvalues[i], r.spectrum.root_counts[i],
                  r.spectrum.residual_norms[i]);
    out += buf;
  }
  out += "\ncoefficients P_m(E_i)\n";
  for (size_t i = 0; i < r.spectrum.coeff_table.size(); ++i) {
    out += "  E_" + std::to_string(i) + ":";
    for (double c : r.spectrum.coeff_table[i]) {
      std::snprintf(buf, sizeof buf, " %.12g", c);
      out += buf;
    }
    out += "\n";
  }
  out += "\nfactorization " + std::string(r.factorization.all_exact ? "exact" : "FAILED") + " up to N = " +
         std::to_string(r.factorization.N_max) + "\n";
  out += "oracle        " + std::string(r.oracle.equal ? "equal" : "MISMATCH") + "\n";
  out += "oscillation   " + std::string(r.oscillation.ok ? "ok" : (r.options.self_adjoint ? "FAILED" : "n/a")) + "\n";
  out += "status        " + std::string(r.ok() ? "ok" : "failed") + "\n";
  return out;
}

nlohmann::json error_json(const std::string& command, ErrorKind kind, const std::string& message) {
  return {{"schema", "qes/1"}, {"command", command}, {"error", {{"kind", to_string(kind)}, {"message", message}}}};
}

int solve_exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::oracle_divergence:
    case ErrorKind::factorization_failure:
    case ErrorKind::truncation_failure:
      return 3;
    case ErrorKind::degenerate_spectrum:
    case ErrorKind::non_real_spectrum:
      return 4;
    default:
      return 2;
  }
}

}  // namespace qes

namespace qes {

namespace {

int entry_order(const CatalogEntry& e) {
  return std::max<int>({3, static_cast<int>(e.A_coeffs.size()) - 1, static_cast<int>(e.F_coeffs.size())});
}

bool listed(const CatalogEntry& e, int k_filter) {
  if (k_filter <= 0) return true;
  return e.table != 0 && entry_order(e) == k_filter;
}

}  // namespace

nlohmann::json catalog_json(int k_filter) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : catalog()) {
    if (!listed(e, k_filter)) continue;
    nlohmann::json j;
    j["id"] = e.id;
    j["table"] = e.table ? nlohmann::json(e.table) : nlohmann::json(nullptr);
    j["row"] = e.row ? nlohmann::json(e.row) : nlohmann::json(nullptr);
    j["order"] = entry_order(e);
    j["A"] = e.A_display;
    j["W"] = e.W_display;
    j["params"] = e.free_params;
    j["alpha_rule"] = e.alpha_rule.empty() ? nlohmann::json(nullptr) : nlohmann::json(e.alpha_rule);
    j["A_coeffs"] = e.A_coeffs;
    j["F_coeffs"] = e.F_coeffs;
    j["interval"] = {e.interval_lo, e.interval_hi};
    j["constraints"] = e.constraints;
    j["admissibility"] = e.admissibility;
    j["self_adjoint"] = e.self_adjoint;
    j["coord_map"] = e.coord_map.empty() ? nlohmann::json(nullptr) : nlohmann::json(e.coord_map);
    j["closed_form_potential"] = e.has_closed_form();
    j["exactly_solvable_when_zero"] = e.exactly_solvable.empty() ? nlohmann::json(nullptr) : nlohmann::json(e.exactly_solvable);
    j["printed_errata"] = e.errata;
    if (!e.note.empty()) j["note"] = e.note;
    list.push_back(j);
  }
  return {{"schema", "qes/1"}, {"command", "list"}, {"count", list.size()}, {"models", list}};
}

std::string catalog_text(int k_filter) {
  std::string out;
  char buf[512];
  int count = 0;
  for (const auto& e : catalog()) {
    if (!listed(e, k_filter)) continue;
    std::string where = e.table ? "table " + std::to_string(e.table) + " row " + std::to_string(e.row) : "potential only";
    std::string params;
    for (const auto& p : e.free_params) params += (params.empty() ? "" : ",") + p;
    std::string cons;
    for (const auto& c : e.constraints) cons += (cons.empty() ? "" : "; ") + c;
    std::snprintf(buf, sizeof buf, "%-22s k=%d  %-16s A=%-18s params=%-22s %s\n", e.id.c_str(), entry_order(e),
                  where.c_str(), e.A_display.c_str(), params.c_str(), cons.c_str());
    out += buf;
    if (!e.alpha_rule.empty()) out += std::string(24, ' ') + "alpha = " + e.alpha_rule + "\n";
    ++count;
  }
  out += std::to_string(count) + " models\n";
  return out;
}

nlohmann::json profile_json(const PotentialProfile& p) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : p.samples) {
    nlohmann::json j = {{"t", num(s.t)}, {"V", num(s.V)}};
    if (!s.psi.empty()) {
      std::vector<std::string> psi;
      for (double v : s.psi) psi.push_back(num(v));
      j["psi"] = psi;
    }
    samples.push_back(j);
  }
  return {{"model", p.id}, {"n", p.n}, {"params", params_json(p.params)}, {"provenance", p.provenance}, {"samples", samples}};
}

nlohmann::json fd_check_json(const FdCheck& c) {
  nlohmann::json levels = nlohmann::json::array();
  for (size_t i = 0; i < c.algebraic.size(); ++i)
    levels.push_back({{"level", i}, {"algebraic", num(c.algebraic[i])}, {"fd", num(c.fd.levels[i])}, {"rel_error", num(c.rel_error[i])}});
  return {{"t_domain", {num(c.domain.domain.lo), num(c.domain.domain.hi)}},
          {"truncation", {{"lo", c.domain.lo_rule}, {"hi", c.domain.hi_rule}, {"threshold", num(c.domain.threshold)}}},
          {"grid_points", c.fd.grid_points},
          {"boundary_mass", num(c.fd.boundary_mass)},
          {"unreliable_truncation", c.fd.unreliable_truncation},
          {"levels", levels},
          {"ok", c.ok}};
}

std::string fd_check_csv(const FdCheck& c) {
  std::string out = "level,E_algebraic,E_fd,rel_error\n";
  for (size_t i = 0; i < c.algebraic.size(); ++i)
    out += std::to_string(i) + "," + num(c.algebraic[i]) + "," + num(c.fd.levels[i]) + "," + num(c.rel_error[i]) + "\n";
  return out;
}

}  // namespace qes
