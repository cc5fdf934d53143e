#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qes/catalog.hpp"
#include "qes/potential.hpp"
#include "qes/report.hpp"
#include "qes/verify.hpp"

using namespace qes;

namespace {

struct Common {
  std::string format = "text";
  bool no_timings = false;
};

ParamMap parse_params(const std::vector<std::string>& items) {
  ParamMap out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::parse, "expected name=value, got '" + item + "'");
    out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return out;
}

RealInterval parse_interval(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::parse, "interval must be 'lo,hi'");
  auto end = [](std::string s) {
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
    return to_double(parse_rational(s));
  };
  return {end(text.substr(0, comma)), end(text.substr(comma + 1))};
}

int fail(const std::string& command, const Common& c, ErrorKind kind, const std::string& msg, int code,
         const nlohmann::json& extra = nullptr) {
  if (c.format == "json") {
    auto j = error_json(command, kind, msg);
    if (!extra.is_null()) j["error"].update(extra);
    std::cerr << j.dump(2) << "\n";
  } else {
    std::cerr << "qes " << command << ": " << msg << "\n";
  }
  return code;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-exactly solvable operators from generalized master functions"};
  app.require_subcommand(1);

  Common list_c, solve_c, verify_c, pot_c;

  auto* list = app.add_subcommand("list", "List catalog models");
  int list_k = 0;
  list->add_option("--format", list_c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  list->add_option("--k", list_k, "Only table rows of this order (3 or 4)");

  auto* solve = app.add_subcommand("solve", "Algebraic spectrum of a model or custom operator");
  std::string model, A_text, F_text, interval_text = "0,inf";
  std::vector<std::string> params;
  int n = -1;
  SolveOptions sopt;
  bool fill_F3 = false;
  auto* model_opt = solve->add_option("--model", model, "Catalog id");
  auto* a_opt = solve->add_option("--A", A_text, "Master function coefficients, ascending, e.g. \"0,1\"");
  solve->add_option("--F", F_text, "(AW)'/W coefficients, ascending")->needs(a_opt);
  a_opt->excludes(model_opt);
  solve->add_option("--interval", interval_text, "x-interval for a custom operator, e.g. \"0,inf\"");
  solve->add_flag("--fill-F3", fill_F3, "Set the x^3 coefficient of F from the weight constraint");
  solve->add_option("--param", params, "name=value, repeatable");
  solve->add_option("--n", n, "Invariant subspace degree")->required()->check(CLI::NonNegativeNumber);
  solve->add_option("--N-extra", sopt.N_extra, "Extra recursion steps checked for factorization")->check(CLI::NonNegativeNumber);
  solve->add_option("--tol", sopt.tol, "Root tolerance")->check(CLI::PositiveNumber);
  solve->add_option("--format", solve_c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  solve->add_flag("--no-timings", solve_c.no_timings, "Omit the timings block");

  auto* verify = app.add_subcommand("verify", "Run the property suite over randomized parameters");
  VerifyOptions vopt;
  bool all = false;
  verify->add_flag("--all", all, "Every catalog model");
  verify->add_option("--model", vopt.models, "Catalog id, repeatable");
  verify->add_option("--trials", vopt.trials, "Trials per model")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", vopt.seed, "Random seed");
  verify->add_option("--threads", vopt.threads, "Worker threads (default QES_THREADS or all cores)");
  verify->add_option("--format", verify_c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--no-timings", verify_c.no_timings, "Omit the timings block");
  verify->add_flag("--inject-fault", vopt.inject_fault, "Perturb B after the constraint solve")->group("");

  auto* pot = app.add_subcommand("potential", "Sample the Schrodinger potential of a model");
  std::string pmodel;
  std::vector<std::string> pparams;
  int pn = -1, steps = 200, grid = 4001;
  double t_min = NAN, t_max = NAN;
  bool closed = false, with_psi = false, fd = false;
  pot->add_option("--model", pmodel, "Catalog id")->required();
  pot->add_option("--param", pparams, "name=value, repeatable");
  pot->add_option("--n", pn, "Invariant subspace degree")->required()->check(CLI::NonNegativeNumber);
  pot->add_option("--t-min", t_min, "First sample (default: interior sweep range)");
  pot->add_option("--t-max", t_max, "Last sample");
  pot->add_option("--steps", steps, "Number of samples")->check(CLI::PositiveNumber);
  pot->add_flag("--closed-form", closed, "Evaluate the closed-form expression instead of the chain rule");
  pot->add_flag("--psi", with_psi, "Append transformed eigenfunction columns");
  pot->add_flag("--fd-check", fd, "Compare finite-difference levels with the algebraic spectrum");
  pot->add_option("--grid", grid, "Finite-difference grid points")->check(CLI::Range(200, 10000000));
  pot->add_option("--format", pot_c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  pot_c.format = "csv";

  CLI11_PARSE(app, argc, argv);

  if (*list) {
    if (list_k != 0 && list_k != 3 && list_k != 4)
      return fail("list", list_c, ErrorKind::invalid_argument, "--k must be 3 or 4", 2);
    if (list_c.format == "json")
      emit(catalog_json(list_k));
    else
      std::cout << catalog_text(list_k);
    return 0;
  }

  if (*solve) {
    QesProblem prob;
    std::string label;
    bool self_adjoint = true;
    try {
      if (!model.empty()) {
        const CatalogEntry& e = catalog_entry(model);
        prob = instantiate(model, parse_params(params), n);
        label = e.id;
        self_adjoint = e.self_adjoint;
      } else {
        if (A_text.empty() || F_text.empty())
          return fail("solve", solve_c, ErrorKind::invalid_argument, "give --model or both --A and --F", 2);
        MasterSpec spec;
        spec.A = parse_coeff_list(A_text);
        spec.F = parse_coeff_list(F_text);
        spec.interval = parse_interval(interval_text);
        spec.params = parse_params(params);
        spec.fill_F3 = fill_F3;
        ValidationReport v = validate_spec(spec);
        if (!v.ok()) return fail("solve", solve_c, ErrorKind::constraint_violation, v.summary(), 2);
        prob = solve_constraints(spec, n);
        label = "custom";
      }
    } catch (const Error& e) {
      return fail("solve", solve_c, e.kind(), e.what(), 2);
    }
    try {
      RunReport r = run_solve(prob, label, {sopt.N_extra, sopt.tol, self_adjoint});
      if (solve_c.format == "json")
        emit(report_json(r, !solve_c.no_timings));
      else if (solve_c.format == "csv")
        std::cout << report_csv(r);
      else
        std::cout << report_text(r);
      return r.ok() ? 0 : 1;
    } catch (const Error& e) {
      return fail("solve", solve_c, e.kind(), e.what(), solve_exit_code(e.kind()));
    }
  }

  if (*verify) {
    if (!all && vopt.models.empty())
      return fail("verify", verify_c, ErrorKind::invalid_argument, "give --all or --model", 2);
    if (all) vopt.models.clear();
    try {
      VerifyReport r = run_verify(vopt);
      if (verify_c.format == "json")
        emit(verify_json(r, !verify_c.no_timings));
      else
        std::cout << verify_text(r);
      return r.ok() ? 0 : 1;
    } catch (const Error& e) {
      return fail("verify", verify_c, e.kind(), e.what(), 2);
    }
  }

  if (*pot) {
    try {
      const CatalogEntry& e = catalog_entry(pmodel);
      if (e.coord_map.empty())
        return fail("potential", pot_c, ErrorKind::invalid_argument, "model " + pmodel + " has no elementary coordinate map", 2);
      const CoordMap& map = coord_map(e.coord_map);
      if (std::isnan(t_min)) t_min = map.sample_range.lo;
      if (std::isnan(t_max)) t_max = steps == 1 ? t_min : map.sample_range.hi;
      ParamMap pm = parse_params(pparams);
      QesProblem prob = instantiate(pmodel, pm, pn);
      std::optional<RunReport> run;
      if (with_psi || fd) run = run_solve(prob, e.id, {6, 1e-12, e.self_adjoint});
      PotentialProfile prof =
          sample_potential(pmodel, pm, pn, t_min, t_max, steps, closed, with_psi ? &run->spectrum : nullptr);
      std::optional<FdCheck> chk;
      if (fd) chk = fd_check(prob, map, run->spectrum.eigenvalues, grid);
      if (pot_c.format == "json") {
        nlohmann::json j = {{"schema", "qes/1"}, {"command", "potential"}, {"coord_map", map.id}};
        j.update(profile_json(prof));
        if (chk) j["fd_check"] = fd_check_json(*chk);
        emit(j);
      } else {
        std::cout << profile_csv(prof);
        if (chk) std::cout << "\n" << fd_check_csv(*chk);
      }
      if (chk && chk->fd.unreliable_truncation)
        std::cerr << "qes potential: warning: ground state mass near the truncated boundary is " << num(chk->fd.boundary_mass)
                  << "\n";
      return chk && !chk->ok ? 1 : 0;
    } catch (const SingularPoint& e) {
      return fail("potential", pot_c, e.kind(), e.what(), 2, {{"t", num(e.t())}});
    } catch (const Error& e) {
      return fail("potential", pot_c, e.kind(), e.what(), solve_exit_code(e.kind()));
    }
  }
  return 0;
}
