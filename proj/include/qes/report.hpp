#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qes/errors.hpp"
#include "qes/matrix_oracle.hpp"
#include "qes/potential.hpp"
#include "qes/spectrum.hpp"

namespace qes {

struct SolveOptions {
  int N_extra = 6;
  double tol = 1e-12;
  // oscillation and residual failures count only for self-adjoint problems
  bool self_adjoint = true;
};

struct StageTiming {
  std::string stage;
  double ms = 0;
};

struct RunReport {
  std::string model;
  QesProblem problem;
  SolveOptions options;
  EnergySequence sequence;
  SpectrumResult spectrum;
  FactorizationReport factorization;
  OracleReport oracle;
  OscillationReport oscillation;
  ParityResult parity;
  bool spectrum_symmetric = true;
  double residual_bound = 0;  // worst ratio residual / (1e-8 (1 + |E|) max|psi|)
  bool residual_ok = true;
  std::vector<std::string> failures;  // soft verification failures
  std::vector<StageTiming> timings;

  bool ok() const { return failures.empty(); }
};

// constraints -> recursion -> spectrum -> factorization -> oracle.
// Hard failures propagate as Error; soft ones land in `failures`.
RunReport run_solve(const QesProblem& prob, const std::string& model, const SolveOptions& opt = {});

std::string num(double v);  // "%.17g", "inf" and "-inf" spelled out
nlohmann::json poly_json(const RatPoly& p, const std::string& var = "x");
nlohmann::json params_json(const ParamMap& p);
nlohmann::json problem_json(const QesProblem& prob, const std::string& model);

nlohmann::json report_json(const RunReport& r, bool timings = true);
std::string report_csv(const RunReport& r);
std::string report_text(const RunReport& r);

// Registry listing; k_filter > 0 keeps table rows of that order only.
nlohmann::json catalog_json(int k_filter = 0);
std::string catalog_text(int k_filter = 0);

nlohmann::json profile_json(const PotentialProfile& p);
nlohmann::json fd_check_json(const FdCheck& c);
std::string fd_check_csv(const FdCheck& c);

nlohmann::json error_json(const std::string& command, ErrorKind kind, const std::string& message);

// Exit code for a hard error in `solve`.
int solve_exit_code(ErrorKind kind);

}  // namespace qes
