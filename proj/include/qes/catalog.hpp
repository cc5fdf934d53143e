#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qes/qes_model.hpp"

namespace qes {

// Parameter values as doubles for the closed-form evaluators.
struct NumParams {
  double alpha = 0, beta = 0, gamma = 0, delta = 0, a = 0, b = 0;
  double n = 0;
  static NumParams from(const ParamMap& p, int n);
};

struct CatalogEntry {
  std::string id;
  int table = 0;  // 0 for potential-only extras
  int row = 0;
  std::string A_display, W_display;
  std::vector<std::string> free_params;
  // ascending coefficient expressions in the parameters, alpha and n
  std::vector<std::string> A_coeffs, F_coeffs;
  std::string alpha_rule;          // normative elimination of alpha (order 4)
  std::string alpha_rule_printed;  // as listed with the table row
  std::string interval_lo, interval_hi;
  std::vector<std::string> constraints;    // printed parameter ranges
  std::vector<std::string> admissibility;  // extra conditions for a real ordered spectrum
  bool self_adjoint = true;
  // printed operator row: coefficients of d2/dx2, d/dx and the B term
  std::vector<std::string> L_second, L_drift, L_B;
  std::vector<std::string> errata;  // selfcheck keys known to differ from the printed row
  std::string exactly_solvable;     // parameter whose vanishing gives a classical model
  std::string coord_map;            // empty when no elementary x(t) exists
  std::string note;
  std::function<double(double x, const NumParams&)> log_W;
  std::function<double(double t, const NumParams&)> V_closed;

  int k() const { return static_cast<int>(A_coeffs.size()) - 1; }
  bool has_closed_form() const { return static_cast<bool>(V_closed); }
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& id);

// Adds alpha from the elimination rule; rejects unknown or missing names.
ParamMap complete_params(const CatalogEntry& e, const ParamMap& user, int n);

struct InstantiateOptions {
  bool check_ranges = true;
  bool admissibility = false;
};

QesProblem instantiate(const std::string& id, const ParamMap& params, int n, const InstantiateOptions& opt = {});

// x-interval endpoints for concrete parameters.
RealInterval entry_interval(const CatalogEntry& e, const ParamMap& params);

struct SelfcheckMismatch {
  std::string key;  // e.g. "drift x^2", "B x^1", "alpha rule"
  std::string printed;
  std::string derived;
};

struct SelfcheckReport {
  std::string id;
  int trials = 0;
  std::vector<SelfcheckMismatch> mismatches;
  std::set<std::string> documented;
  bool exact_match() const { return mismatches.empty(); }
  bool matches_documented() const;
};

SelfcheckReport table_selfcheck(const std::string& id, int trials = 10, std::uint64_t seed = 1);

// Draws p/q with |p| <= 40, 1 <= q <= 8 until every range holds.
std::optional<ParamMap> sample_params(const CatalogEntry& e, int n, std::mt19937_64& rng, bool admissible = true,
                                      int max_tries = 200000);

// Does F'''(0) = -A''''(0)(n-1)/2 hold under `rule` at random points?
struct RuleIdentityReport {
  int points = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return points > 0 && failures == 0; }
};

RuleIdentityReport alpha_rule_identity(const CatalogEntry& e, const std::string& rule, int points, std::uint64_t seed);

double log_weight(const CatalogEntry& e, const ParamMap& params, int n, double x);

// A W tends to zero at each finite endpoint (log A W decreasing toward it).
struct BoundaryReport {
  bool lo_finite = true, hi_finite = true;
  bool lo_decays = false, hi_decays = false;
  bool ok() const { return (!lo_finite || lo_decays) && (!hi_finite || hi_decays); }
};

BoundaryReport boundary_decay(const CatalogEntry& e, const ParamMap& params, int n);

}  // namespace qes
