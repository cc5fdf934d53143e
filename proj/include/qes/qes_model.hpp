#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qes/expr.hpp"
#include "qes/poly.hpp"
#include "qes/roots.hpp"

namespace qes {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Second order operator L = -A d2/dx2 - F d/dx + B with F = (A W)'/W.
struct MasterSpec {
  RatPoly A;
  RatPoly F;
  RealInterval interval{0.0, kInf};
  ParamMap params;
  std::vector<Inequality> param_constraints;
  std::string label = "custom";
  // Let solve_constraints write the required x^3 coefficient of F.
  bool fill_F3 = false;

  int k() const;
};

struct QesProblem {
  MasterSpec spec;
  int n = 0;
  RatPoly B;  // B(0) = 0
  std::optional<Rational> weight_constraint_F3;

  // Order used by the recursion: k, raised to 3 for classical (k <= 2) specs.
  int order() const;
};

// Derivatives at zero: A[i] = A^(i)(0), F[i] = F^(i)(0), B[i] = B^(i)(0).
struct TaylorData {
  std::array<Rational, 5> A;
  std::array<Rational, 4> F;
  std::array<Rational, 3> B;
};

TaylorData taylor_data(const QesProblem& prob);

// -A^(i+2)/(i+2)! l(l-1) - F^(i+1)/(i+1)! l + B^(i)/i! = 0
struct ConstraintRow {
  int l = 0;
  int i = 0;
  Rational cA, cF, cB;

  Rational residual(const TaylorData& t) const;
};

std::vector<ConstraintRow> invariance_conditions(int k, int n);

QesProblem solve_constraints(const MasterSpec& spec, int n);

// -A p'' - F p' + B p
RatPoly apply_operator(const QesProblem& prob, const RatPoly& p);

struct ValidationIssue {
  enum class Kind { structural, parameter_range } kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

ValidationReport validate_spec(const MasterSpec& spec);

}  // namespace qes
