#include "qes/qes_model.hpp"

#include <algorithm>

#include "qes/errors.hpp"

namespace qes {

int MasterSpec::k() const { return std::max(A.degree(), F.degree() + 1); }

int QesProblem::order() const { return std::max(3, spec.k()); }

TaylorData taylor_data(const QesProblem& prob) {
  TaylorData t;
  for (int i = 0; i < 5; ++i) t.A[static_cast<size_t>(i)] = derivative_at_zero(prob.spec.A, i);
  for (int i = 0; i < 4; ++i) t.F[static_cast<size_t>(i)] = derivative_at_zero(prob.spec.F, i);
  for (int i = 0; i < 3; ++i) t.B[static_cast<size_t>(i)] = derivative_at_zero(prob.B, i);
  return t;
}

Rational ConstraintRow::residual(const TaylorData& t) const {
  Rational a = i + 2 <= 4 ? t.A[static_cast<size_t>(i + 2)] : Rational(0);
  Rational f = i + 1 <= 3 ? t.F[static_cast<size_t>(i + 1)] : Rational(0);
  Rational b = i <= 2 ? t.B[static_cast<size_t>(i)] : Rational(0);
  return cA * a + cF * f + cB * b;
}

std::vector<ConstraintRow> invariance_conditions(int k, int n) {
  if (k < 3 || k > 4) throw Error(ErrorKind::unsupported_order, "invariance conditions need 3 <= k <= 4, got k=" + std::to_string(k));
  if (n < 0) throw Error(ErrorKind::invalid_argument, "level n must be non-negative");
  auto row = [](int l, int i) {
    ConstraintRow r;
    r.l = l;
    r.i = i;
    r.cA = -Rational(l) * (l - 1) / factorial(i + 2);
    r.cF = -Rational(l) / factorial(i + 1);
    r.cB = Rational(1) / factorial(i);
    return r;
  };
  std::vector<ConstraintRow> rows{row(n, 1)};
  if (k == 4) {
    rows.push_back(row(n, 2));
    rows.push_back(row(n - 1, 2));
  }
  return rows;
}

namespace {

void check_structure(const MasterSpec& spec) {
  auto rep = validate_spec(spec);
  for (const auto& is : rep.issues) {
    if (is.kind != ValidationIssue::Kind::structural) continue;
    ErrorKind kind = ErrorKind::invalid_argument;
    if (spec.F.coeff(0) == 0) kind = ErrorKind::degenerate_spec;
    if (spec.k() > 4) kind = ErrorKind::unsupported_order;
    throw Error(kind, is.message);
  }
}

}  // namespace

QesProblem solve_constraints(const MasterSpec& spec, int n) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "level n must be non-negative");
  MasterSpec s = spec;
  if (s.fill_F3 && s.A.degree() == 4) {
    std::vector<Rational> f(4);
    for (int i = 0; i < 4; ++i) f[static_cast<size_t>(i)] = s.F.coeff(i);
    Rational A4 = derivative_at_zero(s.A, 4);
    f[3] = -A4 * (n - 1) / 2 / 6;
    s.F = RatPoly(std::move(f));
    s.fill_F3 = false;
  }
  check_structure(s);

  QesProblem prob;
  prob.spec = s;
  prob.n = n;
  const Rational A3 = derivative_at_zero(s.A, 3);
  const Rational A4 = derivative_at_zero(s.A, 4);
  const Rational F2 = derivative_at_zero(s.F, 2);
  const Rational F3 = derivative_at_zero(s.F, 3);
  Rational B1 = Rational(n) / 2 * (A3 * (n - 1) / 3 + F2);
  Rational B2(0);
  if (s.k() == 4) {
    Rational need = -A4 * (n - 1) / 2;
    if (F3 != need)
      throw Error(ErrorKind::infeasible_weight, "weight constraint violated: F'''(0) = " + to_string(F3) +
                                                    " but level n=" + std::to_string(n) + " requires " + to_string(need));
    B2 = -A4 * n * (n - 1) / 12;
    prob.weight_constraint_F3 = need;
  }
  prob.B = RatPoly{Rational(0), B1, B2 / 2};
  return prob;
}

RatPoly apply_operator(const QesProblem& prob, const RatPoly& p) {
  return -(prob.spec.A * poly_derivative(p, 2)) - prob.spec.F * poly_derivative(p, 1) + prob.B * p;
}

std::string ValidationReport::summary() const {
  std::string s;
  for (const auto& is : issues) {
    if (!s.empty()) s += "; ";
    s += is.message;
  }
  return s.empty() ? "ok" : s;
}

ValidationReport validate_spec(const MasterSpec& spec) {
  ValidationReport rep;
  auto structural = [&](const std::string& m) { rep.issues.push_back({ValidationIssue::Kind::structural, m}); };
  if (spec.A.degree() < 1 || spec.A.degree() > 4)
    structural("master function degree must be 1..4, got " + std::to_string(spec.A.degree()));
  if (spec.A.coeff(0) != 0) structural("master function must vanish at x=0, A(0) = " + to_string(spec.A.coeff(0)));
  if (spec.F.coeff(0) == 0) structural("F(0) must be nonzero");
  if (spec.F.degree() > 3) structural("F degree must be at most 3, got " + std::to_string(spec.F.degree()));
  if (spec.k() > 4) structural("order k=" + std::to_string(spec.k()) + " exceeds 4");
  if (!(spec.interval.lo < spec.interval.hi)) structural("empty interval");
  for (const auto& c : spec.param_constraints) {
    bool ok = false;
    try {
      ok = c.holds(spec.params);
    } catch (const Error& e) {
      rep.issues.push_back({ValidationIssue::Kind::parameter_range, c.text() + ": " + e.what()});
      continue;
    }
    if (!ok) rep.issues.push_back({ValidationIssue::Kind::parameter_range, "violated: " + c.text()});
  }
  return rep;
}

}  // namespace qes
