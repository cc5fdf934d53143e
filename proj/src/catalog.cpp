#include "qes/catalog.hpp"

#include <cmath>

#include "qes/errors.hpp"

namespace qes {

NumParams NumParams::from(const ParamMap& p, int n) {
  auto get = [&](const char* k) {
    auto it = p.find(k);
    return it == p.end() ? 0.0 : to_double(it->second);
  };
  NumParams v;
  v.alpha = get("alpha");
  v.beta = get("beta");
  v.gamma = get("gamma");
  v.delta = get("delta");
  v.a = get("a");
  v.b = get("b");
  v.n = n;
  return v;
}

namespace {

using std::cos;
using std::cosh;
using std::exp;
using std::log;
using std::sin;
using std::sinh;

// closed-form potentials in the t variable, B(0) = 0 gauge

double V_x(double t, const NumParams& p) {
  const double al = p.alpha, be = p.beta, ga = p.gamma, n = p.n;
  const double t2 = t * t;
  return be / 2 * (al + 1) + (al * al - 0.25) / t2 + 0.5 * (be * be / 8 + ga * (n + 1 + al / 2)) * t2 +
         be * ga / 16 * t2 * t2 + ga * ga / 64 * t2 * t2 * t2;
}

double V_x2(double t, const NumParams& p) {
  const double al = p.alpha, be = p.beta, ga = p.gamma, n = p.n;
  return 0.25 * (1 + al * al - 2 * be * ga + 2 * al - 2 * al * be * exp(-t) + be * be * exp(-2 * t) +
                 ga * ga * exp(2 * t) + 2 * (2 * ga + 2 * n * ga + al * ga) * exp(t));
}

double V_x1mx(double t, const NumParams& p) {
  const double al = p.alpha, be = p.beta, ga = p.gamma, n = p.n;
  const double s = sin(t), c = cos(t);
  return 0.5 * (n * ga - al * be - be - al + 0.5 * (be * ga - al * al - be * be - al * ga - 1) +
                (al * ga / 2 + ga + be * ga / 2 + n * ga) * s) +
         0.5 * (al * al + be * be - 0.5 + (be * be - al * al) * s) / (c * c) + ga * ga / 16 * c * c;
}

double V_x3(double t, const NumParams& p) {
  const double al = p.alpha, be = p.beta, ga = p.gamma, n = p.n;
  const double t2 = t * t;
  return ga / 2 * (al + 1) + (15.0 / 4 + al * al + 4 * n * al + 4 * al + 4 * n * n + 8 * n) / t2 +
         0.25 * (al * be + ga * ga / 4) * t2 + be * ga / 16 * t2 * t2 + be * be / 64 * t2 * t2 * t2;
}

double V_x2_1mx(double t, const NumParams& p) {
  const double al = p.alpha, be = p.beta, ga = p.gamma, n = p.n;
  const double ch = cosh(t);
  const double body =
      -(2 * n * n + 2 + 2 * n * al + al * al / 2 + 4 * n + al * be + 2 * al + al * ga / 4 + 2 * n * be + 2 * be) * ch +
      0.5 * (-ga * ga / 4 - al * ga / 2 + 0.5 - ga + al - be * ga + al * al / 2) * ch * ch + al * ga / 4 * ch * ch * ch +
      ga * ga / 16 * ch * ch * ch * ch +
      (ga / 2 + 4 * n + al * be + 1.5 * al + be * be + 2 * be + 1.5 + al * al / 4 + al * ga / 4 + be * ga / 2 +
       ga * ga / 16 + 2 * n * be + 2 * n * n + 2 * n * al);
  return body / (ch * ch - 1);
}

double V_x4(double t, const NumParams& p) {
  const double be = p.beta, ga = p.gamma, de = p.delta, n = p.n;
  return (de * de / 4 + ga + 2 * n * ga) + (ga * de + 3 * n * be + 3 * be) * t + (1.5 * be * de + ga * ga) * t * t +
         3 * be * ga * t * t * t + 2.25 * be * be * t * t * t * t;
}

double V_x3_1mx(double t, const NumParams& p) {
  const double be = p.beta, ga = p.gamma, de = p.delta, n = p.n;
  const double t2 = t * t;
  return -(ga / 2 + de + be * de + be * ga / 2 + n * ga) + (be * be - 0.25) / t2 +
         0.5 * (-n * de + de * de / 2 - be * de / 2 - de + ga * ga / 8 + ga * de / 2) * t2 +
         de / 8 * (ga / 2 + de) * t2 * t2 + de * de / 64 * t2 * t2 * t2;
}

double V_x2_1px2(double t, const NumParams& p) {
  const double be = p.beta, ga = p.gamma, de = p.delta, n = p.n;
  const double sh = sinh(t), ch = cosh(t);
  return (n + n * n - ga * de / 2 + 0.25 + 2 * n * be + be + be * be - (n * ga + ga + be * ga) * sh) +
         (de * de / 4 + be * de * sh - be * be + 0.25) / (ch * ch) + ga * ga / 4 * ch * ch;
}

double V_x2_1mx2(double t, const NumParams& p) {
  const double be = p.beta, ga = p.gamma, de = p.delta, n = p.n;
  const double ch = cosh(t);
  const double body =
      (-ga / 2 - n - be / 2 + ga * ga / 4 + de * de / 4 - be * ga / 2 - be * de / 2 + ga * de / 2 - 0.5 - n * be +
       be * be / 4 - n * ga - n * n) +
      (be * de / 2 + n * be - ga * de / 2 + n * ga + ga / 2 + 0.25 + be / 2 + be * ga / 2 - de * de / 2 + n * n +
       be * be / 4 + n + ga * ga / 4) *
          ch * ch +
      (-ga * de / 2 - n * de - de - ga * ga / 2 - be * de / 2 + be * be / 2) * ch +
      (de + n * de + be * de / 2 + ga * de / 2) * ch * ch * ch + de * de / 4 * ch * ch * ch * ch;
  return body / (ch * ch - 1);
}

double V_x2_1mx_2(double t, const NumParams& p) {
  const double be = p.beta, ga = p.gamma, de = p.delta, n = p.n;
  // S_k = exp(-2 (k t / 2 + gamma e^-t + gamma + delta (e^t + 1))); only ratios S_k / S_6 enter
  auto logS = [&](int k) { return -2 * (k * t / 2 + (ga * exp(-t) + ga + de * (exp(t) + 1))); };
  auto S = [&](int k) { return exp(logS(k) - logS(6)); };
  const double c4 = de * de / 4;
  const double c5 = de * (de - be / 2);
  const double c6 = 0.25 - ga * de / 2 + n * n + be * be / 4 - n * ga + be / 2 + n - 2 * be * de + 1.5 * de * de + n * be;
  const double c7 = -3 * be * de + be * ga / 2 - 3 * n * ga + ga + 4 * n + de * de - 2 * ga * de + be * be + 1 +
                    4 * n * n + 2 * be + 4 * n * be;
  const double c8 = 3 * be + 6 * n + 1.5 * be * be - 3 * ga * de + 1.5 + de * de / 4 + ga * ga / 4 + 6 * n * n -
                    2 * be * de + 4 * ga + 6 * n * be + 2 * be * ga - 2 * n * ga;
  const double c9 = 4 * n * n - be * de / 2 - 2 * ga * de + 3 * be * ga + 1 + 2 * n * ga + 4 * n + be * be + 2 * be +
                    ga * ga + 6 * ga + 4 * n * be;
  const double c10 = -ga * de / 2 + 1.5 * ga * ga + 4 * ga + n + 2 * be * ga + 3 * n * ga + 0.25 + be * be / 4 + be / 2 +
                     n * be + n * n;
  const double c11 = n * ga + ga * ga + be * ga / 2 + ga;
  const double c12 = ga * ga / 4;
  const double body = c4 * S(4) + c5 * S(5) + c6 * S(6) + c7 * S(7) + c8 * S(8) + c9 * S(9) + c10 * S(10) +
                      c11 * S(11) + c12 * S(12);
  const double q = exp(-t) + 1;
  return body / (q * q * q * q);
}

double L(double x) { return log(x); }

std::vector<CatalogEntry> build_registry() {
  std::vector<CatalogEntry> reg;
  auto add = [&](CatalogEntry e) { reg.push_back(std::move(e)); };

  {
    CatalogEntry e;
    e.id = "T1.x";
    e.table = 1, e.row = 1;
    e.A_display = "x";
    e.W_display = "x^alpha exp(beta x + gamma x^2)";
    e.free_params = {"alpha", "beta", "gamma"};
    e.A_coeffs = {"0", "1"};
    e.F_coeffs = {"alpha+1", "beta", "2*gamma"};
    e.interval_lo = "0", e.interval_hi = "inf";
    e.constraints = {"alpha > -1", "gamma < 0"};
    e.L_second = {"0", "-1"};
    e.L_drift = {"-(alpha+1)", "-beta", "-2*gamma"};
    e.L_B = {"0", "2*n*gamma"};
    e.exactly_solvable = "gamma";
    e.coord_map = "t^2/4";
    e.log_W = [](double x, const NumParams& p) { return p.alpha * L(x) + p.beta * x + p.gamma * x * x; };
    e.V_closed = V_x;
    add(e);
  }
  {
    CatalogEntry e;
    e.id = "T1.x2";
    e.table = 1, e.row = 2;
    e.A_display = "x^2";
    e.W_display = "x^alpha exp(beta/x + gamma x)";
    e.free_params = {"alpha", "beta", "gamma"};
    e.A_coeffs = {"0", "0", "1"};
    e.F_coeffs = {"-beta", "alpha+2", "gamma"};
    e.interval_lo = "0", e.interval_hi = "inf";
    e.constraints = {"beta < 0", "gamma < 0"};
    e.L_second = {"0", "0", "-1"};
    e.L_drift = {"beta", "-(alpha+2)", "-gamma"};
    e.L_B = {"0", "n*gamma"};
    e.exactly_solvable = "gamma";
    e.coord_map = "e^t";
    e.log_W = [](double x, const NumParams& p) { return p.alpha * L(x) + p.beta / x + p.gamma * x; };
    e.V_closed = V_x2;
    add(e);
  }
  {
    CatalogEntry e;
    e.id = "T1.x(1-x)";
    e.table = 1, e.row = 3;
    e.A_display = "x(1-x)";
    e.W_display = "x^alpha (1-x)^beta exp(-gamma x)";
    e.free_params = {"alpha", "beta", "gamma"};
    e.A_coeffs = {"0", "1", "-1"};
    e.F_coeffs = {"alpha+1", "-(alpha+beta+gamma+2)", "gamma"};
    e.interval_lo = "0", e.interval_hi = "1";
    e.constraints = {"alpha > -1", "beta > -1"};
    e.L_second = {"0", "-1", "1"};
    e.L_drift = {"-alpha-1", "alpha+beta+gamma+2", "-gamma"};
    e.L_B = {"0", "n*gamma"};
    e.exactly_solvable = "gamma";
    e.coord_map = "(1+sin t)/2";
    e.log_W = [](double x, const NumParams& p) { return p.alpha * L(x) + p.beta * L(1 - x) - p.gamma * x; };
    e.V_closed = V_x1mx;
    add(e);
  }
  {
    CatalogEntry e;
    e.id = "T1.x3";
    e.table = 1, e.row = 4;
    e.A_display = "x^3";
    e.W_display = "x^alpha exp(-beta/x^2 - gamma/x)";
    e.free_params = {"alpha", "beta", "gamma"};
    e.A_coeffs = {"0", "0", "0", "1"};
    e.F_coeffs = {"2*beta", "gamma", "alpha+3"};
    e.interval_lo = "0", e.interval_hi = "inf";
    e.constraints = {"alpha < -3", "beta > 0"};
    e.admissibility = {"alpha < -2*n-2"};
    e.L_second = {"0", "0", "0", "-1"};
    e.L_drift = {"-2*beta", "-gamma", "-(alpha+3)"};
    e.L_B = {"0", "n*(n+alpha+2)"};
    e.coord_map = "4/t^2";
    e.note = "x^(2n) W must be integrable at infinity, hence alpha < -2n-2";
    e.log_W = [](double x, const NumParams& p) { return p.alpha * L(x) - p.beta / (x * x) - p.gamma / x; };
    e.V_closed = V_x3;
    add(e);
  }
  {
    CatalogEntry e;
    e.id = "T1.x2(1-x)";
    e.table = 1, e.row = 5;
    e.A_display = "x^2(1-x)";
    e.W_display = "x^alpha (1-x)^beta exp(-gamma/x)";
    e.free_params = {"alpha", "beta", "gamma"};
    e.A_coeffs = {"0", "0", "1", "-1"};
    e.F_coeffs = {"gamma", "alpha-gamma+2", "-(alpha+beta+3)"};
    e.interval_lo = "0", e.interval_hi = "1";
    e.constraints = {"beta > -1", "gamma > 0"};
    e.L_second = {"0", "0", "-1", "1"};
    e.L_drift = {"-gamma", "gamma-alpha-2", "alpha+beta+3"};
    e.L_B = {"0", "-n*(n+alpha+beta+2)"};
    e.coord_map = "1-tanh^2(t/2)";
    e.log_W = [](double x, const NumParams& p) { return p.alpha * L(x) + p.beta * L(1 - x) - p.gamma / x; };
    e.V_closed = V_x2_1mx;
    add(e);
  }
  {
    CatalogEntry e;
    e.id = "T1.x(1+x2)";
    e.table = 1, e.row = 6;
    e.A_display = "x(1+x^2)";
    e.W_display = "x^alpha (1+x^2)^beta exp(gamma atan x)";
    e.free_params = {"alpha", "beta", "gamma"};
    e.A_coeffs = {"0", "1", "0", "1"};
    e.F_coeffs = {"alpha+1", "gamma", "alpha+2*beta+3"};
    e.interval_lo = "0", e.interval_hi = "inf";
    e.constraints = {"alpha > -1", "beta < -(alpha+3)/2"};
    e.admissibility = {"alpha + 2*beta + 2*n + 2 < 0"};
    e.L_second = {"0", "-1", "0", "-1"};
    e.L_drift = {"-(alpha+1)", "-gamma", "-(alpha+2*beta+3)"};
    e.L_B = {"0", "n*(n+alpha+2*beta+2)"};
    e.note = "x^(2n) W must be integrable at infinity, hence alpha + 2 beta + 2n + 2 < 0";
    e.log_W = [](double x, const NumParams& p) {
      return p.alpha * L(x) + p.beta * L(1 + x * x) + p.gamma * std::atan(x);
    };
    add(e);
  }
  {
    CatalogEntry e;
    e.id = "T1.heun";
    e.table = 1, e.row = 7;
    e.A_display = "x(1-x)(a-x)";
    e.W_display = "x^alpha (1-x)^beta (a-x)^gamma";
    e.free_params = {"a", "alpha", "beta", "gamma"};
    e.A_coeffs = {"0", "a", "-(a+1)", "1"};
    e.F_coeffs = {"a*(alpha+1)", "-(a*alpha+a*beta+2*a+alpha+gamma+2)", "alpha+beta+gamma+3"};
    e.interval_lo = "0", e.interval_hi = "1";
    e.constraints = {"a > 1", "alpha > -1", "beta > -1"};
    e.L_second = {"0", "-a", "a+1", "-1"};
    e.L_drift = {"-a*(alpha+1)", "(a+1)*(alpha+2)+a*beta+gamma", "-(alpha+beta+gamma+3)"};
    e.L_B = {"0", "n*(n+alpha+beta+gamma+2)"};
    e.log_W = [](double x, const NumParams& p) {
      return p.alpha * L(x) + p.beta * L(1 - x) + p.gamma * L(p.a - x);
    };
    add(e);
  }
  {
    CatalogEntry e;
    e.id = "T2.x4";
    e.table = 2, e.row = 1;
    e.A_display = "x^4";
    e.W_display = "x^alpha exp(beta/x^3 + gamma/x^2 + delta/x)";
    e.free_params = {"beta", "gamma", "delta"};
    e.A_coeffs = {"0", "0", "0", "0", "1"};
    e.F_coeffs = {"-3*beta", "-2*gamma", "-delta", "alpha+4"};
    e.alpha_rule = e.alpha_rule_printed = "-2*(n+1)";
    e.interval_lo = "0", e.interval_hi = "inf";
    e.constraints = {"beta < 0"};
    e.self_adjoint = false;
    e.L_second = {"0", "0", "0", "0", "-1"};
    e.L_drift = {"3*beta", "2*gamma", "delta", "-(alpha+4)"};
    e.L_B = {"0", "-n*delta", "-n*(n-1)"};
    e.coord_map = "1/t";
    e.note = "A W x^(2n-1) tends to a nonzero limit at infinity under the alpha rule; L is not symmetric there";
    e.log_W = [](double x, const NumParams& p) {
      return p.alpha * L(x) + p.beta / (x * x * x) + p.gamma / (x * x) + p.delta / x;
    };
    e.V_closed = V_x4;
    add(e);
  }
  {
    CatalogEntry e;
    e.id = "T2.x3(1-x)";
    e.table = 2, e.row = 2;
    e.A_display = "x^3(1-x)";
    e.W_display = "x^alpha (1-x)^beta exp(-gamma/x - delta/x^2)";
    e.free_params = {"beta", "gamma", "delta"};
    e.A_coeffs = {"0", "0", "0", "1", "-1"};
    e.F_coeffs = {"2*delta", "gamma-2*delta", "alpha-gamma+3", "-(alpha+beta+4)"};
    e.alpha_rule = e.alpha_rule_printed = "-2*(n+1)-beta";
    e.interval_lo = "0", e.interval_hi = "1";
    e.constraints = {"beta > -1", "delta > 0"};
    e.L_second = {"0", "0", "0", "-1", "1"};
    e.L_drift = {"-2*delta", "2*delta-gamma", "gamma-alpha-3", "alpha+beta+4"};
    e.L_B = {"0", "n*(n+alpha-gamma+2)", "n*(n-1)"};
    e.coord_map = "4/(4+t^2)";
    e.log_W = [](double x, const NumParams& p) {
      return p.alpha * L(x) + p.beta * L(1 - x) - p.gamma / x - p.delta / (x * x);
    };
    e.V_closed = V_x3_1mx;
    add(e);
  }
  {
    CatalogEntry e;
    e.id = "T2.x2(1+x2)";
    e.table = 2, e.row = 3;
    e.A_display = "x^2(1+x^2)";
    e.W_display = "x^alpha (1+x^2)^beta exp(gamma/x + delta atan x)";
    e.free_params = {"beta", "gamma", "delta"};
    e.A_coeffs = {"0", "0", "1", "0", "1"};
    e.F_coeffs = {"-gamma", "alpha+2", "delta-gamma", "alpha+2*beta+4"};
    e.alpha_rule = e.alpha_rule_printed = "-2*(n+beta+1)";
    e.interval_lo = "0", e.interval_hi = "inf";
    e.constraints = {"gamma < 0"};
    e.self_adjoint = false;
    e.L_second = {"0", "0", "-1", "0", "-1"};
    e.L_drift = {"gamma", "-(alpha+2)", "gamma-delta", "-(alpha+2*beta+4)"};
    e.L_B = {"0", "n*(delta-gamma)", "-n*(n-1)"};
    e.coord_map = "-1/sinh t";
    e.note = "A W x^(2n-1) tends to a nonzero limit at infinity under the alpha rule; L is not symmetric there";
    e.log_W = [](double x, const NumParams& p) {
      return p.alpha * L(x) + p.beta * L(1 + x * x) + p.gamma / x + p.delta * std::atan(x);
    };
    e.V_closed = V_x2_1px2;
    add(e);
  }
  {
    CatalogEntry e;
    e.id = "T2.x2(1-x)(a-x)";
    e.table = 2, e.row = 4;
    e.A_display = "x^2(1-x)(a-x)";
    e.W_display = "x^alpha (1-x)^beta (a-x)^gamma exp(delta/x)";
    e.free_params = {"a", "beta", "gamma", "delta"};
    e.A_coeffs = {"0", "0", "a", "-(a+1)", "1"};
    e.F_coeffs = {"-a*delta", "a*alpha+a*delta+2*a+delta", "-(a*alpha+a*beta+3*a+alpha+delta+gamma+3)",
                  "alpha+beta+gamma+4"};
    e.alpha_rule = e.alpha_rule_printed = "-2*(n+1)-beta-gamma";
    e.interval_lo = "0", e.interval_hi = "1";
    e.constraints = {"a > 1", "beta > -1", "delta < 0"};
    e.L_second = {"0", "0", "-a", "a+1", "-1"};
    e.L_drift = {"a*delta", "-(a*alpha+(a+1)*delta+2*a)", "-((a+1)*alpha+a*beta+gamma+delta+3*(a+1))",
                 "-(alpha+beta+gamma+4)"};
    e.L_B = {"0", "n*((alpha-n+4)*(a+1)+a*beta+gamma+delta)", "-n*(n-1)"};
    e.errata = {"drift x^2", "B x^1"};
    e.note = "printed row: x^2 drift has the wrong overall sign and the x term of B differs";
    e.log_W = [](double x, const NumParams& p) {
      return p.alpha * L(x) + p.beta * L(1 - x) + p.gamma * L(p.a - x) + p.delta / x;
    };
    add(e);
  }
  {
    CatalogEntry e;
    e.id = "T2.x2(1-x)2";
    e.table = 2, e.row = 5;
    e.A_display = "x^2(1-x)^2";
    e.W_display = "x^alpha (1-x)^beta exp(gamma/x + delta/(1-x))";
    e.free_params = {"beta", "gamma", "delta"};
    e.A_coeffs = {"0", "0", "1", "-2", "1"};
    e.F_coeffs = {"-gamma", "alpha+2*gamma+2", "-2*alpha-beta+delta-gamma-6", "alpha+beta+4"};
    e.alpha_rule = e.alpha_rule_printed = "-2*(n+1)-beta";
    e.interval_lo = "0", e.interval_hi = "1";
    e.constraints = {"gamma < 0", "delta < 0"};
    e.L_second = {"0", "0", "-1", "2", "-1"};
    e.L_drift = {"gamma", "-(alpha+2*gamma+2)", "2*alpha+beta+gamma-delta+6", "-(alpha+beta+4)"};
    e.L_B = {"0", "-n*(2*n+2*alpha+beta+gamma-delta+4)", "-n*(n-1)"};
    e.coord_map = "e^t/(1+e^t)";
    e.log_W = [](double x, const NumParams& p) {
      return p.alpha * L(x) + p.beta * L(1 - x) + p.gamma / x + p.delta / (1 - x);
    };
    e.V_closed = V_x2_1mx_2;
    add(e);
  }
  {
    CatalogEntry e;
    e.id = "T2.x(a-x)(1+x2)";
    e.table = 2, e.row = 6;
    e.A_display = "x(a-x)(1+x^2)";
    e.W_display = "x^alpha (a-x)^beta (1+x^2)^gamma exp(delta atan x)";
    e.free_params = {"a", "beta", "gamma", "delta"};
    e.A_coeffs = {"0", "a", "-1", "a", "-1"};
    e.F_coeffs = {"a*(alpha+1)", "a*delta-alpha-beta-2", "a*alpha+2*a*gamma+3*a-delta", "-(alpha+beta+2*gamma+4)"};
    e.alpha_rule = e.alpha_rule_printed = "-2*(n+1)-beta-2*gamma";
    e.interval_lo = "0", e.interval_hi = "a";
    e.constraints = {"a > 0", "-1 < beta < -2*n-2*gamma-1"};
    e.L_second = {"0", "-a", "1", "-a", "1"};
    e.L_drift = {"-a*(alpha+1)", "alpha+beta-a*(delta-2)", "-(a*(alpha+2*gamma+3)-delta)", "alpha+beta+2*gamma+4"};
    e.L_B = {"0", "n*(a*(n+alpha+2*gamma+2)-delta)", "n*(n-1)"};
    e.errata = {"drift x^1"};
    e.note = "printed row: x drift carries 2a where the derived operator has 2";
    e.log_W = [](double x, const NumParams& p) {
      return p.alpha * L(x) + p.beta * L(p.a - x) + p.gamma * L(1 + x * x) + p.delta * std::atan(x);
    };
    add(e);
  }
  {
    CatalogEntry e;
    e.id = "T2.x(1-x)(a-x)(b-x)";
    e.table = 2, e.row = 7;
    e.A_display = "x(1-x)(a-x)(b-x)";
    e.W_display = "x^alpha (1-x)^beta (a-x)^gamma (b-x)^delta";
    e.free_params = {"a", "b", "beta", "gamma", "delta"};
    e.A_coeffs = {"0", "a*b", "-(a*b+a+b)", "a+b+1", "-1"};
    e.F_coeffs = {"a*b*(alpha+1)",
                  "-(a*b*alpha+a*alpha+a*b*beta+2*a*b+a*delta+2*a+alpha*b+b*gamma+2*b)",
                  "a*alpha+a*beta+a*delta+3*a+alpha*b+alpha+b*beta+b*gamma+3*b+delta+gamma+3",
                  "-(alpha+beta+gamma+delta+4)"};
    e.alpha_rule = "-2*(n+1)-beta-gamma-delta";
    e.alpha_rule_printed = "-2*(n+1)-beta-gamma";
    e.interval_lo = "0", e.interval_hi = "1";
    e.constraints = {"1 < a < b", "-1 < beta < 2*n-gamma-1"};
    e.admissibility = {"alpha > -1"};
    e.L_second = {"0", "-a*b", "a*b+a+b", "-(a+b+1)", "1"};
    e.L_drift = {"-a*b*(alpha+1)", "2*(a+b+a*b)+a*b*(alpha+beta)+b*(alpha+gamma)+a*(alpha+delta)",
                 "-((a+b)*(alpha+beta+3)+(a+1)*delta+alpha+gamma+3)", "alpha+beta+gamma+4"};
    e.L_B = {"0", "n*((a+b)*(alpha+beta+n+2)+(a+1)*delta+alpha+gamma+n+2)", "n*(n-1)"};
    e.errata = {"drift x^2", "drift x^3", "B x^1", "alpha rule"};
    e.note = "printed row omits delta from the x^3 drift and the alpha rule and b*gamma from the x^2 drift and B";
    e.log_W = [](double x, const NumParams& p) {
      return p.alpha * L(x) + p.beta * L(1 - x) + p.gamma * L(p.a - x) + p.delta * L(p.b - x);
    };
    add(e);
  }
  {
    CatalogEntry e;
    e.id = "P.x2(1-x2)";
    e.table = 0, e.row = 0;
    e.A_display = "x^2(1-x^2)";
    e.W_display = "x^alpha (1-x)^beta (1+x)^gamma exp(delta/x)";
    e.free_params = {"beta", "gamma", "delta"};
    e.A_coeffs = {"0", "0", "1", "0", "-1"};
    e.F_coeffs = {"-delta", "alpha+2", "gamma-beta+delta", "-(alpha+beta+gamma+4)"};
    e.alpha_rule = e.alpha_rule_printed = "-2*(n+1)-beta-gamma";
    e.interval_lo = "0", e.interval_hi = "1";
    e.constraints = {"beta > -1", "delta < 0"};
    e.coord_map = "1/cosh t";
    e.note = "potential-only entry; weight reconstructed from its closed-form potential";
    e.log_W = [](double x, const NumParams& p) {
      return p.alpha * L(x) + p.beta * L(1 - x) + p.gamma * L(1 + x) + p.delta / x;
    };
    e.V_closed = V_x2_1mx2;
    add(e);
  }
  return reg;
}

Rational eval_text(const std::string& s, const ParamMap& env) { return Expr::parse(s).eval(env); }

RatPoly poly_from(const std::vector<std::string>& coeffs, const ParamMap& env) {
  std::vector<Rational> v;
  for (const auto& c : coeffs) v.push_back(eval_text(c, env));
  return RatPoly(std::move(v));
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 8);
  int p = num(rng);
  int q = den(rng);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> reg = build_registry();
  return reg;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw Error(ErrorKind::unknown_id, "unknown catalog id '" + id + "'");
}

ParamMap complete_params(const CatalogEntry& e, const ParamMap& user, int n) {
  ParamMap p;
  for (const auto& [k, v] : user) {
    bool known = false;
    for (const auto& f : e.free_params) known |= f == k;
    if (k == "alpha" && !e.alpha_rule.empty()) known = true;
    if (!known) throw Error(ErrorKind::invalid_argument, "model " + e.id + " has no parameter '" + k + "'");
    p[k] = v;
  }
  for (const auto& f : e.free_params)
    if (!p.count(f)) throw Error(ErrorKind::invalid_argument, "model " + e.id + " needs parameter '" + f + "'");
  p["n"] = n;
  if (!e.alpha_rule.empty()) {
    Rational alpha = eval_text(e.alpha_rule, p);
    auto it = user.find("alpha");
    if (it != user.end() && it->second != alpha)
      throw Error(ErrorKind::constraint_violation, "alpha is fixed by " + e.alpha_rule + " = " + to_string(alpha) + " for model " + e.id);
    p["alpha"] = alpha;
  }
  return p;
}

RealInterval entry_interval(const CatalogEntry& e, const ParamMap& params) {
  auto end = [&](const std::string& s) { return s == "inf" ? kInf : to_double(eval_text(s, params)); };
  return {end(e.interval_lo), end(e.interval_hi)};
}

QesProblem instantiate(const std::string& id, const ParamMap& params, int n, const InstantiateOptions& opt) {
  const CatalogEntry& e = catalog_entry(id);
  if (n < 0) throw Error(ErrorKind::invalid_argument, "level n must be non-negative");
  ParamMap env = complete_params(e, params, n);
  MasterSpec spec;
  spec.label = e.id;
  spec.A = poly_from(e.A_coeffs, env);
  spec.F = poly_from(e.F_coeffs, env);
  spec.interval = entry_interval(e, env);
  spec.params = env;
  for (const auto& c : e.constraints) spec.param_constraints.push_back(Inequality::parse(c));
  if (opt.admissibility)
    for (const auto& c : e.admissibility) spec.param_constraints.push_back(Inequality::parse(c));
  if (opt.check_ranges) {
    for (const auto& c : spec.param_constraints)
      if (!c.holds(env)) throw Error(ErrorKind::constraint_violation, "model " + e.id + ": parameter range violated: " + c.text());
  } else {
    spec.param_constraints.clear();
  }
  return solve_constraints(spec, n);
}

bool SelfcheckReport::matches_documented() const {
  std::set<std::string> seen;
  for (const auto& m : mismatches) seen.insert(m.key);
  return seen == documented;
}

namespace {

std::string coeff_key(const char* what, size_t i) { return std::string(what) + " x^" + std::to_string(i); }

}  // namespace

SelfcheckReport table_selfcheck(const std::string& id, int trials, std::uint64_t seed) {
  const CatalogEntry& e = catalog_entry(id);
  SelfcheckReport rep;
  rep.id = id;
  rep.documented = std::set<std::string>(e.errata.begin(), e.errata.end());
  if (e.L_drift.empty()) return rep;
  std::mt19937_64 rng(seed);
  std::set<std::string> recorded;
  auto record = [&](const std::string& key, const std::string& printed, const std::string& derived) {
    if (recorded.insert(key).second) rep.mismatches.push_back({key, printed, derived});
  };
  for (int t = 0; t < trials; ++t) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto sampled = sample_params(e, n, rng, false);
    if (!sampled) continue;
    ++rep.trials;
    ParamMap env = *sampled;
    QesProblem prob = instantiate(id, env, n);
    ParamMap full = prob.spec.params;
    for (size_t i = 0; i < e.L_second.size(); ++i) {
      Rational printed = eval_text(e.L_second[i], full);
      Rational derived = -prob.spec.A.coeff(static_cast<int>(i));
      if (printed != derived) record(coeff_key("second", i), e.L_second[i], to_string(derived));
    }
    for (size_t i = 0; i < std::max<size_t>(e.L_drift.size(), 4); ++i) {
      Rational printed = i < e.L_drift.size() ? eval_text(e.L_drift[i], full) : Rational(0);
      Rational derived = -prob.spec.F.coeff(static_cast<int>(i));
      if (printed != derived)
        record(coeff_key("drift", i), i < e.L_drift.size() ? e.L_drift[i] : "0", "-(" + (i < e.F_coeffs.size() ? e.F_coeffs[i] : "0") + ")");
    }
    for (size_t i = 0; i < 3; ++i) {
      Rational printed = i < e.L_B.size() ? eval_text(e.L_B[i], full) : Rational(0);
      Rational derived = prob.B.coeff(static_cast<int>(i));
      if (printed != derived) record(coeff_key("B", i), i < e.L_B.size() ? e.L_B[i] : "0", prob.B.to_string());
    }
    if (!e.alpha_rule.empty() && eval_text(e.alpha_rule_printed, full) != eval_text(e.alpha_rule, full))
      record("alpha rule", e.alpha_rule_printed, e.alpha_rule);
  }
  return rep;
}

std::optional<ParamMap> sample_params(const CatalogEntry& e, int n, std::mt19937_64& rng, bool admissible, int max_tries) {
  std::vector<Inequality> checks;
  for (const auto& c : e.constraints) checks.push_back(Inequality::parse(c));
  if (admissible)
    for (const auto& c : e.admissibility) checks.push_back(Inequality::parse(c));
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    ParamMap user;
    for (const auto& f : e.free_params) user[f] = random_rational(rng);
    ParamMap env = user;
    env["n"] = n;
    if (!e.alpha_rule.empty()) env["alpha"] = eval_text(e.alpha_rule, env);
    bool ok = true;
    for (const auto& c : checks)
      if (!c.holds(env)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    // F(0) must not vanish and the recursion must not break down
    RatPoly A = poly_from(e.A_coeffs, env), F = poly_from(e.F_coeffs, env);
    Rational A1 = A.coeff(1), F0 = F.coeff(0);
    bool breakdown = F0 == 0;
    for (int j = 1; j <= n + 8 && !breakdown; ++j) breakdown = A1 * j + F0 == 0;
    if (breakdown) continue;
    return user;
  }
  return std::nullopt;
}

RuleIdentityReport alpha_rule_identity(const CatalogEntry& e, const std::string& rule, int points, std::uint64_t seed) {
  RuleIdentityReport rep;
  if (rule.empty()) return rep;
  std::mt19937_64 rng(seed);
  Expr r = Expr::parse(rule);
  for (int i = 0; i < points; ++i) {
    ParamMap env;
    for (const auto& f : e.free_params) env[f] = random_rational(rng);
    int n = static_cast<int>(rng() % 9);
    env["n"] = n;
    env["alpha"] = r.eval(env);
    RatPoly A = poly_from(e.A_coeffs, env), F = poly_from(e.F_coeffs, env);
    Rational lhs = derivative_at_zero(F, 3);
    Rational rhs = -derivative_at_zero(A, 4) * (n - 1) / 2;
    ++rep.points;
    if (lhs != rhs) {
      if (rep.failures == 0) rep.first_failure = "F'''(0) = " + to_string(lhs) + " but -A''''(0)(n-1)/2 = " + to_string(rhs);
      ++rep.failures;
    }
  }
  return rep;
}

double log_weight(const CatalogEntry& e, const ParamMap& params, int n, double x) {
  if (!e.log_W) throw Error(ErrorKind::invalid_argument, "model " + e.id + " has no weight evaluator");
  return e.log_W(x, NumParams::from(params, n));
}

BoundaryReport boundary_decay(const CatalogEntry& e, const ParamMap& params, int n) {
  BoundaryReport rep;
  ParamMap env = params;
  env["n"] = n;
  RealInterval iv = entry_interval(e, env);
  RatPoly A = poly_from(e.A_coeffs, env);
  NumParams np = NumParams::from(env, n);
  auto logAW = [&](double x) { return std::log(std::fabs(A.eval(x))) + e.log_W(x, np); };
  auto decays = [&](double end, double dir) {
    double prev = logAW(end + dir * 1e-3);
    for (double eps : {1e-5, 1e-7, 1e-9}) {
      double cur = logAW(end + dir * eps);
      if (!(cur < prev)) return false;
      prev = cur;
    }
    return true;
  };
  rep.lo_finite = std::isfinite(iv.lo);
  rep.hi_finite = std::isfinite(iv.hi);
  if (rep.lo_finite) rep.lo_decays = decays(iv.lo, 1.0);
  if (rep.hi_finite) rep.hi_decays = decays(iv.hi, -1.0);
  return rep;
}

}  // namespace qes
