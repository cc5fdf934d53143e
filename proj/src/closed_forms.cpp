#include <string>

#include "qes/errors.hpp"
#include "qes/recursion.hpp"

namespace qes {

namespace {

// P_m = scale * numerator / (F0 (A1+F0) (2 A1+F0) ... ((m-1) A1+F0))
struct ClosedForm {
  int m;
  const char* scale;
  const char* numerator;
};

const ClosedForm kOrder3[] = {
    {1, "-1",
     "E"},
    {2, "1/2",
     "E*F1 + E^2 + B1*F0"},
    {3, "1/6",
     "-A2*E*F1 - A2*E^2 - A2*B1*F0 - 2*E*F1^2 - 3*F1*E^2 - 2*F1*B1*F0 - E^3 - 3*E*B1*F0 + E*F2*A1"
     " + E*F2*F0 - 2*E*B1*A1"},
    {4, "-1/24",
     "-3*A2^2*E^2 - 3*B1^2*F0^2 - 6*B1^2*F0*A1 + 3*F2*B1*F0^2 + A3*B1*F0^2 + A3*E^2*F0"
     " + 2*A3*E^2*A1 - 8*E^2*B1*A1 + 4*E^2*F2*F0 + 7*E^2*F2*A1 - 6*E^2*B1*F0 - 6*F1^2*B1*F0"
     " - 13*A2*F1*E^2 - 9*A2*E*F1^2 - 3*A2^2*B1*F0 - 3*A2^2*E*F1 - 4*A2*E^3 - 6*E*F1^3"
     " - 11*F1^2*E^2 - 6*F1*E^3 - 9*A2*F1*B1*F0 - 6*A2*E*B1*A1 + 3*A2*E*F2*F0 + 3*A2*E*F2*A1"
     " - 10*A2*E*B1*F0 - 12*F1*E*B1*A1 + 6*F1*E*F2*F0 + 9*F1*E*F2*A1 - 14*F1*E*B1*F0"
     " + 2*A3*B1*F0*A1 + A3*E*F1*F0 + 2*A3*E*F1*A1 + 6*F2*B1*F0*A1 - E^4"},
    {5, "-1/120",
     "-46*E*A3*B1*F0*A1 - 88*E*F2*B1*F0*A1 + 16*A3*E*F2*A1*F0 + 24*E*F2^2*A1*F0 - 48*F2*E*B1*A1^2"
     " + 18*E*F2^2*A1^2 + 6*E*F2^2*F0^2 + 24*E*B1^2*A1^2 + 12*A3*E*F2*A1^2 + 4*A3*E*F2*F0^2"
     " - 24*A3*E*B1*A1^2 - 32*F1*A3*B1*F0*A1 - 60*F1*F2*B1*F0*A1 + 50*E*B1^2*F0*A1"
     " - 25*E*F2*B1*F0^2 - 13*E*A3*B1*F0^2 - 46*F1*A3*E^2*A1 + 80*F1*E^2*B1*A1 - 40*F1*E^2*F2*F0"
     " - 91*F1*E^2*F2*A1 + 50*F1*E^2*B1*F0 - 54*A2*F1*E*F2*F0 - 84*A2*F1*E*F2*A1"
     " + 137*A2*F1*E*B1*F0 - 24*A2*A3*B1*F0*A1 - 10*A2*A3*E*F1*F0 - 24*A2*A3*E*F1*A1"
     " - 54*A2*F2*B1*F0*A1 + 20*F1*B1^2*F0^2 - 5*A3*E^3*F0 - 14*A3*E^3*A1 + 20*E^3*B1*A1"
     " - 10*E^3*F2*F0 - 25*E^3*F2*A1 + 10*E^3*B1*F0 + 15*E*B1^2*F0^2 + 66*A2*E^2*B1*A1"
     " - 33*A2*E^2*F2*F0 - 63*A2*E^2*F2*A1 + 50*A2*E^2*B1*F0 + 72*A2*F1^2*B1*F0 + 72*F1^2*E*B1*A1"
     " - 36*F1^2*E*F2*F0 - 72*F1^2*E*F2*A1 + 70*F1^2*E*B1*F0 - 12*A3*E*F1^2*F0 - 32*A3*E*F1^2*A1"
     " + 48*F1*B1^2*F0*A1 - 24*F1*F2*B1*F0^2 - 12*F1*A3*B1*F0^2 - 17*F1*A3*E^2*F0"
     " - 24*A2*F2*B1*F0^2 - 10*A2*A3*E^2*F0 - 24*A2*A3*E^2*A1 - 10*A2*A3*B1*F0^2"
     " + 108*A2*F1*E*B1*A1 + 10*F1*E^4 + 18*A2^3*E^2 + 27*A2^2*E^3 + 10*A2*E^4 + 24*E*F1^4"
     " + 50*F1^3*E^2 + 35*F1^2*E^3 + E^5 + 93*A2^2*F1*E^2 + 66*A2^2*E*F1^2 + 18*A2^3*B1*F0"
     " + 18*A2^3*E*F1 + 22*A2*B1^2*F0^2 + 72*A2*E*F1^3 + 127*A2*F1^2*E^2 + 65*A2*F1*E^3"
     " + 24*F1^3*B1*F0 + 66*A2^2*F1*B1*F0 + 36*A2^2*E*B1*A1 - 18*A2^2*E*F2*F0 - 18*A2^2*E*F2*A1"
     " + 63*A2^2*E*B1*F0 + 48*A2*B1^2*F0*A1"},
};
const ClosedForm kOrder4[] = {
    {1, "1",
     "E"},
    {2, "-1/2",
     "E*F1 + E^2 - B1*F0"},
    {3, "1/6",
     "A2*E*F1 + A2*E^2 - A2*B1*F0 + 2*E*F1^2 + 3*F1*E^2 - 2*F1*B1*F0 + E^3 + E*B1*F0 - E*F2*A1"
     " - E*F2*F0 + 2*E*B1*A1 + B2*F0*A1 + B2*F0^2"},
    {4, "-1/24",
     "3*A2*B2*F0^2 + A3*B1*F0^2 + 9*A2*E*F1^2 - 3*A2*E*F2*A1 + 2*A2*E*B1*F0 - 9*A2*F1*B1*F0"
     " - 2*E*B2*F0^2 + 3*A2*B2*F0*A1 + 6*A2*E*B1*A1 - 3*A2*E*F2*F0 - 9*F1*E*F2*A1 + 4*F1*E*B1*F0"
     " - 3*B1^2*F0^2 - 8*E*B2*F0*A1 - 2*A3*E*F1*A1 - A3*E*F1*F0 + 2*A3*B1*F0*A1 + 6*F2*B1*F0*A1"
     " + 3*E*F3*A1*F0 - 6*F1*E*F2*F0 + 3*A2^2*E^2 + 4*A2*E^3 + 6*E*F1^3 + 11*F1^2*E^2 + 6*F1*E^3"
     " + 3*A2^2*E*F1 - 3*A2^2*B1*F0 + 13*A2*F1*E^2 - 6*F1^2*B1*F0 + 3*F1*B2*F0^2 + 4*E^2*B1*F0"
     " - 7*E^2*F2*A1 - 4*E^2*F2*F0 + 8*E^2*B1*A1 - 2*A3*E^2*A1 - A3*E^2*F0 + 3*F2*B1*F0^2"
     " - 6*B1^2*F0*A1 + 2*E*F3*A1^2 + E*F3*F0^2 - 6*E*B2*A1^2 + E^4 + 3*F1*B2*F0*A1 + 12*F1*E*B1*A1"},
};

ParamMap symbols_of(const QesProblem& prob) {
  TaylorData t = taylor_data(prob);
  ParamMap env;
  for (int i = 1; i <= 4; ++i) env["A" + std::to_string(i)] = t.A[static_cast<size_t>(i)];
  for (int i = 0; i <= 3; ++i) env["F" + std::to_string(i)] = t.F[static_cast<size_t>(i)];
  env["B1"] = t.B[1];
  env["B2"] = t.B[2];
  return env;
}

}  // namespace

RatPoly closed_form_oracle(const QesProblem& prob, int m) {
  const bool four = prob.order() == 4;
  const int top = four ? 4 : 5;
  if (m < 1 || m > top)
    throw Error(ErrorKind::out_of_range, "closed forms cover m = 1.." + std::to_string(top) + ", got m=" + std::to_string(m));
  const ClosedForm& cf = four ? kOrder4[m - 1] : kOrder3[m - 1];
  ParamMap env = symbols_of(prob);
  Rational den = env["F0"];
  for (int j = 1; j < m; ++j) den *= env["A1"] * j + env["F0"];
  if (den == 0) throw Error(ErrorKind::division_by_zero, "closed form denominator vanishes");
  RatPoly num = Expr::parse(cf.numerator).eval_poly("E", env);
  return num * parse_rational(cf.scale) / den;
}

RatPoly closed_form_mapped(const QesProblem& prob, int m) {
  QesProblem flipped = prob;
  flipped.B = -prob.B;
  return -generate(flipped, m)[m];
}

}  // namespace qes
