#include "qes/recursion.hpp"

#include "qes/errors.hpp"

namespace qes {

RecursionCoeffs recursion_coeffs(const TaylorData& t, int m) {
  const auto& A = t.A;
  const auto& F = t.F;
  const auto& B = t.B;
  RecursionCoeffs c;
  c.c1 = A[1] * (m + 1) * (m + 2) + F[0] * (m + 2);
  c.c2 = RatPoly{A[2] / 2 * m * (m + 1) + F[1] * (m + 1), Rational(1)};
  c.c3 = A[3] / 6 * m * (m - 1) + F[2] / 2 * m - B[1];
  c.c4 = A[4] / 24 * (m - 1) * (m - 2) + F[3] / 6 * (m - 1) - B[2] / 2;
  return c;
}

EnergySequence generate(const QesProblem& prob, int M) {
  if (M < 1) throw Error(ErrorKind::invalid_argument, "sequence length M must be at least 1");
  if (prob.spec.F.coeff(0) == 0) throw Error(ErrorKind::degenerate_spec, "F(0) = 0, P_1 undefined");
  const TaylorData t = taylor_data(prob);
  EnergySequence seq;
  seq.problem = prob;
  seq.polys.reserve(static_cast<size_t>(M) + 1);
  seq.polys.push_back(RatPoly::constant(1));
  const RatPoly zero;
  for (int m = -1; m + 2 <= M; ++m) {
    auto c = recursion_coeffs(t, m);
    if (c.c1 == 0) throw Error(ErrorKind::recursion_breakdown, "leading recursion coefficient vanishes at m=" + std::to_string(m));
    const RatPoly& p1 = seq.polys[static_cast<size_t>(m + 1)];
    const RatPoly& p0 = m >= 0 ? seq.polys[static_cast<size_t>(m)] : zero;
    const RatPoly& pm = m >= 1 ? seq.polys[static_cast<size_t>(m - 1)] : zero;
    RatPoly next = c.c2 * p1 + p0 * c.c3 + pm * c.c4;
    seq.polys.push_back(next / (-c.c1));
  }
  return seq;
}

TruncationResiduals truncation_residuals(const QesProblem& prob) {
  const TaylorData t = taylor_data(prob);
  TruncationResiduals r;
  r.c3_n = recursion_coeffs(t, prob.n).c3;
  r.c4_n = recursion_coeffs(t, prob.n).c4;
  r.c4_n1 = recursion_coeffs(t, prob.n + 1).c4;
  return r;
}

void assert_truncation(const QesProblem& prob) {
  auto r = truncation_residuals(prob);
  if (!r.ok())
    throw Error(ErrorKind::truncation_failure, "series does not terminate at n=" + std::to_string(prob.n) + ": c3(n)=" +
                                                   to_string(r.c3_n) + ", c4(n)=" + to_string(r.c4_n) +
                                                   ", c4(n+1)=" + to_string(r.c4_n1));
}

RatPoly recursion_identity(const EnergySequence& seq, int m) {
  if (m < -1 || m + 2 > seq.max_index()) throw Error(ErrorKind::out_of_range, "recursion index out of range");
  const TaylorData t = taylor_data(seq.problem);
  auto c = recursion_coeffs(t, m);
  RatPoly r = seq[m + 2] * c.c1 + c.c2 * seq[m + 1];
  if (m >= 0) r += seq[m] * c.c3;
  if (m >= 1) r += seq[m - 1] * c.c4;
  return r;
}

ParityResult parity_check(const EnergySequence& seq) {
  const TaylorData t = taylor_data(seq.problem);
  ParityResult res;
  res.applicable = t.A[2] == 0 && t.F[1] == 0 && t.A[4] == 0 && t.F[3] == 0 && t.B[2] == 0;
  if (!res.applicable) return res;
  res.holds = true;
  for (int m = 0; m <= seq.max_index(); ++m) {
    const RatPoly& p = seq[m];
    for (int i = 0; i <= p.degree(); ++i)
      if ((i - m) % 2 != 0 && p.coeff(i) != 0) res.holds = false;
  }
  return res;
}

}  // namespace qes
