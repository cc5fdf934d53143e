#pragma once

#include <vector>

#include "qes/qes_model.hpp"

namespace qes {

// c1(m) P_{m+2} + c2(m, E) P_{m+1} + c3(m) P_m + c4(m) P_{m-1} = 0
struct RecursionCoeffs {
  Rational c1;
  RatPoly c2;  // in E: E-free part + E
  Rational c3;
  Rational c4;
};

RecursionCoeffs recursion_coeffs(const TaylorData& t, int m);

// Energy polynomials P_0..P_M in the variable E.
struct EnergySequence {
  QesProblem problem;
  std::vector<RatPoly> polys;

  const RatPoly& operator[](int m) const { return polys.at(static_cast<size_t>(m)); }
  int max_index() const { return static_cast<int>(polys.size()) - 1; }
};

EnergySequence generate(const QesProblem& prob, int M);

// c3(n), c4(n), c4(n+1); all must vanish for the series to terminate.
struct TruncationResiduals {
  Rational c3_n, c4_n, c4_n1;
  bool ok() const { return c3_n == 0 && c4_n == 0 && c4_n1 == 0; }
};

TruncationResiduals truncation_residuals(const QesProblem& prob);
void assert_truncation(const QesProblem& prob);

// Exact left side of the recursion at m, zero for a valid sequence.
RatPoly recursion_identity(const EnergySequence& seq, int m);

struct ParityResult {
  bool applicable = false;
  bool holds = false;
};

ParityResult parity_check(const EnergySequence& seq);

// Closed forms for the first few polynomials, evaluated on prob's data.
// Order 3 tables cover m = 1..5, order 4 tables m = 1..4.
RatPoly closed_form_oracle(const QesProblem& prob, int m);

// The order 4 closed forms use a different convention. The fixed mapping is
// P_m -> -P_m with B -> -B; this returns the mapped recursion output.
RatPoly closed_form_mapped(const QesProblem& prob, int m);

}  // namespace qes
