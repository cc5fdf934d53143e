#pragma once

#include <vector>

#include "qes/recursion.hpp"
#include "qes/roots.hpp"

namespace qes {

struct FactorizationReport {
  int N_max = 0;
  std::vector<RatPoly> quotients;  // Q_0..Q_Nmax
  bool all_exact = false;
};

// P_{n+1+N} = P_{n+1} Q_N for N = 0..N_max, exactly. Throws factorization_failure.
FactorizationReport factorization_check(const EnergySequence& seq, int n, int N_max);

struct SpectrumResult {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> coeff_table;  // [i][m] = P_m(E_i)
  std::vector<double> residual_norms;            // max |coeff of L psi_i - E_i psi_i|
  std::vector<double> psi_scale;                 // max |coeff of psi_i|
  std::vector<int> root_counts;
  // rational brackets of E_i and psi_i evaluated at a rational point inside
  std::vector<Rational> bracket_lo, bracket_hi;
  std::vector<RatPoly> eigenfunctions;
};

// Roots of P_{n+1} with eigenfunction data. Throws degenerate_spectrum or
// non_real_spectrum; root counts use the problem's x-interval.
SpectrumResult solve_spectrum(const EnergySequence& seq, int n, double tol = 1e-12);

// Finite stand-in for an infinite endpoint when counting roots of psi.
Rational surrogate_endpoint(const RatPoly& psi);

struct OscillationReport {
  bool ok = false;
  std::vector<int> counts;
};

// Exact Sturm count of sign changes of psi_i inside (a, b); ok iff counts are 0..n.
OscillationReport oscillation_check(const SpectrumResult& result, const RealInterval& interval);

// Roots of the degree n polynomial strictly interlace those of the degree n+1 one.
bool interlaces(const RatPoly& lower, const RatPoly& upper);

}  // namespace qes
