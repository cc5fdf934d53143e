#pragma once

#include <vector>

#include "qes/recursion.hpp"

namespace qes {

// Restriction of L to span{1, x, ..., x^n}; column j holds L(x^j).
struct RestrictedMatrix {
  std::vector<std::vector<Rational>> entries;  // entries[row][col]

  int size() const { return static_cast<int>(entries.size()); }
  Rational trace() const;
  // Smallest (below, above) such that entries[i][j] != 0 implies -above <= i - j <= below.
  std::pair<int, int> bandwidth() const;
};

RestrictedMatrix build_matrix(const QesProblem& prob);

// Monic det(E I - M), Faddeev-LeVerrier over exact rationals.
RatPoly char_poly(const RestrictedMatrix& mat);

struct OracleReport {
  RatPoly char_poly;
  RatPoly critical_monic;
  bool equal = false;
  bool trace_ok = false;
};

// Throws oracle_divergence on mismatch unless `throw_on_mismatch` is false.
OracleReport oracle_compare(const QesProblem& prob, const EnergySequence& seq, bool throw_on_mismatch = true);

}  // namespace qes
