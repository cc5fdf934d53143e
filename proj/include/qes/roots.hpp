#pragma once

#include <vector>

#include "qes/poly.hpp"

namespace qes {

struct RealInterval {
  double lo = 0.0;
  double hi = 0.0;
};

// One real root: a rational bracket [lo, hi] that contains it, its midpoint
// as a double, and its multiplicity in the input polynomial.
struct RealRoot {
  double value = 0.0;
  int multiplicity = 1;
  Rational lo, hi;
};

std::vector<RatPoly> sturm_sequence(const RatPoly& p);

// Sign variations of the sequence at x (zeros skipped).
int sign_variations(const std::vector<RatPoly>& seq, const Rational& x);
int sign_variations_at_pos_inf(const std::vector<RatPoly>& seq);
int sign_variations_at_neg_inf(const std::vector<RatPoly>& seq);

// Distinct real roots of p.
int count_real_roots(const RatPoly& p);
// Distinct roots of p strictly inside (a, b).
int count_roots_open(const RatPoly& p, const Rational& a, const Rational& b);

// 1 + max |c_i / c_n|; every real root lies in (-bound, bound).
Rational cauchy_bound(const RatPoly& p);

// Bisect [lo, hi] (which brackets one root of the square-free p, sign change
// or exact endpoint root) until hi - lo <= width.
void refine_bracket(const RatPoly& sqfree, Rational& lo, Rational& hi, const Rational& width);

// All real roots sorted ascending, multiplicities reported, brackets refined
// to absolute width < tol. Throws on the zero polynomial.
std::vector<RealRoot> real_roots(const RatPoly& p, double tol = 1e-12);

}  // namespace qes
