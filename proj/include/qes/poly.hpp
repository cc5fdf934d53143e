#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qes/rational.hpp"

namespace qes {

// Dense univariate polynomial, coefficients indexed by power.
// The zero polynomial has no coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  // Coefficient of x^i; zero outside the stored range.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  int sign_at(const Rational& x) const;

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& s);
  RatPoly& operator/=(const Rational& s);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
  friend RatPoly operator/(RatPoly a, const Rational& s) { return a /= s; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  // p(-x)
  RatPoly reflect() const;
  RatPoly shift_up(int k) const;  // x^k p(x)

  std::string to_string(const std::string& var = "x") const;
  std::vector<std::string> coeff_strings() const;
  std::vector<double> to_doubles() const;

 private:
  void strip();
  std::vector<Rational> c_;
};

enum class ArithOp { add, sub, mul };

RatPoly poly_arith(const RatPoly& p, const RatPoly& q, ArithOp op);

// p = q*d + r, deg r < deg d. Throws on d == 0.
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& p, const RatPoly& d);

RatPoly poly_derivative(const RatPoly& p, int order = 1);

// i-th derivative at zero, i.e. i! * coeff(i).
Rational derivative_at_zero(const RatPoly& p, int i);

RatPoly monic(const RatPoly& p);
RatPoly poly_gcd(RatPoly a, RatPoly b);  // monic, gcd(0,0) = 0

// Yun's algorithm: p = lc * prod f_i^i with f_i monic square-free and pairwise coprime.
std::vector<std::pair<RatPoly, int>> square_free_decomposition(const RatPoly& p);
RatPoly square_free_part(const RatPoly& p);

// Parses an ascending comma separated coefficient list "2,0,-1/2".
RatPoly parse_coeff_list(const std::string& text);

}  // namespace qes
