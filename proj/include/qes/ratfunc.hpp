#pragma once

#include <string>

#include "qes/poly.hpp"

namespace qes {

// num/den with common factors cancelled and a monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(RatPoly::constant(1)) {}
  RatFunc(const RatPoly& num);  // NOLINT(google-explicit-constructor)
  RatFunc(const RatPoly& num, const RatPoly& den);

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  bool is_pole(const Rational& x) const { return den_.eval(x) == 0; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  RatPoly num_, den_;
};

RatFunc ratfunc_derivative(const RatFunc& f);

}  // namespace qes
