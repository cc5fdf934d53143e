#include "qes/ratfunc.hpp"

#include "qes/errors.hpp"

namespace qes {

RatFunc::RatFunc(const RatPoly& num) : num_(num), den_(RatPoly::constant(1)) {}

RatFunc::RatFunc(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::division_by_zero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = RatPoly::constant(1);
    return;
  }
  RatPoly g = poly_gcd(num, den);
  num_ = poly_divmod(num, g).first;
  den_ = poly_divmod(den, g).first;
  Rational lc = den_.leading();
  num_ /= lc;
  den_ /= lc;
}

Rational RatFunc::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw Error(ErrorKind::singularity, "rational function evaluated at a pole");
  return num_.eval(x) / d;
}

double RatFunc::eval(double x) const { return num_.eval(x) / den_.eval(x); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw Error(ErrorKind::division_by_zero, "rational function divided by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RatFunc ratfunc_derivative(const RatFunc& f) {
  const RatPoly& n = f.num();
  const RatPoly& d = f.den();
  return RatFunc(poly_derivative(n) * d - n * poly_derivative(d), d * d);
}

}  // namespace qes
