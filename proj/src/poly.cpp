#include "qes/poly.hpp"

#include <cmath>
#include <sstream>

#include "qes/errors.hpp"

namespace qes {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { strip(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

void RatPoly::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

const Rational& RatPoly::leading() const {
  if (c_.empty()) throw Error(ErrorKind::invalid_argument, "zero polynomial has no leading coefficient");
  return c_.back();
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double RatPoly::eval(double x) const {
  long double acc = 0.0L;
  long double lx = x;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lx + static_cast<long double>(to_double(*it));
  return static_cast<double>(acc);
}

int RatPoly::sign_at(const Rational& x) const { return sgn(eval(x)); }

RatPoly RatPoly::operator-() const {
  RatPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  strip();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  strip();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  strip();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

RatPoly& RatPoly::operator/=(const Rational& s) {
  if (s == 0) throw Error(ErrorKind::division_by_zero, "polynomial divided by zero scalar");
  for (auto& c : c_) c /= s;
  return *this;
}

RatPoly RatPoly::reflect() const {
  RatPoly r(*this);
  for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

RatPoly RatPoly::shift_up(int k) const {
  if (c_.empty()) return {};
  std::vector<Rational> v(static_cast<size_t>(k), Rational(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return RatPoly(std::move(v));
}

std::string RatPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = a == 1 && i > 0;
    if (!unit) os << qes::to_string(a);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<std::string> RatPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(qes::to_string(c));
  return out;
}

std::vector<double> RatPoly::to_doubles() const {
  std::vector<double> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(to_double(c));
  return out;
}

RatPoly poly_arith(const RatPoly& p, const RatPoly& q, ArithOp op) {
  switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::sub: return p - q;
    case ArithOp::mul: return p * q;
  }
  return {};
}

std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& p, const RatPoly& d) {
  if (d.is_zero()) throw Error(ErrorKind::division_by_zero, "polynomial division by the zero polynomial");
  if (p.degree() < d.degree()) return {RatPoly{}, p};
  std::vector<Rational> r = p.coeffs();
  const int dd = d.degree();
  std::vector<Rational> q(static_cast<size_t>(p.degree() - dd) + 1);
  const Rational& lc = d.leading();
  for (int i = p.degree(); i >= dd; --i) {
    Rational c = r[static_cast<size_t>(i)] / lc;
    q[static_cast<size_t>(i - dd)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) r[static_cast<size_t>(i - dd + j)] -= c * d.coeffs()[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(dd));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly poly_derivative(const RatPoly& p, int order) {
  if (order < 0) throw Error(ErrorKind::invalid_argument, "negative derivative order");
  if (order == 0) return p;
  if (p.degree() < order) return {};
  std::vector<Rational> v(static_cast<size_t>(p.degree() - order) + 1);
  for (int i = order; i <= p.degree(); ++i) {
    Rational f(1);
    for (int j = 0; j < order; ++j) f *= i - j;
    v[static_cast<size_t>(i - order)] = p.coeffs()[static_cast<size_t>(i)] * f;
  }
  return RatPoly(std::move(v));
}

Rational derivative_at_zero(const RatPoly& p, int i) { return factorial(i) * p.coeff(i); }

RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return p / p.leading();
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

std::vector<std::pair<RatPoly, int>> square_free_decomposition(const RatPoly& p) {
  std::vector<std::pair<RatPoly, int>> out;
  if (p.degree() < 1) return out;
  RatPoly dp = poly_derivative(p);
  RatPoly a = poly_gcd(p, dp);
  RatPoly b = poly_divmod(p, a).first;
  RatPoly c = poly_divmod(dp, a).first;
  RatPoly d = c - poly_derivative(b);
  for (int i = 1; b.degree() >= 1; ++i) {
    RatPoly g = poly_gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, i);
    b = poly_divmod(b, g).first;
    c = poly_divmod(d, g).first;
    d = c - poly_derivative(b);
  }
  return out;
}

RatPoly square_free_part(const RatPoly& p) {
  if (p.degree() < 1) return p;
  return monic(poly_divmod(p, poly_gcd(p, poly_derivative(p))).first);
}

RatPoly parse_coeff_list(const std::string& text) {
  std::vector<Rational> v;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) v.push_back(parse_rational(item));
  if (v.empty()) throw Error(ErrorKind::parse, "empty coefficient list");
  return RatPoly(std::move(v));
}

}  // namespace qes
