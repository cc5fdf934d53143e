#include "qes/rational.hpp"

#include <cmath>
#include <limits>

#include "qes/errors.hpp"

namespace qes {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::parse: return "parse";
    case ErrorKind::division_by_zero: return "division_by_zero";
    case ErrorKind::unsupported_order: return "unsupported_order";
    case ErrorKind::degenerate_spec: return "degenerate_spec";
    case ErrorKind::infeasible_weight: return "infeasible_weight";
    case ErrorKind::constraint_violation: return "constraint_violation";
    case ErrorKind::unknown_id: return "unknown_id";
    case ErrorKind::out_of_range: return "out_of_range";
    case ErrorKind::recursion_breakdown: return "recursion_breakdown";
    case ErrorKind::truncation_failure: return "truncation_failure";
    case ErrorKind::factorization_failure: return "factorization_failure";
    case ErrorKind::oracle_divergence: return "oracle_divergence";
    case ErrorKind::degenerate_spectrum: return "degenerate_spectrum";
    case ErrorKind::non_real_spectrum: return "non_real_spectrum";
    case ErrorKind::domain: return "domain";
    case ErrorKind::singularity: return "singularity";
  }
  return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorKind::parse, "not a rational number: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  int exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mpz_class ez = parse_integer(s.substr(e + 1), whole);
    if (!ez.fits_sint_p() || abs(ez) > 4000) throw Error(ErrorKind::parse, "exponent out of range: '" + std::string(whole) + "'");
    exp10 = static_cast<int>(ez.get_si());
    s = s.substr(0, e);
  }
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  auto dot = s.find('.');
  if (dot == std::string_view::npos) {
    digits = std::string(s);
  } else {
    digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    exp10 -= static_cast<int>(s.size() - dot - 1);
  }
  if (!all_digits(digits)) throw Error(ErrorKind::parse, "not a rational number: '" + std::string(whole) + "'");
  mpz_class mant(digits, 10);
  if (neg) mant = -mant;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  Rational r = exp10 < 0 ? Rational(mant, scale) : Rational(mant * scale);
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto b = text.find_first_not_of(" \t");
  auto e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) throw Error(ErrorKind::parse, "empty rational");
  std::string_view s = text.substr(b, e - b + 1);
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    if (s.find('/', slash + 1) != std::string_view::npos)
      throw Error(ErrorKind::parse, "more than one '/' in '" + std::string(text) + "'");
    Rational num = parse_rational(s.substr(0, slash));
    Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::division_by_zero, "zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  if (s.find_first_of(".eE") != std::string_view::npos) return parse_decimal(s, text);
  Rational r(parse_integer(s, text));
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) {
  double d = q.get_d();  // truncates toward zero
  if (!std::isfinite(d)) return d;
  double best = d;
  Rational err = abs(Rational(d) - q);
  for (double c : {std::nextafter(d, -std::numeric_limits<double>::infinity()),
                   std::nextafter(d, std::numeric_limits<double>::infinity())}) {
    if (!std::isfinite(c)) continue;
    Rational ce = abs(Rational(c) - q);
    if (ce < err) {
      err = ce;
      best = c;
    }
  }
  return best;
}

Rational from_double(double d) {
  if (!std::isfinite(d)) throw Error(ErrorKind::invalid_argument, "non-finite value has no rational form");
  return Rational(d);
}

Rational rpow(const Rational& q, int e) {
  if (e < 0) {
    if (q == 0) throw Error(ErrorKind::division_by_zero, "zero to a negative power");
    return Rational(1) / rpow(q, -e);
  }
  Rational r(1), base(q);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Rational factorial(int k) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(k < 0 ? 0 : k));
  return Rational(z);
}

}  // namespace qes
