#include "qes/roots.hpp"

#include <algorithm>

#include "qes/errors.hpp"

namespace qes {

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  std::vector<RatPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  RatPoly d = poly_derivative(p);
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    RatPoly r = poly_divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    // scale by a positive constant to keep coefficients small
    r /= abs(r.leading());
    seq.push_back(-r);
  }
  return seq;
}

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int sign_variations(const std::vector<RatPoly>& seq, const Rational& x) {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const auto& q : seq) s.push_back(q.sign_at(x));
  return variations(s);
}

int sign_variations_at_pos_inf(const std::vector<RatPoly>& seq) {
  std::vector<int> s;
  for (const auto& q : seq) s.push_back(q.is_zero() ? 0 : sgn(q.leading()));
  return variations(s);
}

int sign_variations_at_neg_inf(const std::vector<RatPoly>& seq) {
  std::vector<int> s;
  for (const auto& q : seq) {
    if (q.is_zero()) {
      s.push_back(0);
      continue;
    }
    int sg = sgn(q.leading());
    s.push_back(q.degree() % 2 ? -sg : sg);
  }
  return variations(s);
}

int count_real_roots(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::invalid_argument, "zero polynomial has infinitely many roots");
  auto seq = sturm_sequence(square_free_part(p));
  return sign_variations_at_neg_inf(seq) - sign_variations_at_pos_inf(seq);
}

int count_roots_open(const RatPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw Error(ErrorKind::invalid_argument, "zero polynomial has infinitely many roots");
  if (!(a < b)) return 0;
  RatPoly q = square_free_part(p);
  auto seq = sturm_sequence(q);
  // V(a) - V(b) counts roots in (a, b]
  int c = sign_variations(seq, a) - sign_variations(seq, b);
  if (q.eval(b) == 0) --c;
  return c;
}

Rational cauchy_bound(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::invalid_argument, "zero polynomial has no root bound");
  Rational m(0);
  const Rational& lc = p.leading();
  for (int i = 0; i < p.degree(); ++i) m = std::max<Rational>(m, abs(p.coeff(i) / lc));
  return m + 1;
}

void refine_bracket(const RatPoly& sqfree, Rational& lo, Rational& hi, const Rational& width) {
  if (lo == hi) return;
  int slo = sqfree.sign_at(lo);
  if (slo == 0) {
    hi = lo;
    return;
  }
  if (sqfree.sign_at(hi) == 0) {
    lo = hi;
    return;
  }
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int sm = sqfree.sign_at(mid);
    if (sm == 0) {
      lo = hi = mid;
      return;
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
}

namespace {

struct Isolated {
  Rational lo, hi;
};

// Roots of square-free q in (lo, hi], hi not a root unless recorded exactly.
void isolate(const RatPoly& q, const std::vector<RatPoly>& seq, const Rational& lo, const Rational& hi, int vlo, int vhi,
             std::vector<Isolated>& out) {
  int n = vlo - vhi;
  if (n <= 0) return;
  if (n == 1) {
    // open-closed interval; if hi is the root keep it exact
    if (q.eval(hi) == 0) {
      out.push_back({hi, hi});
      return;
    }
    // lo may itself be a root counted elsewhere; move it inside the interval
    Rational a = lo, c = hi;
    int va = vlo;
    while (q.eval(a) == 0) {
      Rational mid = (a + c) / 2;
      if (q.eval(mid) == 0) {
        out.push_back({mid, mid});
        return;
      }
      int vm = sign_variations(seq, mid);
      if (va - vm == 1)
        c = mid;
      else
        a = mid, va = vm;
    }
    out.push_back({a, c});
    return;
  }
  Rational mid = (lo + hi) / 2;
  int vmid = sign_variations(seq, mid);
  isolate(q, seq, lo, mid, vlo, vmid, out);
  isolate(q, seq, mid, hi, vmid, vhi, out);
}

}  // namespace

std::vector<RealRoot> real_roots(const RatPoly& p, double tol) {
  if (p.is_zero()) throw Error(ErrorKind::invalid_argument, "real_roots of the zero polynomial");
  if (!(tol > 0)) throw Error(ErrorKind::invalid_argument, "root tolerance must be positive");
  std::vector<RealRoot> roots;
  Rational width = from_double(tol) / 2;
  for (auto& [f, mult] : square_free_decomposition(p)) {
    auto seq = sturm_sequence(f);
    Rational b = cauchy_bound(f);
    std::vector<Isolated> iso;
    isolate(f, seq, -b, b, sign_variations(seq, -b), sign_variations(seq, b), iso);
    for (auto& r : iso) {
      refine_bracket(f, r.lo, r.hi, width);
      RealRoot rr;
      rr.lo = r.lo;
      rr.hi = r.hi;
      rr.multiplicity = mult;
      rr.value = to_double((r.lo + r.hi) / 2);
      roots.push_back(rr);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
  return roots;
}

}  // namespace qes
