#include "qes/matrix_oracle.hpp"

#include "qes/errors.hpp"

namespace qes {

Rational RestrictedMatrix::trace() const {
  Rational t(0);
  for (int i = 0; i < size(); ++i) t += entries[static_cast<size_t>(i)][static_cast<size_t>(i)];
  return t;
}

std::pair<int, int> RestrictedMatrix::bandwidth() const {
  int below = 0, above = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      if (entries[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) continue;
      below = std::max(below, i - j);
      above = std::max(above, j - i);
    }
  return {below, above};
}

RestrictedMatrix build_matrix(const QesProblem& prob) {
  const int n = prob.n;
  RestrictedMatrix m;
  m.entries.assign(static_cast<size_t>(n) + 1, std::vector<Rational>(static_cast<size_t>(n) + 1));
  for (int j = 0; j <= n; ++j) {
    RatPoly img = apply_operator(prob, RatPoly::monomial(1, j));
    if (img.degree() > n)
      throw Error(ErrorKind::constraint_violation, "L(x^" + std::to_string(j) + ") has degree " + std::to_string(img.degree()) +
                                                       " > n=" + std::to_string(n));
    for (int i = 0; i <= img.degree(); ++i) m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = img.coeff(i);
  }
  return m;
}

RatPoly char_poly(const RestrictedMatrix& mat) {
  const int n = mat.size();
  using Mat = std::vector<std::vector<Rational>>;
  const Mat& A = mat.entries;
  auto mul = [n](const Mat& a, const Mat& b) {
    Mat r(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const Rational& aik = a[static_cast<size_t>(i)][static_cast<size_t>(k)];
        if (aik == 0) continue;
        for (int j = 0; j < n; ++j) r[static_cast<size_t>(i)][static_cast<size_t>(j)] += aik * b[static_cast<size_t>(k)][static_cast<size_t>(j)];
      }
    return r;
  };
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  c[static_cast<size_t>(n)] = 1;
  Mat M(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k)/k
    Mat next = mul(A, M);
    for (int i = 0; i < n; ++i) next[static_cast<size_t>(i)][static_cast<size_t>(i)] += c[static_cast<size_t>(n - k + 1)];
    M = std::move(next);
    Mat AM = mul(A, M);
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += AM[static_cast<size_t>(i)][static_cast<size_t>(i)];
    c[static_cast<size_t>(n - k)] = -tr / k;
  }
  return RatPoly(std::move(c));
}

OracleReport oracle_compare(const QesProblem& prob, const EnergySequence& seq, bool throw_on_mismatch) {
  if (seq.max_index() < prob.n + 1) throw Error(ErrorKind::out_of_range, "sequence does not reach P_{n+1}");
  OracleReport rep;
  RestrictedMatrix m = build_matrix(prob);
  rep.char_poly = char_poly(m);
  rep.critical_monic = monic(seq[prob.n + 1]);
  rep.equal = rep.char_poly == rep.critical_monic;
  // sum of eigenvalues via Vieta
  const RatPoly& cm = rep.critical_monic;
  rep.trace_ok = cm.degree() >= 1 && m.trace() == -cm.coeff(cm.degree() - 1);
  if (throw_on_mismatch && !(rep.equal && rep.trace_ok))
    throw Error(ErrorKind::oracle_divergence, "matrix characteristic polynomial " + rep.char_poly.to_string("E") +
                                                  " differs from monic P_{n+1} " + rep.critical_monic.to_string("E"));
  return rep;
}

}  // namespace qes
