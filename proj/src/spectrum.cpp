#include "qes/spectrum.hpp"

#include <cmath>

#include "qes/errors.hpp"

namespace qes {

FactorizationReport factorization_check(const EnergySequence& seq, int n, int N_max) {
  if (N_max < 0) throw Error(ErrorKind::invalid_argument, "N_max must be non-negative");
  if (seq.max_index() < n + 1 + N_max)
    throw Error(ErrorKind::out_of_range, "sequence too short for factorization check up to N=" + std::to_string(N_max));
  FactorizationReport rep;
  rep.N_max = N_max;
  const RatPoly& crit = seq[n + 1];
  for (int N = 0; N <= N_max; ++N) {
    auto [q, r] = poly_divmod(seq[n + 1 + N], crit);
    if (!r.is_zero())
      throw Error(ErrorKind::factorization_failure,
                  "P_" + std::to_string(n + 1 + N) + " leaves remainder " + r.to_string("E") + " at N=" + std::to_string(N));
    rep.quotients.push_back(std::move(q));
  }
  rep.all_exact = true;
  return rep;
}

Rational surrogate_endpoint(const RatPoly& psi) {
  if (psi.degree() < 1) return Rational(10);
  return (cauchy_bound(psi) + 1) * 10;
}

namespace {

int count_in(const RatPoly& psi, const RealInterval& iv) {
  if (psi.degree() < 1) return 0;
  Rational end = surrogate_endpoint(psi);
  Rational a = std::isinf(iv.lo) ? Rational(-end) : from_double(iv.lo);
  Rational b = std::isinf(iv.hi) ? end : from_double(iv.hi);
  return count_roots_open(psi, a, b);
}

}  // namespace

SpectrumResult solve_spectrum(const EnergySequence& seq, int n, double tol) {
  if (n < 0 || seq.max_index() < n + 1) throw Error(ErrorKind::out_of_range, "sequence does not reach P_{n+1}");
  assert_truncation(seq.problem);
  const RatPoly& crit = seq[n + 1];
  for (auto& [f, mult] : square_free_decomposition(crit))
    if (mult > 1)
      throw Error(ErrorKind::degenerate_spectrum, "critical polynomial has a root of multiplicity " + std::to_string(mult) +
                                                      " (factor " + f.to_string("E") + ")");
  auto roots = real_roots(crit, tol);
  if (static_cast<int>(roots.size()) < n + 1)
    throw Error(ErrorKind::non_real_spectrum, std::to_string(n + 1 - static_cast<int>(roots.size())) + " of " +
                                                  std::to_string(n + 1) + " eigenvalues are not real");

  SpectrumResult res;
  const RatPoly sq = square_free_part(crit);
  for (auto& r : roots) {
    Rational lo = r.lo, hi = r.hi;
    // tighter bracket for the eigenfunction data than the reported tolerance
    Rational scale = 1 + abs(lo);
    Rational width = scale / Rational(mpz_class(1) << 100);
    refine_bracket(sq, lo, hi, width);
    Rational e = (lo + hi) / 2;
    res.bracket_lo.push_back(lo);
    res.bracket_hi.push_back(hi);
    res.eigenvalues.push_back(to_double(e));

    std::vector<Rational> psi(static_cast<size_t>(n) + 1);
    std::vector<double> row(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
      psi[static_cast<size_t>(m)] = seq[m].eval(e);
      row[static_cast<size_t>(m)] = to_double(psi[static_cast<size_t>(m)]);
    }
    res.coeff_table.push_back(row);
    res.eigenfunctions.emplace_back(psi);

    // residual of the float eigenpair, evaluated exactly
    std::vector<Rational> psi_f;
    double scale_f = 0.0;
    for (double c : row) {
      psi_f.push_back(from_double(c));
      scale_f = std::max(scale_f, std::fabs(c));
    }
    RatPoly pf(psi_f);
    RatPoly resid = apply_operator(seq.problem, pf) - pf * from_double(res.eigenvalues.back());
    double worst = 0.0;
    for (const auto& c : resid.coeffs()) worst = std::max(worst, std::fabs(to_double(c)));
    res.residual_norms.push_back(worst);
    res.psi_scale.push_back(scale_f);
  }
  for (const auto& psi : res.eigenfunctions) res.root_counts.push_back(count_in(psi, seq.problem.spec.interval));
  return res;
}

OscillationReport oscillation_check(const SpectrumResult& result, const RealInterval& interval) {
  OscillationReport rep;
  rep.ok = true;
  for (size_t i = 0; i < result.eigenfunctions.size(); ++i) {
    int c = count_in(result.eigenfunctions[i], interval);
    rep.counts.push_back(c);
    if (c != static_cast<int>(i)) rep.ok = false;
  }
  return rep;
}

bool interlaces(const RatPoly& lower, const RatPoly& upper) {
  if (upper.degree() != lower.degree() + 1) return false;
  if (lower.degree() < 1) return upper.degree() == 1;
  if (poly_gcd(lower, upper).degree() > 0) return false;
  auto ru = real_roots(upper, 1e-30);
  auto rl = real_roots(lower, 1e-30);
  if (static_cast<int>(ru.size()) != upper.degree() || static_cast<int>(rl.size()) != lower.degree()) return false;
  for (const auto& r : ru)
    if (r.multiplicity > 1) return false;
  // exactly one root of `lower` between consecutive roots of `upper`
  for (size_t i = 0; i + 1 < ru.size(); ++i)
    if (count_roots_open(lower, ru[i].hi, ru[i + 1].lo) != 1) return false;
  return true;
}

}  // namespace qes
