#include <algorithm>
#include <cmath>

#include "qes/potential.hpp"

namespace qes {

namespace {

// Eigenvalues of the tridiagonal (d, off) below lambda, via the LDL^T pivots.
int count_below(const std::vector<long double>& d, long double off2, long double lambda) {
  int count = 0;
  long double q = 1;
  for (size_t i = 0; i < d.size(); ++i) {
    q = d[i] - lambda - (i ? off2 / q : 0.0L);
    if (q == 0) q = -1e-300L;
    if (q < 0) ++count;
  }
  return count;
}

// One inverse-iteration solve (T - sigma) y = x, Thomas algorithm.
std::vector<long double> solve_shifted(const std::vector<long double>& d, long double off, long double sigma,
                                       const std::vector<long double>& rhs) {
  size_t m = d.size();
  std::vector<long double> c(m), y(m);
  long double piv = d[0] - sigma;
  if (piv == 0) piv = 1e-300L;
  c[0] = off / piv;
  y[0] = rhs[0] / piv;
  for (size_t i = 1; i < m; ++i) {
    piv = d[i] - sigma - off * c[i - 1];
    if (piv == 0) piv = 1e-300L;
    c[i] = off / piv;
    y[i] = (rhs[i] - off * y[i - 1]) / piv;
  }
  for (size_t i = m - 1; i-- > 0;) y[i] -= c[i] * y[i + 1];
  return y;
}

}  // namespace

FdResult fd_schrodinger(const std::function<double(double)>& V, const RealInterval& domain, int grid_points,
                        int levels, bool lo_is_cut, bool hi_is_cut) {
  if (grid_points < 200) throw Error(ErrorKind::invalid_argument, "grid_points must be at least 200");
  if (!std::isfinite(domain.lo) || !std::isfinite(domain.hi) || !(domain.hi > domain.lo))
    throw Error(ErrorKind::invalid_argument, "finite-difference domain must be a finite interval");
  if (levels < 1) throw Error(ErrorKind::invalid_argument, "levels must be positive");
  const int m = grid_points - 2;
  if (levels > m) throw Error(ErrorKind::invalid_argument, "more levels requested than interior grid points");
  const long double h = (static_cast<long double>(domain.hi) - domain.lo) / (grid_points - 1);
  const long double off = -1 / (h * h);
  std::vector<long double> d(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    double t = static_cast<double>(domain.lo + h * (i + 1));
    double v = V(t);
    if (!std::isfinite(v)) throw Error(ErrorKind::singularity, "potential not finite at grid point t = " + std::to_string(t));
    d[static_cast<size_t>(i)] = 2 / (h * h) + v;
  }
  const long double lo0 = *std::min_element(d.begin(), d.end()) - 2 * std::fabs(off);
  const long double hi0 = *std::max_element(d.begin(), d.end()) + 2 * std::fabs(off);
  const long double off2 = off * off;

  FdResult res;
  res.grid_points = grid_points;
  res.domain = domain;
  for (int j = 0; j < levels; ++j) {
    long double lo = lo0, hi = hi0;
    while (hi - lo > 1e-10L) {
      long double mid = (lo + hi) / 2;
      if (mid == lo || mid == hi) break;
      if (count_below(d, off2, mid) > j)
        hi = mid;
      else
        lo = mid;
    }
    res.levels.push_back(static_cast<double>((lo + hi) / 2));
  }

  std::vector<long double> y(static_cast<size_t>(m), 1.0L);
  const long double sigma = res.levels[0] - 1e-7L * (1 + std::fabs(res.levels[0]));
  for (int it = 0; it < 4; ++it) {
    y = solve_shifted(d, off, sigma, y);
    long double norm = 0;
    for (auto v : y) norm = std::max(norm, std::fabs(v));
    for (auto& v : y) v /= norm;
  }
  long double total = 0, left = 0, right = 0;
  const int edge = std::max(1, m / 20);
  for (int i = 0; i < m; ++i) {
    long double w = y[static_cast<size_t>(i)] * y[static_cast<size_t>(i)];
    total += w;
    if (i < edge) left += w;
    if (i >= m - edge) right += w;
  }
  res.boundary_mass = static_cast<double>(std::max(lo_is_cut ? left : 0.0L, hi_is_cut ? right : 0.0L) / total);
  res.unreliable_truncation = res.boundary_mass > 1e-4;
  return res;
}

namespace {

double safe_V(const std::function<double(double)>& V, double t) {
  try {
    double v = V(t);
    return std::isfinite(v) ? v : NAN;
  } catch (const Error&) {
    return NAN;
  }
}

// Walks from t0 in direction dir until V >= thr, then bisects the crossing.
double find_cut(const std::function<double(double)>& V, double t0, double dir, double thr, double limit) {
  double step = 1e-2 * (1 + std::fabs(t0));
  double inner = t0, outer = t0;
  for (;;) {
    outer = t0 + dir * step;
    if (dir > 0 ? outer >= limit : outer <= limit) throw Error(ErrorKind::domain, "potential does not confine on this side");
    double v = safe_V(V, outer);
    if (std::isnan(v) || v >= thr) break;
    inner = outer;
    step *= 1.5;
    if (step > 1e6) throw Error(ErrorKind::domain, "potential does not confine on this side");
  }
  for (int i = 0; i < 200 && std::fabs(outer - inner) > 1e-12 * (1 + std::fabs(outer)); ++i) {
    double mid = (inner + outer) / 2;
    double v = safe_V(V, mid);
    if (std::isnan(v) || v >= thr)
      outer = mid;
    else
      inner = mid;
  }
  return outer;
}

}  // namespace

FdDomain fd_domain(const std::function<double(double)>& V, const RealInterval& t_domain, double e_abs_max) {
  FdDomain out;
  out.threshold = 25 * std::max(e_abs_max, 1.0);
  out.domain = t_domain;
  out.lo_rule = out.hi_rule = "endpoint";
  if (std::isfinite(t_domain.lo) && std::isfinite(t_domain.hi)) return out;

  std::vector<double> scan;
  if (std::isfinite(t_domain.lo)) {
    for (int i = 0; i <= 600; ++i) scan.push_back(t_domain.lo + std::pow(10.0, -3 + i / 100.0));
  } else if (std::isfinite(t_domain.hi)) {
    for (int i = 0; i <= 600; ++i) scan.push_back(t_domain.hi - std::pow(10.0, -3 + i / 100.0));
  } else {
    for (int i = -600; i <= 600; ++i) scan.push_back(i / 10.0);
  }
  double best_t = NAN, best_v = INFINITY;
  for (double t : scan) {
    double v = safe_V(V, t);
    if (!std::isnan(v) && v < best_v) best_v = v, best_t = t;
  }
  if (std::isnan(best_t)) throw Error(ErrorKind::domain, "potential is not finite anywhere on the scan");
  if (!std::isfinite(t_domain.lo)) {
    out.domain.lo = find_cut(V, best_t, -1, out.threshold, -INFINITY);
    out.lo_rule = "V >= threshold";
  }
  if (!std::isfinite(t_domain.hi)) {
    out.domain.hi = find_cut(V, best_t, 1, out.threshold, INFINITY);
    out.hi_rule = "V >= threshold";
  }
  return out;
}

}  // namespace qes

namespace qes {

FdCheck fd_check(const QesProblem& prob, const CoordMap& map, const std::vector<double>& algebraic, int grid_points) {
  FdCheck c;
  c.algebraic = algebraic;
  double emax = 0;
  for (double e : algebraic) emax = std::max(emax, std::fabs(e));
  auto V = potential_function(prob, map);
  c.domain = fd_domain(V, map.t_domain, emax);
  c.fd = fd_schrodinger(V, c.domain.domain, grid_points, static_cast<int>(algebraic.size()), c.domain.lo_rule != "endpoint",
                        c.domain.hi_rule != "endpoint");
  c.ok = true;
  for (size_t i = 0; i < algebraic.size(); ++i) {
    double rel = std::fabs(c.fd.levels[i] - algebraic[i]) / std::max(std::fabs(algebraic[i]), 1.0);
    c.rel_error.push_back(rel);
    c.ok = c.ok && rel <= 0.01;
  }
  return c;
}

}  // namespace qes
