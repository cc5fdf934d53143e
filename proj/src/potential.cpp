#include "qes/potential.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "qes/ratfunc.hpp"

namespace qes {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<CoordMap> build_maps() {
  std::vector<CoordMap> m;
  m.push_back({"t^2/4", [](double t) { return t * t / 4; }, {0, kInf}, {0.3, 4.0}});
  m.push_back({"e^t", [](double t) { return std::exp(t); }, {-kInf, kInf}, {-3.0, 3.0}});
  m.push_back({"(1+sin t)/2", [](double t) { return (1 + std::sin(t)) / 2; }, {-kPi / 2, kPi / 2}, {-1.4, 1.4}});
  m.push_back({"4/t^2", [](double t) { return 4 / (t * t); }, {0, kInf}, {0.4, 4.0}});
  m.push_back({"1-tanh^2(t/2)",
               [](double t) {
                 double c = std::cosh(t / 2);
                 return 1 / (c * c);
               },
               {0, kInf},
               {0.2, 4.0}});
  m.push_back({"1/t", [](double t) { return 1 / t; }, {0, kInf}, {0.2, 4.0}});
  m.push_back({"4/(4+t^2)", [](double t) { return 4 / (4 + t * t); }, {0, kInf}, {0.2, 4.0}});
  m.push_back({"-1/sinh t", [](double t) { return -1 / std::sinh(t); }, {-kInf, 0}, {-3.0, -0.2}});
  m.push_back({"1/cosh t", [](double t) { return 1 / std::cosh(t); }, {0, kInf}, {0.2, 4.0}});
  m.push_back({"e^t/(1+e^t)", [](double t) { return 1 / (1 + std::exp(-t)); }, {-kInf, kInf}, {-4.0, 4.0}});
  return m;
}

long double horner(const std::vector<long double>& c, long double x) {
  long double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<long double> ld_coeffs(const RatPoly& p) {
  std::vector<long double> out;
  for (const auto& c : p.coeffs()) out.push_back(static_cast<long double>(to_double(c)));
  return out;
}

// V = -A'^2/(16A) + A''/4 + g^2 A/4 + g' A/2 + g A'/2 + B with g = W'/W = (F - A')/A
struct Evaluator {
  std::vector<long double> A, A1, A2, B, gn, gd, dgn, dgd;

  explicit Evaluator(const QesProblem& prob) {
    const RatPoly& a = prob.spec.A;
    RatPoly da = poly_derivative(a);
    RatFunc g(prob.spec.F - da, a);
    RatFunc dg = ratfunc_derivative(g);
    A = ld_coeffs(a);
    A1 = ld_coeffs(da);
    A2 = ld_coeffs(poly_derivative(a, 2));
    B = ld_coeffs(prob.B);
    gn = ld_coeffs(g.num());
    gd = ld_coeffs(g.den());
    dgn = ld_coeffs(dg.num());
    dgd = ld_coeffs(dg.den());
  }

  double operator()(double xd) const {
    const long double x = xd;
    const long double a = horner(A, x);
    if (!(a > 0)) throw Error(ErrorKind::domain, "A(x) <= 0 at x = " + std::to_string(xd));
    const long double den = horner(gd, x), dden = horner(dgd, x);
    if (den == 0 || dden == 0) throw Error(ErrorKind::singularity, "W'/W has a pole at x = " + std::to_string(xd));
    const long double g = horner(gn, x) / den;
    const long double dg = horner(dgn, x) / dden;
    const long double a1 = horner(A1, x), a2 = horner(A2, x);
    const long double v = -a1 * a1 / (16 * a) + a2 / 4 + g * g * a / 4 + dg * a / 2 + g * a1 / 2 + horner(B, x);
    return static_cast<double>(v);
  }
};

bool inside(const RealInterval& iv, double t) { return t > iv.lo && t < iv.hi; }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

const std::vector<CoordMap>& coord_maps() {
  static const std::vector<CoordMap> maps = build_maps();
  return maps;
}

const CoordMap& coord_map(const std::string& id) {
  for (const auto& m : coord_maps())
    if (m.id == id) return m;
  throw Error(ErrorKind::unknown_id, "unknown coordinate map '" + id + "'");
}

double potential_at_x(const QesProblem& prob, double x) { return Evaluator(prob)(x); }

std::function<double(double)> potential_function(const QesProblem& prob, const CoordMap& map) {
  auto ev = std::make_shared<Evaluator>(prob);
  auto x_of_t = map.x_of_t;
  return [ev, x_of_t](double t) { return (*ev)(x_of_t(t)); };
}

double potential_chain_rule(const QesProblem& prob, const CoordMap& map, double t) {
  return Evaluator(prob)(map.x_of_t(t));
}

double closed_form_V(const std::string& id, const ParamMap& params, int n, double t) {
  const CatalogEntry& e = catalog_entry(id);
  if (!e.has_closed_form()) throw Error(ErrorKind::invalid_argument, "model " + id + " has no closed-form potential");
  ParamMap full = params.count("n") ? params : complete_params(e, params, n);
  double v = e.V_closed(t, NumParams::from(full, n));
  if (!std::isfinite(v)) throw SingularPoint(t, "closed-form potential is singular at t = " + fmt(t));
  return v;
}

double coord_identity_error(const CoordMap& map, const RatPoly& A, const std::vector<double>& ts) {
  double worst = 0;
  for (double t : ts) {
    // central differences at h, h/2, h/4 with two Richardson sweeps
    auto d = [&](double h) { return (map.x_of_t(t + h) - map.x_of_t(t - h)) / (2 * h); };
    double h = 4e-3 * std::max(std::fabs(t), 0.1);
    double d1 = d(h), d2 = d(h / 2), d3 = d(h / 4);
    double r1 = (4 * d2 - d1) / 3, r2 = (4 * d3 - d2) / 3;
    double deriv = (16 * r2 - r1) / 15;
    double a = A.eval(map.x_of_t(t));
    worst = std::max(worst, std::fabs(deriv * deriv - a) / (1 + std::fabs(a)));
  }
  return worst;
}

double transform_eigenfunction(const QesProblem& prob, const CatalogEntry& entry, const CoordMap& map,
                               const SpectrumResult& spec, int i, double t) {
  if (i < 0 || i >= static_cast<int>(spec.eigenfunctions.size()))
    throw Error(ErrorKind::out_of_range, "no eigenfunction " + std::to_string(i));
  double x = map.x_of_t(t);
  double a = prob.spec.A.eval(x);
  if (!(a > 0)) throw Error(ErrorKind::domain, "A(x) <= 0 at t = " + fmt(t));
  double lw = log_weight(entry, prob.spec.params, prob.n, x);
  if (!std::isfinite(lw)) throw Error(ErrorKind::domain, "weight undefined at t = " + fmt(t));
  return std::exp(0.25 * std::log(a) + 0.5 * lw) * spec.eigenfunctions[static_cast<size_t>(i)].eval(x);
}

PotentialProfile sample_potential(const std::string& id, const ParamMap& params, int n, double t_min, double t_max,
                                  int steps, bool closed_form, const SpectrumResult* with_psi) {
  const CatalogEntry& e = catalog_entry(id);
  if (e.coord_map.empty()) throw Error(ErrorKind::invalid_argument, "model " + id + " has no elementary coordinate map");
  if (steps < 1) throw Error(ErrorKind::invalid_argument, "steps must be at least 1");
  if (!(t_max >= t_min)) throw Error(ErrorKind::invalid_argument, "t-max must not be below t-min");
  if (closed_form && !e.has_closed_form())
    throw Error(ErrorKind::invalid_argument, "model " + id + " has no closed-form potential");
  const CoordMap& map = coord_map(e.coord_map);
  QesProblem prob = instantiate(id, params, n);
  Evaluator ev(prob);
  PotentialProfile prof;
  prof.id = id;
  prof.n = n;
  prof.params = prob.spec.params;
  prof.provenance = closed_form ? "closed_form" : "chain_rule";
  for (int s = 0; s < steps; ++s) {
    double t = steps == 1 ? t_min : t_min + (t_max - t_min) * s / (steps - 1);
    if (!inside(map.t_domain, t)) throw SingularPoint(t, "t = " + fmt(t) + " is outside the open domain of " + map.id);
    PotentialSample smp;
    smp.t = t;
    try {
      smp.V = closed_form ? e.V_closed(t, NumParams::from(prob.spec.params, n)) : ev(map.x_of_t(t));
    } catch (const Error& err) {
      throw SingularPoint(t, "potential is singular at t = " + fmt(t) + ": " + err.what());
    }
    if (!std::isfinite(smp.V)) throw SingularPoint(t, "potential is singular at t = " + fmt(t));
    if (with_psi)
      for (int i = 0; i < static_cast<int>(with_psi->eigenvalues.size()); ++i)
        smp.psi.push_back(transform_eigenfunction(prob, e, map, *with_psi, i, t));
    prof.samples.push_back(std::move(smp));
  }
  return prof;
}

std::string profile_csv(const PotentialProfile& profile) {
  std::string out = "t,V";
  size_t levels = profile.samples.empty() ? 0 : profile.samples.front().psi.size();
  for (size_t i = 0; i < levels; ++i) out += ",psi_" + std::to_string(i);
  out += "\n";
  for (const auto& s : profile.samples) {
    out += fmt(s.t) + "," + fmt(s.V);
    for (double p : s.psi) out += "," + fmt(p);
    out += "\n";
  }
  return out;
}

}  // namespace qes
