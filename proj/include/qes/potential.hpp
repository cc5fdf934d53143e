#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qes/catalog.hpp"
#include "qes/errors.hpp"
#include "qes/spectrum.hpp"

namespace qes {

// Singular potential at a requested sample point.
class SingularPoint : public Error {
 public:
  SingularPoint(double t, const std::string& what) : Error(ErrorKind::singularity, what), t_(t) {}
  double t() const noexcept { return t_; }

 private:
  double t_;
};

// x(t) solving dx/dt = +-sqrt(A(x)).
struct CoordMap {
  std::string id;
  std::function<double(double)> x_of_t;
  RealInterval t_domain;
  RealInterval sample_range;  // comfortably interior t values for sweeps
  double dx_dt_identity_tol = 1e-10;
};

const std::vector<CoordMap>& coord_maps();
const CoordMap& coord_map(const std::string& id);

// Schrodinger potential of L at x = x(t), B(0) = 0 gauge.
// Throws domain when A(x) <= 0 and singularity at a pole of W'/W.
double potential_chain_rule(const QesProblem& prob, const CoordMap& map, double t);
double potential_at_x(const QesProblem& prob, double x);

// Precomputed double-precision evaluator of V(t) for repeated use.
std::function<double(double)> potential_function(const QesProblem& prob, const CoordMap& map);

double closed_form_V(const std::string& id, const ParamMap& params, int n, double t);

// max over samples of |(dx/dt)^2 - A(x)| / (1 + |A(x)|), derivative by Richardson extrapolation.
double coord_identity_error(const CoordMap& map, const RatPoly& A, const std::vector<double>& ts);

// A^(1/4) W^(1/2) psi_i at x = x(t).
double transform_eigenfunction(const QesProblem& prob, const CatalogEntry& entry, const CoordMap& map,
                               const SpectrumResult& spec, int i, double t);

struct PotentialSample {
  double t = 0;
  double V = 0;
  std::vector<double> psi;  // transformed eigenfunctions, when requested
};

struct PotentialProfile {
  std::string id;
  int n = 0;
  ParamMap params;
  std::string provenance;  // "chain_rule" or "closed_form"
  std::vector<PotentialSample> samples;
};

// Uniform samples of V on [t_min, t_max]; steps = 1 gives t_min only.
// Throws singularity naming the first bad t.
PotentialProfile sample_potential(const std::string& id, const ParamMap& params, int n, double t_min, double t_max,
                                  int steps, bool closed_form = false, const SpectrumResult* with_psi = nullptr);

std::string profile_csv(const PotentialProfile& profile);

struct FdResult {
  std::vector<double> levels;
  double boundary_mass = 0;  // largest ground state weight in the outer 5% of a checked end
  bool unreliable_truncation = false;
  int grid_points = 0;
  RealInterval domain;
};

// Lowest `levels` eigenvalues of -d2/dt2 + V on a uniform grid with Dirichlet ends.
// Ends marked as cuts are checked for ground state weight above 1e-4.
FdResult fd_schrodinger(const std::function<double(double)>& V, const RealInterval& domain, int grid_points,
                        int levels, bool lo_is_cut = true, bool hi_is_cut = true);

struct FdDomain {
  RealInterval domain;
  std::string lo_rule, hi_rule;  // "endpoint" or "V >= threshold"
  double threshold = 0;
};

// Keeps finite ends; cuts infinite ends where V first reaches 25 max(|E|, 1).
FdDomain fd_domain(const std::function<double(double)>& V, const RealInterval& t_domain, double e_abs_max);

struct FdCheck {
  FdDomain domain;
  FdResult fd;
  std::vector<double> algebraic;
  std::vector<double> rel_error;  // |E_fd - E| / max(|E|, 1)
  bool ok = false;                // all within 1%
};

// Lowest n+1 levels of the Schrodinger form of a catalog model against its algebraic spectrum.
FdCheck fd_check(const QesProblem& prob, const CoordMap& map, const std::vector<double>& algebraic, int grid_points);

}  // namespace qes
