#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qes/errors.hpp"
#include "qes/potential.hpp"

using namespace qes;

TEST_CASE("particle in a box") {
  auto r = fd_schrodinger([](double) { return 0.0; }, {0.0, std::numbers::pi}, 4001, 3);
  REQUIRE(r.levels.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(r.levels[i] == doctest::Approx((i + 1) * (i + 1)).epsilon(1e-5));
  CHECK(r.grid_points == 4001);
  CHECK(r.unreliable_truncation);
  CHECK_FALSE(fd_schrodinger([](double) { return 0.0; }, {0.0, std::numbers::pi}, 4001, 1, false, false).unreliable_truncation);
}

TEST_CASE("harmonic oscillator") {
  auto V = [](double t) { return t * t; };
  FdDomain d = fd_domain(V, {-kInf, kInf}, 5.0);
  CHECK(d.lo_rule != "endpoint");
  CHECK(d.hi_rule != "endpoint");
  CHECK(V(d.domain.hi) >= d.threshold * 0.999);
  auto r = fd_schrodinger(V, d.domain, 4001, 3);
  CHECK(r.levels[0] == doctest::Approx(1).epsilon(1e-4));
  CHECK(r.levels[1] == doctest::Approx(3).epsilon(1e-4));
  CHECK(r.levels[2] == doctest::Approx(5).epsilon(1e-4));
  CHECK_FALSE(r.unreliable_truncation);
}

TEST_CASE("a box that is too short is flagged") {
  auto r = fd_schrodinger([](double t) { return t * t; }, {-1.0, 1.0}, 1001, 1);
  CHECK(r.unreliable_truncation);
  CHECK(r.boundary_mass > 1e-4);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(fd_schrodinger([](double) { return 0.0; }, {0.0, 1.0}, 50, 1), Error);
  CHECK_THROWS_AS(fd_schrodinger([](double) { return 0.0; }, {0.0, kInf}, 1000, 1), Error);
}

TEST_CASE("Bender-Dunne levels and second order convergence") {
  QesProblem prob = instantiate("T1.x", {{"alpha", 1}, {"beta", 0}, {"gamma", -1}}, 3);
  const CoordMap& map = coord_map("t^2/4");
  std::vector<double> exact = {-7.398556194, -2.293766823, 2.293766823, 7.398556194};
  SpectrumResult sp = solve_spectrum(generate(prob, 4), 3);
  for (int i = 0; i < 4; ++i) CHECK(sp.eigenvalues[i] == doctest::Approx(exact[i]).epsilon(1e-8));
  FdCheck fine = fd_check(prob, map, sp.eigenvalues, 4001);
  CHECK(fine.ok);
  CHECK(fine.domain.lo_rule == "endpoint");
  FdCheck coarse = fd_check(prob, map, sp.eigenvalues, 2001);
  for (int i = 0; i < 4; ++i) {
    CHECK(fine.rel_error[i] < 1e-5);
    double ratio = coarse.rel_error[i] / fine.rel_error[i];
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
  }
}
