#include <random>

#include "doctest.h"
#include "qes/errors.hpp"
#include "qes/qes_model.hpp"
#include "qes/recursion.hpp"

using namespace qes;

namespace {

MasterSpec bd_spec() {
  MasterSpec s;
  s.A = RatPoly{0, 1};
  s.F = RatPoly{2, 0, -2};
  return s;
}

Rational rnd(std::mt19937_64& rng, int lim = 20) {
  Rational r(static_cast<long>(rng() % (2 * lim + 1)) - lim, 1 + static_cast<long>(rng() % 6));
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("invariance condition counts") {
  CHECK(invariance_conditions(3, 3).size() == 1);
  CHECK(invariance_conditions(4, 2).size() == 3);
  CHECK_THROWS_AS(invariance_conditions(5, 2), Error);
  CHECK_THROWS_AS(invariance_conditions(2, 2), Error);
  for (int k = 3; k <= 4; ++k)
    for (int n = 1; n < 6; ++n) CHECK(invariance_conditions(k, n).size() == static_cast<size_t>((k - 1) * (k - 2) / 2));
}

TEST_CASE("k=3, n=1 row gives B'(0) = F''(0)/2") {
  auto rows = invariance_conditions(3, 1);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].cA == 0);
  // -F''/2 * 1 + B' = 0
  CHECK(rows[0].cF == Rational(-1, 2));
  CHECK(rows[0].cB == 1);
}

TEST_CASE("Bender-Dunne constraint solve") {
  QesProblem p = solve_constraints(bd_spec(), 3);
  CHECK(p.B == RatPoly{0, -6});
  CHECK(p.order() == 3);
  CHECK_FALSE(p.weight_constraint_F3.has_value());
}

TEST_CASE("n = 0 gives B = 0") {
  CHECK(solve_constraints(bd_spec(), 0).B.is_zero());
  MasterSpec s;
  s.A = RatPoly{0, 0, 0, 0, 1};
  s.F = RatPoly{-3};
  s.fill_F3 = true;
  QesProblem p = solve_constraints(s, 0);
  CHECK(p.B.is_zero());
}

TEST_CASE("A = x^4, n = 3") {
  MasterSpec s;
  s.A = RatPoly{0, 0, 0, 0, 1};  // A'''' = 24
  s.F = RatPoly{-3, 1, 2, -4};   // F''' = -24
  QesProblem p = solve_constraints(s, 3);
  CHECK(derivative_at_zero(p.B, 2) == -12);
  REQUIRE(p.weight_constraint_F3.has_value());
  CHECK(*p.weight_constraint_F3 == -24);
  s.F = RatPoly{-3, 1, 2, -3};
  CHECK_THROWS_AS(solve_constraints(s, 3), Error);
  try {
    solve_constraints(s, 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::infeasible_weight);
  }
  s.fill_F3 = true;
  CHECK(derivative_at_zero(solve_constraints(s, 3).spec.F, 3) == -24);
}

TEST_CASE("degenerate and unsupported specs") {
  MasterSpec s = bd_spec();
  s.F = RatPoly{0, 1};
  try {
    solve_constraints(s, 2);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degenerate_spec);
  }
  s = bd_spec();
  s.A = RatPoly{0, 0, 0, 0, 0, 1};
  try {
    solve_constraints(s, 2);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unsupported_order);
  }
}

TEST_CASE("apply_operator") {
  QesProblem p = solve_constraints(bd_spec(), 3);
  CHECK(apply_operator(p, RatPoly{1}) == p.B);
  // x^4 is outside the subspace and its image leaves it
  CHECK(apply_operator(p, RatPoly::monomial(1, 4)).degree() == 5);
}

TEST_CASE("validate_spec") {
  MasterSpec s = bd_spec();
  s.params = {{"alpha", Rational(1)}, {"gamma", Rational(-1)}};
  s.param_constraints = {Inequality::parse("alpha > -1"), Inequality::parse("gamma < 0")};
  CHECK(validate_spec(s).ok());
  s.params["alpha"] = -1;
  auto rep = validate_spec(s);
  REQUIRE(rep.issues.size() == 1);
  CHECK(rep.issues[0].kind == ValidationIssue::Kind::parameter_range);
  MasterSpec bad = bd_spec();
  bad.A = RatPoly{1, 1};
  auto r2 = validate_spec(bad);
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.issues[0].kind == ValidationIssue::Kind::structural);
}

TEST_CASE("subspace invariance and constraint equivalence on random problems") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    int n = static_cast<int>(rng() % 9);
    bool four = trial % 2;
    MasterSpec s;
    std::vector<Rational> a{0, rnd(rng), rnd(rng), rnd(rng)};
    if (four) a.push_back(rnd(rng) == 0 ? Rational(1) : rnd(rng) + Rational(1, 7));
    s.A = RatPoly(a);
    Rational f0 = rnd(rng);
    if (f0 == 0) f0 = 1;
    s.F = RatPoly{f0, rnd(rng), rnd(rng)};
    s.fill_F3 = four;
    if (s.A.degree() < 1) continue;
    QesProblem p = solve_constraints(s, n);
    for (int l = 0; l <= n; ++l) CHECK(apply_operator(p, RatPoly::monomial(1, l)).degree() <= n);
    TaylorData t = taylor_data(p);
    for (const auto& row : invariance_conditions(p.order(), n)) CHECK(row.residual(t) == 0);
  }
}

TEST_CASE("two subspace conditions imply the B'' and F''' formulas") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Rational A4 = rnd(rng);
    if (A4 == 0) A4 = 3;
    auto rows = invariance_conditions(4, n);
    // rows 1 and 2 are (n,2) and (n-1,2): cA A4 + cF F3 + cB B2 = 0
    const auto& r1 = rows[1];
    const auto& r2 = rows[2];
    Rational det = r1.cF * r2.cB - r2.cF * r1.cB;
    REQUIRE(det != 0);
    Rational F3 = (-r1.cA * A4 * r2.cB + r2.cA * A4 * r1.cB) / det;
    Rational B2 = (-r1.cF * r2.cA * A4 + r2.cF * r1.cA * A4) / det;
    CHECK(F3 == -A4 * (n - 1) / 2);
    CHECK(B2 == -A4 * n * (n - 1) / 12);
  }
}

TEST_CASE("termination coefficients imply the same formulas") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Rational A4 = rnd(rng);
    if (A4 == 0) A4 = -2;
    TaylorData t{};
    t.A[4] = A4;
    // c4(m) = A4/24 (m-1)(m-2) + F3/6 (m-1) - B2/2 is linear in (F3, B2); solve c4(n) = c4(n+1) = 0
    auto c4 = [&](int m, const Rational& F3, const Rational& B2) {
      TaylorData u = t;
      u.F[3] = F3;
      u.B[2] = B2;
      return recursion_coeffs(u, m).c4;
    };
    Rational a0 = c4(n, 0, 0), aF = c4(n, 1, 0) - a0, aB = c4(n, 0, 1) - a0;
    Rational b0 = c4(n + 1, 0, 0), bF = c4(n + 1, 1, 0) - b0, bB = c4(n + 1, 0, 1) - b0;
    Rational det = aF * bB - bF * aB;
    REQUIRE(det != 0);
    Rational F3 = (-a0 * bB + b0 * aB) / det;
    Rational B2 = (-aF * b0 + bF * a0) / det;
    CHECK(F3 == -A4 * (n - 1) / 2);
    CHECK(B2 == -A4 * n * (n - 1) / 12);
  }
}
