#include <random>

#include "doctest.h"
#include "qes/catalog.hpp"
#include "qes/errors.hpp"
#include "qes/matrix_oracle.hpp"
#include "qes/spectrum.hpp"
#include "qes/verify.hpp"

using namespace qes;

namespace {

Rational draw(std::mt19937_64& rng, int range = 12) {
  std::uniform_int_distribution<int> p(-range, range), q(1, 4);
  Rational r(p(rng), q(rng));
  r.canonicalize();
  return r;
}

// Random order-4 spec with a nonzero leading drift, closed by the weight constraint.
QesProblem random_problem(std::mt19937_64& rng, int n, int k) {
  for (;;) {
    MasterSpec s;
    std::vector<Rational> a(static_cast<size_t>(k + 1)), f(static_cast<size_t>(k));
    a[0] = 0;
    for (int i = 1; i <= k; ++i) a[static_cast<size_t>(i)] = draw(rng);
    for (int i = 0; i < k; ++i) f[static_cast<size_t>(i)] = draw(rng);
    if (a[static_cast<size_t>(k)] == 0 || f[0] == 0) continue;
    s.A = RatPoly(a);
    s.F = RatPoly(f);
    s.fill_F3 = true;
    try {
      QesProblem p = solve_constraints(s, n);
      generate(p, n + 3);
      return p;
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("every invariance row vanishes after the constraint solve") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    int k = 3 + trial % 2, n = trial % 7;
    QesProblem p = random_problem(rng, n, k);
    TaylorData t = taylor_data(p);
    for (const auto& row : invariance_conditions(k, n)) CHECK(row.residual(t) == 0);
    CHECK(truncation_residuals(p).ok());
    CHECK(p.B.eval(Rational(0)) == 0);
    // L maps degree n polynomials into themselves
    for (int j = 0; j <= n; ++j) {
      std::vector<Rational> c(static_cast<size_t>(j + 1));
      c.back() = 1;
      CHECK(apply_operator(p, RatPoly(c)).degree() <= n);
    }
  }
}

TEST_CASE("recursion, factorization and oracle agree on random specs") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 30; ++trial) {
    int k = 3 + trial % 2, n = 1 + trial % 6;
    QesProblem p = random_problem(rng, n, k);
    EnergySequence seq = generate(p, n + 7);
    for (int m = 0; m + 2 <= seq.max_index(); ++m) CHECK(recursion_identity(seq, m).is_zero());
    CHECK(seq[n + 1].degree() == n + 1);
    FactorizationReport f = factorization_check(seq, n, 6);
    CHECK(f.all_exact);
    OracleReport o = oracle_compare(p, seq, false);
    CHECK(o.equal);
    CHECK(o.trace_ok);
    RestrictedMatrix m = build_matrix(p);
    auto [below, above] = m.bandwidth();
    CHECK(below <= k - 2);
    CHECK(above <= 1);
  }
}

TEST_CASE("trace of the restricted matrix equals the sum of eigenvalues") {
  QesProblem p = instantiate("T1.x", {{"alpha", 1}, {"beta", 0}, {"gamma", -1}}, 3);
  SpectrumResult sp = solve_spectrum(generate(p, 4), 3);
  double sum = 0;
  for (double e : sp.eigenvalues) sum += e;
  CHECK(sum == doctest::Approx(build_matrix(p).trace().get_d()).epsilon(1e-12));
}

TEST_CASE("self-adjoint catalog draws have real simple spectra with 0..n nodes") {
  std::mt19937_64 rng(303);
  for (const auto& e : catalog()) {
    if (e.table == 0 || !e.self_adjoint) continue;
    for (int n = 1; n <= 5; ++n) {
      auto params = sample_params(e, n, rng);
      REQUIRE(params);
      QesProblem p = instantiate(e.id, *params, n, {true, true});
      SpectrumResult sp = solve_spectrum(generate(p, n + 1), n);
      REQUIRE(sp.eigenvalues.size() == static_cast<size_t>(n + 1));
      for (int i = 0; i < n; ++i) CHECK_MESSAGE(sp.eigenvalues[i] < sp.eigenvalues[i + 1], e.id << " n=" << n);
      OscillationReport o = oscillation_check(sp, p.spec.interval);
      CHECK_MESSAGE(o.ok, e.id << " n=" << n);
    }
  }
}

TEST_CASE("verify sweep over the registry") {
  VerifyOptions opt;
  opt.trials = 4;
  opt.seed = 7;
  opt.threads = 1;
  VerifyReport r = run_verify(opt);
  CHECK(r.models.size() == catalog().size());
  for (const auto& m : r.models)
    for (const auto& p : m.properties) CHECK_MESSAGE(p.failures == 0, m.id << ": " << p.name << ": " << p.first_failure);
  CHECK(r.ok());
}

TEST_CASE("verify is reproducible for a fixed seed") {
  VerifyOptions opt;
  opt.models = {"T1.x3", "T2.x2(1-x)2"};
  opt.trials = 3;
  opt.seed = 99;
  opt.threads = 2;
  CHECK(verify_json(run_verify(opt), false).dump() == verify_json(run_verify(opt), false).dump());
}

TEST_CASE("fault injection is caught") {
  VerifyOptions opt;
  opt.models = {"T1.x"};
  opt.trials = 3;
  opt.inject_fault = true;
  CHECK_FALSE(run_verify(opt).ok());
}
