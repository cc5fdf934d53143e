#include <random>

#include "doctest.h"
#include "qes/catalog.hpp"
#include "qes/errors.hpp"
#include "qes/recursion.hpp"

using namespace qes;

namespace {

QesProblem bender_dunne(int n = 3) {
  MasterSpec s;
  s.A = RatPoly{0, 1};
  s.F = RatPoly{2, 0, -2};
  return solve_constraints(s, n);
}

const RatPoly E{0, 1};

// Independent oracle: match powers of x in L(sum c_m x^m) = E sum c_m x^m directly.
std::vector<RatPoly> brute_force(const QesProblem& p, int M) {
  const RatPoly &A = p.spec.A, &F = p.spec.F, &B = p.B;
  std::vector<RatPoly> c{RatPoly{1}};
  for (int j = 0; j + 1 <= M; ++j) {
    RatPoly rest;  // coefficient of x^j, every c_m with m <= j
    auto get = [&](int m) { return m >= 0 && m <= j ? c[static_cast<size_t>(m)] : RatPoly(); };
    for (int i = 0; i <= A.degree(); ++i) {
      int m = j - i + 2;
      if (m <= j) rest -= get(m) * (A.coeff(i) * m * (m - 1));
    }
    for (int i = 0; i <= F.degree(); ++i) {
      int m = j - i + 1;
      if (m <= j) rest -= get(m) * (F.coeff(i) * m);
    }
    for (int i = 0; i <= B.degree(); ++i) rest += get(j - i) * B.coeff(i);
    rest -= E * get(j);
    // unknown c_{j+1} enters as -(j+1)(j A_1 + F_0) c_{j+1}
    Rational lead = Rational(j + 1) * (A.coeff(1) * j + F.coeff(0));
    c.push_back(rest / lead);
  }
  return c;
}

Rational rnd(std::mt19937_64& rng, int lim = 20) {
  Rational r(static_cast<long>(rng() % (2 * lim + 1)) - lim, 1 + static_cast<long>(rng() % 6));
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("Bender-Dunne polynomials") {
  EnergySequence seq = generate(bender_dunne(), 4);
  CHECK(seq[0] == RatPoly{1});
  CHECK(seq[1] == RatPoly{0, Rational(-1, 2)});
  CHECK(seq[2] == RatPoly{-1, 0, Rational(1, 12)});
  CHECK(seq[3] == RatPoly{0, Rational(1, 4), 0, Rational(-1, 144)});
  CHECK(seq[4] == RatPoly{Rational(1, 10), 0, Rational(-1, 48), 0, Rational(1, 2880)});
}

TEST_CASE("P_0 = 1 always and degrees grow by one") {
  std::mt19937_64 rng(2);
  for (const auto& e : catalog()) {
    auto params = sample_params(e, 3, rng);
    REQUIRE(params);
    EnergySequence seq = generate(instantiate(e.id, *params, 3), 10);
    CHECK(seq[0] == RatPoly{1});
    for (int m = 0; m <= 10; ++m) CHECK(seq[m].degree() == m);
  }
}

TEST_CASE("recursion matches brute-force coefficient matching") {
  std::mt19937_64 rng(7);
  // T2.x4 with beta=-1, gamma=0, delta=0, n=2
  QesProblem p = instantiate("T2.x4", {{"beta", -1}, {"gamma", 0}, {"delta", 0}}, 2);
  auto bf = brute_force(p, 6);
  EnergySequence seq = generate(p, 6);
  for (int m = 0; m <= 6; ++m) CHECK(seq[m] == bf[static_cast<size_t>(m)]);
  for (const auto& e : catalog()) {
    for (int t = 0; t < 3; ++t) {
      int n = static_cast<int>(rng() % 6);
      auto params = sample_params(e, n, rng);
      REQUIRE(params);
      QesProblem q = instantiate(e.id, *params, n);
      auto b = brute_force(q, n + 4);
      EnergySequence s = generate(q, n + 4);
      for (int m = 0; m <= n + 4; ++m) CHECK(s[m] == b[static_cast<size_t>(m)]);
    }
  }
}

TEST_CASE("recursion identity holds exactly") {
  std::mt19937_64 rng(13);
  for (const auto& e : catalog()) {
    int n = static_cast<int>(rng() % 7);
    auto params = sample_params(e, n, rng);
    REQUIRE(params);
    EnergySequence seq = generate(instantiate(e.id, *params, n), n + 7);
    for (int m = 0; m + 2 <= seq.max_index(); ++m) CHECK(recursion_identity(seq, m).is_zero());
  }
}

TEST_CASE("breakdown names m") {
  MasterSpec s;
  s.A = RatPoly{0, 1};
  s.F = RatPoly{-2, 0, 1};  // c1 vanishes when A1 (m+1) + F0 = 0, i.e. m = 1
  QesProblem p = solve_constraints(s, 1);
  try {
    generate(p, 5);
    FAIL("expected breakdown");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::recursion_breakdown);
    CHECK(std::string(e.what()).find("m=1") != std::string::npos);
  }
}

TEST_CASE("truncation is asserted") {
  QesProblem p = bender_dunne();
  CHECK(truncation_residuals(p).ok());
  p.B = p.B + RatPoly{0, 1};
  CHECK_FALSE(truncation_residuals(p).ok());
  CHECK_THROWS_AS(assert_truncation(p), Error);
}

TEST_CASE("recursion closed forms, order 3") {
  QesProblem p = bender_dunne();
  CHECK(closed_form_oracle(p, 1) == RatPoly{0, Rational(-1, 2)});
  CHECK(closed_form_oracle(p, 2) == RatPoly{-1, 0, Rational(1, 12)});
  CHECK_THROWS_AS(closed_form_oracle(p, 6), Error);
  std::mt19937_64 rng(19);
  int draws = 0;
  for (const auto& e : catalog()) {
    if (e.table != 1) continue;
    for (int t = 0; t < 4; ++t) {
      int n = static_cast<int>(rng() % 7);
      auto params = sample_params(e, n, rng, false);
      REQUIRE(params);
      QesProblem q = instantiate(e.id, *params, n);
      EnergySequence seq = generate(q, 5);
      for (int m = 1; m <= 5; ++m) CHECK(closed_form_oracle(q, m) == seq[m]);
      ++draws;
    }
  }
  CHECK(draws >= 20);
}

TEST_CASE("recursion closed forms, order 4: pinned convention") {
  QesProblem p = instantiate("T2.x4", {{"beta", -1}, {"gamma", 0}, {"delta", 0}}, 2);
  Rational F0 = p.spec.F.coeff(0);
  CHECK(closed_form_oracle(p, 1) == RatPoly{0, 1 / F0});
  CHECK_THROWS_AS(closed_form_oracle(p, 5), Error);
  std::mt19937_64 rng(29);
  for (const auto& e : catalog()) {
    if (e.k() != 4) continue;
    for (int t = 0; t < 3; ++t) {
      int n = static_cast<int>(rng() % 6);
      auto params = sample_params(e, n, rng, false);
      REQUIRE(params);
      QesProblem q = instantiate(e.id, *params, n);
      // P_m -> -P_m with B -> -B reproduces P_1 and P_2 exactly
      CHECK(closed_form_oracle(q, 1) == closed_form_mapped(q, 1));
      CHECK(closed_form_oracle(q, 2) == closed_form_mapped(q, 2));
      // P_3 differs by a B-carrying term
      TaylorData d = taylor_data(q);
      Rational r = Rational(2) * d.B[1] / (3 * d.F[0] * (2 * d.A[1] + d.F[0]));
      CHECK(closed_form_oracle(q, 3) - closed_form_mapped(q, 3) == RatPoly{0, r});
    }
  }
}

TEST_CASE("order 4 closed forms with B = 0 agrees under the mapping") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    MasterSpec s;
    s.A = RatPoly{0, rnd(rng), rnd(rng), rnd(rng), Rational(1 + static_cast<long>(rng() % 3))};
    Rational f0 = rnd(rng);
    if (f0 == 0) f0 = 5;
    s.F = RatPoly{f0, rnd(rng), rnd(rng)};
    s.fill_F3 = true;
    QesProblem q = solve_constraints(s, 1);  // n = 1: F''' = 0, B'' = 0
    q.B = RatPoly();                          // drop B' too
    for (int m = 1; m <= 4; ++m) CHECK(closed_form_oracle(q, m) == closed_form_mapped(q, m));
  }
}

TEST_CASE("parity") {
  EnergySequence bd = generate(bender_dunne(), 8);
  auto r = parity_check(bd);
  CHECK(r.applicable);
  CHECK(r.holds);
  QesProblem b1 = instantiate("T1.x", {{"alpha", 1}, {"beta", 1}, {"gamma", -1}}, 3);
  CHECK_FALSE(parity_check(generate(b1, 6)).applicable);
  QesProblem x2 = instantiate("T1.x2", {{"alpha", 1}, {"beta", -1}, {"gamma", -1}}, 2);
  CHECK_FALSE(parity_check(generate(x2, 6)).applicable);
}
