#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "orbichi/series.hpp"

using namespace orbichi;

namespace {

std::mt19937 rng(20240811);

Rational random_rational() {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  return Rational(num(rng), den(rng));
}

RationalSeries random_series(int t) {
  RationalSeries s(t);
  for (int i = 0; i <= t; ++i) s.set_coeff(i, random_rational());
  return s;
}

/// Number of pairs of partitions (a, b) with |a| + |b| = n; the n-th
/// coefficient of prod_r (1 - q^r)^(-2).
long partition_pair_count(int n) {
  // p(k) by the standard recurrence via dynamic programming.
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= n; ++k) p[k] += p[k - part];
  long total = 0;
  for (int a = 0; a <= n; ++a) total += p[a] * p[n - a];
  return total;
}

}  // namespace

TEST_CASE("ring operations") {
  SECTION("(1+q)(1-q) = 1 - q^2") {
    RationalSeries a(2), b(2);
    a.set_coeff(0, 1);
    a.set_coeff(1, 1);
    b.set_coeff(0, 1);
    b.set_coeff(1, -1);
    RationalSeries prod = a * b;
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(1) == 0);
    CHECK(prod.coeff(2) == -1);
  }

  SECTION("derivative of exp stays exp shifted") {
    RationalSeries e = exp_series(RationalSeries::monomial(6, 1, 1));
    RationalSeries d = e.derivative();
    for (int i = 0; i <= 5; ++i) CHECK(d.coeff(i) == e.coeff(i));
  }

  SECTION("scale by zero") {
    RationalSeries s = random_series(5);
    RationalSeries z = s.scale(0);
    for (int i = 0; i <= 5; ++i) CHECK(z.coeff(i) == 0);
  }

  SECTION("ring axioms on random series") {
    for (int trial = 0; trial < 50; ++trial) {
      RationalSeries a = random_series(8), b = random_series(8),
                     c = random_series(8);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
    }
  }
}

TEST_CASE("exp and log") {
  SECTION("exp(q) coefficients are 1/n!") {
    RationalSeries e = exp_series(RationalSeries::monomial(3, 1, 1));
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(1) == 1);
    CHECK(e.coeff(2) == Rational(1, 2));
    CHECK(e.coeff(3) == Rational(1, 6));
  }

  SECTION("exp(2q) coefficients are 2^n/n!") {
    RationalSeries e = exp_series(RationalSeries::monomial(5, 1, 2));
    Rational expected = 1;
    for (int n = 0; n <= 5; ++n) {
      CHECK(e.coeff(n) == expected);
      expected = expected * 2 / (n + 1);
    }
  }

  SECTION("log of the geometric series is sum q^n/n") {
    RationalSeries geo = geom_power(1, 1, 6);
    RationalSeries l = log_series(geo);
    CHECK(l.coeff(0) == 0);
    for (int n = 1; n <= 6; ++n) CHECK(l.coeff(n) == Rational(1, n));
  }

  SECTION("round trips on 100 random series") {
    for (int trial = 0; trial < 100; ++trial) {
      RationalSeries f = random_series(8);
      f.set_coeff(0, 0);
      CHECK(log_series(exp_series(f)) == f);
      RationalSeries g = random_series(8);
      g.set_coeff(0, 1);
      CHECK(exp_series(log_series(g)) == g);
    }
  }

  SECTION("exp is a homomorphism from + to *") {
    for (int trial = 0; trial < 20; ++trial) {
      RationalSeries f = random_series(8), g = random_series(8);
      f.set_coeff(0, 0);
      g.set_coeff(0, 0);
      CHECK(exp_series(f + g) == exp_series(f) * exp_series(g));
    }
  }

  SECTION("bad constant terms are rejected") {
    CHECK_THROWS_AS(exp_series(RationalSeries::one(3)), BadConstantTerm);
    CHECK_THROWS_AS(log_series(RationalSeries::zero(3)), BadConstantTerm);
  }
}

TEST_CASE("geometric powers") {
  SECTION("(1-q)^-1") {
    RationalSeries s = geom_power(1, 1, 5);
    for (int n = 0; n <= 5; ++n) CHECK(s.coeff(n) == 1);
  }

  SECTION("(1-q)^-2 has coefficients n+1") {
    RationalSeries s = geom_power(1, 2, 5);
    for (int n = 0; n <= 5; ++n) CHECK(s.coeff(n) == n + 1);
  }

  SECTION("(1-q^2)^-2 at T=4") {
    RationalSeries s = geom_power(2, 2, 4);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == 0);
    CHECK(s.coeff(2) == 2);
    CHECK(s.coeff(3) == 0);
    CHECK(s.coeff(4) == 3);
  }

  SECTION("integer exponent matches the binomial expansion") {
    for (int c = 0; c <= 4; ++c) {
      RationalSeries s = geom_power(2, c, 8);
      for (int k = 0; 2 * k <= 8; ++k) {
        // C(c+k-1, k)
        Rational binom = 1;
        for (int i = 1; i <= k; ++i) binom = binom * (c + i - 1) / i;
        CHECK(s.coeff(2 * k) == binom);
      }
    }
  }

  SECTION("exponent additivity") {
    for (int trial = 0; trial < 20; ++trial) {
      Rational c1 = random_rational(), c2 = random_rational();
      RationalSeries lhs = geom_power(3, c1 + c2, 8);
      RationalSeries rhs = geom_power(3, c1, 8) * geom_power(3, c2, 8);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("products and comparison") {
  SECTION("prod over r<=4 of (1-q^r)^-2 counts partition pairs") {
    std::vector<RationalSeries> factors;
    for (int r = 1; r <= 4; ++r) factors.push_back(geom_power(r, 2, 4));
    RationalSeries prod = product_family(factors, 4);
    for (int n = 0; n <= 4; ++n)
      CHECK(prod.coeff(n) == partition_pair_count(n));
    CHECK(prod.coeff(4) == 20);
  }

  SECTION("empty product is 1") {
    RationalSeries prod = product_family({}, 3);
    CHECK(prod == RationalSeries::one(3));
  }

  SECTION("mismatch report carries the first differing index") {
    RationalSeries a = RationalSeries::one(4);
    RationalSeries b = RationalSeries::one(4);
    b.set_coeff(3, Rational(1, 7));
    auto m = series_mismatch(a, b);
    REQUIRE(m.has_value());
    CHECK(m->index == 3);
    CHECK(m->lhs == 0);
    CHECK(m->rhs == Rational(1, 7));
    CHECK(series_equal(a, a));
  }
}
