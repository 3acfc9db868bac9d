#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "reflgrp/cyclotomic.hpp"

using namespace reflgrp;

// Multiply two integer polynomials (ascending coefficients).  Used as an
// oracle so the identity below does not depend on CycNumber arithmetic.
static std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

TEST_CASE("cyclotomic polynomials, small cases") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});          // x - 1
  CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});           // x + 1
  CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});        // x^2 + 1
  CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});  // x^4 - x^2 + 1
  CHECK(static_cast<int>(cyclotomic_polynomial(12).size()) - 1 == euler_phi(12));
}

TEST_CASE("product of Phi_d over divisors of N is x^N - 1, N <= 60") {
  for (int n = 1; n <= 60; ++n) {
    std::vector<Int> prod{1};
    for (int d : divisors(n)) prod = poly_mul(prod, cyclotomic_polynomial(d));
    std::vector<Int> expect(n + 1, 0);
    expect[0] = -1;
    expect[n] = 1;
    REQUIRE(prod == expect);
  }
}

TEST_CASE("euler phi and divisors") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(29) == 28);
  CHECK(euler_phi(30) == 8);
  CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("basic arithmetic identities") {
  CycNumber z4 = CycNumber::zeta(4);
  CHECK(z4 * z4 == CycNumber(-1));

  CycNumber z3 = CycNumber::zeta(3);
  CHECK(z3 + z3 * z3 == CycNumber(-1));

  CHECK(CycNumber::zeta(5, 5) == CycNumber(1));
  CHECK(CycNumber::zeta(8, 3) * CycNumber::zeta(8, 5) == CycNumber(1));
}

TEST_CASE("inverse") {
  CHECK(CycNumber(1).inverse() == CycNumber(1));
  for (int n : {3, 4, 5, 7, 12}) {
    CHECK(CycNumber::zeta(n).inverse() == CycNumber::zeta(n, n - 1));
  }
  // (1 + zeta_4)^-1 = (1 - zeta_4)/2
  CycNumber a = CycNumber(1) + CycNumber::zeta(4);
  CycNumber expect = (CycNumber(1) - CycNumber::zeta(4)) * CycNumber(Rational(1, 2));
  CHECK(a.inverse() == expect);
  CHECK(a * a.inverse() == CycNumber(1));
  CHECK_THROWS_AS(CycNumber(0).inverse(), DivisionByZero);
}

TEST_CASE("rational extraction") {
  CycNumber c = CycNumber(Rational(7, 2)).promoted(8);
  CHECK(c.conductor() == 8);
  CHECK(c.to_rational() == Rational(7, 2));

  CycNumber z3 = CycNumber::zeta(3);
  CHECK((z3 + z3 * z3).to_rational() == Rational(-1));

  CHECK_THROWS_AS(CycNumber::zeta(5).to_rational(), NotRational);
  CHECK_THROWS_AS(CycNumber::zeta(12, 7).to_rational(), NotRational);
}

namespace {

struct Rng {
  std::mt19937 g{20260814};
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }
  Rational rat() { return Rational(pick(-9, 9), pick(1, 4)); }
  CycNumber value() {
    static const int conds[] = {1, 2, 3, 4, 5, 6, 8, 9, 12};
    int n = conds[pick(0, 8)];
    std::vector<Rational> c(euler_phi(n));
    for (auto& x : c) x = rat();
    return CycNumber::from_coeffs(n, c);
  }
};

}  // namespace

TEST_CASE("field axioms on random values across conductors") {
  Rng rng;
  for (int trial = 0; trial < 200; ++trial) {
    CycNumber a = rng.value(), b = rng.value(), c = rng.value();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a + CycNumber(0) == a);
    CHECK((a - b) + b == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == CycNumber(1));
  }
}

TEST_CASE("conductor promotion round-trips") {
  Rng rng;
  for (int trial = 0; trial < 100; ++trial) {
    CycNumber a = rng.value();
    int m = a.conductor() * (2 + trial % 3);
    CycNumber up = a.promoted(m);
    CHECK(up.conductor() == m);
    CHECK(up == a);
    auto down = up.demoted(a.conductor());
    REQUIRE(down.has_value());
    CHECK(*down == a);
  }
  // zeta_5 is not rational and not in any proper cyclotomic subfield of Q(zeta_5)
  CHECK_FALSE(CycNumber::zeta(5).demoted(1).has_value());
  // golden-ratio combination -(zeta_5^2 + zeta_5^3) is real but still needs conductor 5
  CycNumber phi = -(CycNumber::zeta(5, 2) + CycNumber::zeta(5, 3));
  CHECK_FALSE(phi.demoted(1).has_value());
  CHECK(phi * phi == phi + CycNumber(1));  // x^2 = x + 1
}

TEST_CASE("keys are canonical per conductor") {
  CycNumber a = CycNumber::zeta(12, 7);
  CycNumber b = CycNumber::zeta(12, 7) + CycNumber(0);
  CHECK(a.key() == b.key());
  CHECK(a.key() != CycNumber::zeta(12, 5).key());
}
