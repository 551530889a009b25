#include <random>

#include "doctest.h"
#include "turancert/polynomial.hpp"
#include "turancert/ratfunc.hpp"

using namespace turancert;

namespace {

std::mt19937 rng(20240817);

Rational random_rational(int mag = 30) {
  std::uniform_int_distribution<int> num(-mag, mag);
  std::uniform_int_distribution<int> den(1, mag);
  return make_rational(num(rng), den(rng));
}

Polynomial random_poly(int max_deg = 8) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  int d = deg(rng);
  std::vector<Rational> c(d + 1);
  for (auto& x : c) x = random_rational(9);
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("rational field axioms on random values") {
  for (int i = 0; i < 200; ++i) {
    Rational a = random_rational(), b = random_rational(), c = random_rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == 0);
    if (a != 0) CHECK(a * (Rational(1) / a) == 1);
  }
}

TEST_CASE("poly_gcd on shared factors") {
  Polynomial a = Polynomial::from_longs({-1, 0, 1});     // n^2 - 1
  Polynomial b = Polynomial::from_longs({1, 2, 1});      // (n+1)^2
  CHECK(poly_gcd(a, b) == Polynomial::from_longs({1, 1}));

  Polynomial n3({Rational(0), Rational(0), Rational(0), Rational(1)});
  CHECK(poly_gcd(n3, Polynomial::constant(Rational(5))) ==
        Polynomial::constant(Rational(1)));

  // Baxter f_n numerator and denominator are coprime
  Polynomial fn_num = Polynomial::from_longs({413, -96, 24});
  Polynomial fn_den = Polynomial::from_longs({0, 0, 3});
  CHECK(poly_gcd(fn_num, fn_den) == Polynomial::constant(Rational(1)));

  CHECK_THROWS_AS(poly_gcd(Polynomial(), Polynomial()), DomainError);
}

TEST_CASE("poly_gcd associate property on random products") {
  for (int i = 0; i < 100; ++i) {
    Polynomial p = random_poly(4), q = random_poly(4), r = random_poly(3);
    if (p.is_zero() || q.is_zero() || r.is_zero()) continue;
    Polynomial lhs = poly_gcd(p * r, q * r);
    Polynomial rhs = (r.monic() * poly_gcd(p, q)).monic();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("poly_eval threshold polynomial values") {
  // 24n^4 - 203n^3 - 993n^2 - 1161n - 419
  Polynomial p = Polynomial::from_longs({-419, -1161, -993, -203, 24});
  CHECK(p.eval(Rational(13)) == 56144);
  CHECK(p.eval(Rational(12)) == -10463);
  CHECK(Polynomial().eval(make_rational(7, 3)) == 0);
}

TEST_CASE("ratfunc_simplify canonical forms") {
  // (n^2-1)/(n-1) -> n+1
  RationalFunction a(Polynomial::from_longs({-1, 0, 1}),
                     Polynomial::from_longs({-1, 1}));
  CHECK(a.num() == Polynomial::from_longs({1, 1}));
  CHECK(a.den() == Polynomial::constant(Rational(1)));

  // (-n)/(-n^2) -> 1/n
  RationalFunction b(Polynomial::from_longs({0, -1}),
                     Polynomial::from_longs({0, 0, -1}));
  CHECK(b.num() == Polynomial::constant(Rational(1)));
  CHECK(b.den() == Polynomial::from_longs({0, 1}));

  // Baxter f_n is already reduced
  RationalFunction f(Polynomial::from_longs({413, -96, 24}),
                     Polynomial::from_longs({0, 0, 3}));
  CHECK(f.num() == Polynomial::from_longs({413, -96, 24}));
  CHECK(f.den() == Polynomial::from_longs({0, 0, 3}));

  CHECK_THROWS_AS(RationalFunction(Polynomial::from_longs({1}), Polynomial()),
                  DomainError);
}

TEST_CASE("ratfunc simplify idempotent and value-preserving") {
  for (int i = 0; i < 60; ++i) {
    Polynomial num = random_poly(5);
    Polynomial den = random_poly(4);
    if (den.is_zero()) continue;
    RationalFunction r(num, den);
    RationalFunction again(r.num(), r.den());
    CHECK(r == again);
    int checked = 0;
    for (long x = -30; x <= 30 && checked < 50; ++x) {
      Rational q(x);
      if (den.eval(q) == 0 || r.den().eval(q) == 0) continue;
      CHECK(r.eval(q) == num.eval(q) / den.eval(q));
      ++checked;
    }
  }
}

TEST_CASE("ratfunc arithmetic and shift") {
  RationalFunction n = RationalFunction::variable();
  RationalFunction one = RationalFunction::constant(Rational(1));
  // (n+1)/n shifted by -1 is n/(n-1)
  RationalFunction r = (n + one) / n;
  RationalFunction s = r.shift(Rational(-1));
  CHECK(s == n / (n - one));
  // derivative of 1/n is -1/n^2
  RationalFunction d = (one / n).derivative();
  CHECK(d == -(one / (n * n)));
}
