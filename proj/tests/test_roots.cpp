#include <random>

#include "doctest.h"
#include "turancert/roots.hpp"

using namespace turancert;

namespace {
std::mt19937 rng(987654);
}

TEST_CASE("count_real_roots basics") {
  Polynomial p = Polynomial::from_longs({-4, 0, 1});  // n^2 - 4
  CHECK(count_real_roots(p, Rational(0), Rational(3)) == 1);
  CHECK(count_real_roots(Polynomial::from_longs({1, 0, 1}), Rational(-10),
                         Rational(10)) == 0);
  // the Baxter S-side induction polynomial has its unique positive root in
  // (12, 13)
  Polynomial q = Polynomial::from_longs({-419, -1161, -993, -203, 24});
  CHECK(count_real_roots(q, Rational(0), Rational(100)) == 1);
  CHECK(count_real_roots(q, Rational(12), Rational(13)) == 1);
  CHECK_THROWS_AS(count_real_roots(p, Rational(2), Rational(5)), DomainError);
}

TEST_CASE("count_real_roots vs planted roots") {
  std::uniform_int_distribution<int> nroots(1, 5);
  std::uniform_int_distribution<int> rootval(-20, 20);
  for (int trial = 0; trial < 500; ++trial) {
    int k = nroots(rng);
    std::vector<long> roots;
    Polynomial p = Polynomial::constant(Rational(1));
    for (int i = 0; i < k; ++i) {
      long r = rootval(rng);
      if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
      roots.push_back(r);
      p = p * Polynomial({Rational(-r), Rational(1)});
    }
    // interval avoiding all roots at endpoints
    Rational lo = make_rational(-43, 2), hi = make_rational(43, 2);
    CHECK(count_real_roots(p, lo, hi) == static_cast<int>(roots.size()));
  }
}

TEST_CASE("largest_root_upper_bound contract") {
  Polynomial lin = Polynomial::from_longs({-5, 1});
  CHECK(largest_root_upper_bound(lin) > 5);
  CHECK(largest_root_upper_bound(Polynomial::from_longs({-4, 0, 1})) > 2);
  Polynomial q = Polynomial::from_longs({-419, -1161, -993, -203, 24});
  Rational b = largest_root_upper_bound(q);
  CHECK(count_real_roots(q, b, b * 10) == 0);
  CHECK_THROWS_AS(largest_root_upper_bound(Polynomial::constant(Rational(3))),
                  DomainError);
}

TEST_CASE("positivity_threshold reproduces the quoted thresholds") {
  // (24n^4-203n^3-993n^2-1161n-419)/(3n^2(1+n)^3) -> 13
  RationalFunction r1(
      Polynomial::from_longs({-419, -1161, -993, -203, 24}),
      Polynomial::from_longs({0, 0, 3}) *
          Polynomial::from_longs({1, 1}) * Polynomial::from_longs({1, 1}) *
          Polynomial::from_longs({1, 1}));
  auto t1 = positivity_threshold(r1, 1);
  CHECK(t1.threshold == 13);
  // minimality: value at 12 is negative
  CHECK(r1.eval(Rational(12)) < 0);

  // (4n^3+3n^2+48n-32)/(n^2(1+n)^4) -> 1
  Polynomial np1 = Polynomial::from_longs({1, 1});
  RationalFunction r2(Polynomial::from_longs({-32, 48, 3, 4}),
                      Polynomial::from_longs({0, 0, 1}) * np1 * np1 * np1 * np1);
  CHECK(positivity_threshold(r2, 1).threshold == 1);

  // degree-9 numerator over (n-2)(n-1)(1+n)^4(2+n)^4(n^2+n-1) -> 8
  Polynomial num = Polynomial::from_longs(
      {-96, -336, -144, 893, 1458, 597, -227, -192, -15, 6});
  Polynomial den = Polynomial::from_longs({-2, 1}) *
                   Polynomial::from_longs({-1, 1}) * np1 * np1 * np1 * np1 *
                   Polynomial::from_longs({2, 1}) *
                   Polynomial::from_longs({2, 1}) *
                   Polynomial::from_longs({2, 1}) *
                   Polynomial::from_longs({2, 1}) *
                   Polynomial::from_longs({-1, 1, 1});
  RationalFunction r3(num, den);
  auto t3 = positivity_threshold(r3, 1);
  CHECK(t3.threshold == 8);
  CHECK(r3.eval(Rational(7)) < 0);
}

TEST_CASE("positivity_threshold reports eventual nonpositivity and poles") {
  RationalFunction neg(Polynomial::from_longs({0, -1}),
                       Polynomial::from_longs({1}));
  CHECK_THROWS_AS(positivity_threshold(neg, 1), DomainError);

  // positive everywhere but with a pole at n = 5: threshold must clear it
  RationalFunction pole(Polynomial::from_longs({1}),
                        Polynomial::from_longs({-5, 1}) *
                            Polynomial::from_longs({-5, 1}));
  CHECK(positivity_threshold(pole, 1).threshold == 6);
}

TEST_CASE("positivity_threshold sampling and scaling invariance") {
  RationalFunction r(
      Polynomial::from_longs({-419, -1161, -993, -203, 24}),
      Polynomial::from_longs({0, 0, 3}));
  auto t = positivity_threshold(r, 1);
  for (long n = t.threshold; n < t.threshold + 1000; ++n)
    REQUIRE(r.eval(Rational(n)) > 0);
  CHECK(r.eval(Rational(t.threshold - 1)) <= 0);
  for (long c : {2, 7, 1000}) {
    RationalFunction scaled = r * RationalFunction::constant(Rational(c));
    CHECK(positivity_threshold(scaled, 1).threshold == t.threshold);
  }
}
