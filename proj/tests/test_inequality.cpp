#include <random>
#include <vector>

#include "doctest.h"
#include "turancert/inequality.hpp"
#include "turancert/sequence.hpp"

using namespace turancert;

namespace {

SequenceValues values_of(std::vector<Rational> v, long first_index = 0) {
  return SequenceValues::from_exact([v = std::move(v), first_index](long n) {
    long i = n - first_index;
    if (i < 0 || i >= static_cast<long>(v.size()))
      throw DomainError("index out of range");
    return v[i];
  });
}

PRecursiveSequence make_baxter() {
  return PRecursiveSequence(
      "baxter",
      {Polynomial::from_longs({0, -8, -8}),
       Polynomial::from_longs({-40, -35, -7}),
       Polynomial::from_longs({20, 9, 1})},
      {Rational(1), Rational(1)}, 0, 0);
}

PRecursiveSequence make_h() {
  return PRecursiveSequence(
      "h",
      {Polynomial::from_longs({-2, -5, -4, -1}),
       Polynomial::from_longs({-4, -6, -2}), Polynomial::from_longs({2})},
      {Rational(1), Rational(0)}, 0, 2);
}

SequenceValues derived_values(const PRecursiveSequence& seq, Target t) {
  return SequenceValues::from_intervals(
      [&seq, t](long n, long prec) { return seq.derived_term(t, n, prec); });
}

}  // namespace

TEST_CASE("log-concavity checker on small exact inputs") {
  auto c = check_log_concave(values_of({Rational(1), Rational(1), Rational(1)}), 1);
  CHECK(c.status == CheckStatus::holds_with_equality);
  CHECK(c.margin.is_point());
  CHECK(c.margin.contains(Rational(0)));

  auto f = check_log_concave(values_of({Rational(1), Rational(2), Rational(5)}), 1);
  CHECK(f.status == CheckStatus::fails);
  CHECK(f.margin.strictly_below(Rational(0)));

  CHECK_THROWS_AS(check_log_concave(values_of({Rational(1)}), 5), DomainError);
}

TEST_CASE("raw Baxter terms are not log-concave at n = 3") {
  PRecursiveSequence b = make_baxter();
  auto vals = SequenceValues::from_exact([&b](long n) { return b.term(n); });
  auto c = check_log_concave(vals, 3);
  CHECK(c.status == CheckStatus::fails);
  CHECK(c.margin.contains(Rational(-8)));  // 36 - 2*22
}

TEST_CASE("higher-order Turan checker equality cases") {
  auto c = check_higher_turan(
      values_of({Rational(3), Rational(3), Rational(3), Rational(3)}), 1);
  CHECK(c.status == CheckStatus::holds_with_equality);

  std::vector<Rational> geo;
  Rational p(1);
  for (int i = 0; i < 8; ++i) {
    geo.push_back(p);
    p *= 2;
  }
  for (long n = 1; n <= 5; ++n)
    CHECK(check_higher_turan(values_of(geo), n).status ==
          CheckStatus::holds_with_equality);
}

TEST_CASE("Baxter root sequence satisfies the higher-order inequality on [2,20]") {
  PRecursiveSequence b = make_baxter();
  auto vals = derived_values(b, Target::root);
  for (long n = 2; n <= 20; ++n) {
    auto c = check_higher_turan(vals, n);
    CAPTURE(n);
    CHECK(c.status == CheckStatus::holds);
    CHECK(c.margin.strictly_above(Rational(0)));
  }
}

TEST_CASE("Laguerre checker: equality, forced failure, H root window") {
  auto c = check_laguerre(
      values_of({Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)}),
      2, 0);
  CHECK(c.status == CheckStatus::holds_with_equality);

  std::vector<Rational> fact;
  Rational f(1);
  for (int i = 0; i < 12; ++i) {
    fact.push_back(f);
    f *= (i + 1);
  }
  for (long n = 0; n <= 8; ++n)
    CHECK(check_laguerre(values_of(fact), 1, n).status == CheckStatus::fails);

  PRecursiveSequence h = make_h();
  auto vals = derived_values(h, Target::root);
  for (long n = 1; n <= 20; ++n) {
    auto c2 = check_laguerre(vals, 2, n);
    CAPTURE(n);
    CHECK(c2.ok());
  }
}

TEST_CASE("order-2 expanded form matches the summation definition") {
  // the checker uses 3a2^2 - 4a1a3 + a0a4 for m=2; compare against the
  // binomial sum evaluated directly
  std::mt19937 rng(77);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int it = 0; it < 300; ++it) {
    std::vector<Rational> a;
    for (int i = 0; i < 5; ++i)
      a.push_back(Rational(d(rng), 1 + std::abs(d(rng))));
    Rational sum = a[0] * a[4] - Rational(4) * a[1] * a[3] +
                   Rational(6) * a[2] * a[2] - Rational(4) * a[3] * a[1] +
                   a[4] * a[0];
    sum /= 2;
    auto c = check_laguerre(values_of(a), 2, 0);
    CHECK(c.margin.contains(sum));
    CHECK((sign_of(sum) >= 0) == c.ok());
  }
}

TEST_CASE("Laguerre order one is log-concavity shifted by one") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> d(1, 50);
  for (int it = 0; it < 200; ++it) {
    std::vector<Rational> a;
    for (int i = 0; i < 4; ++i) a.push_back(Rational(d(rng), d(rng)));
    auto l1 = check_laguerre(values_of(a), 1, 0);
    auto lc = check_log_concave(values_of(a), 1);
    CHECK(l1.status == lc.status);
    CHECK(l1.margin.contains(lc.margin.lo_rational()));
  }
}

TEST_CASE("higher-order checker agrees with direct rational evaluation") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int it = 0; it < 1000; ++it) {
    std::vector<Rational> a;
    for (int i = 0; i < 4; ++i)
      a.push_back(Rational(d(rng), 1 + std::abs(d(rng))));
    Rational g1 = a[1] * a[1] - a[0] * a[2];
    Rational g2 = a[2] * a[2] - a[1] * a[3];
    Rational cr = a[1] * a[2] - a[0] * a[3];
    Rational direct = Rational(4) * g1 * g2 - cr * cr;
    auto c = check_higher_turan(values_of(a), 1);
    CHECK(c.margin.contains(direct));
    int s = sign_of(direct);
    if (s > 0) CHECK(c.status == CheckStatus::holds);
    if (s < 0) CHECK(c.status == CheckStatus::fails);
    if (s == 0) CHECK(c.status == CheckStatus::holds_with_equality);
  }
}

TEST_CASE("interval precision cap yields undecided, refinement resolves it") {
  PRecursiveSequence b = make_baxter();
  auto vals = derived_values(b, Target::root);
  auto low = check_higher_turan(vals, 6, 8);
  CHECK(low.status == CheckStatus::undecided);
  auto high = check_higher_turan(vals, 6);
  CHECK(high.status == CheckStatus::holds);
  // monotone: raising the cap never flips a decided outcome
  for (long cap : {8L, 64L, 256L, 2048L}) {
    auto c = check_higher_turan(vals, 6, cap);
    CHECK((c.status == CheckStatus::undecided ||
           c.status == CheckStatus::holds));
  }
}

TEST_CASE("turan_quartic symbolic composition") {
  RationalFunction zero = RationalFunction::constant(Rational(0));
  RationalFunction one = RationalFunction::constant(Rational(1));
  CHECK(turan_quartic(zero, zero) == RationalFunction::constant(Rational(3)));
  CHECK(turan_quartic(one, one) == zero);

  // p_n = (n/(n+1)) (1 - 1/n^2) with its shift composes to 4/(n(1+n)^2)
  RationalFunction n_frac(Polynomial::from_longs({0, 1}),
                          Polynomial::from_longs({1, 1}));
  RationalFunction fu(Polynomial::from_longs({-1, 0, 1}),
                      Polynomial::from_longs({0, 0, 1}));
  RationalFunction p = n_frac * fu;
  RationalFunction expected(
      Polynomial::from_longs({4}),
      Polynomial::from_longs({0, 1}) * Polynomial::from_longs({1, 1}) *
          Polynomial::from_longs({1, 1}));
  CHECK(turan_quartic(p, p.shift(1)) == expected);
}

TEST_CASE("turan_quartic is symmetric") {
  std::mt19937 rng(404);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int it = 0; it < 100; ++it) {
    Polynomial a = Polynomial::from_longs({d(rng), d(rng), d(rng)});
    Polynomial b = Polynomial::from_longs({d(rng), 1 + std::abs(d(rng))});
    Polynomial c = Polynomial::from_longs({d(rng), d(rng)});
    Polynomial e = Polynomial::from_longs({1 + std::abs(d(rng)), d(rng), 1});
    RationalFunction x(a, b), y(c, e);
    CHECK(turan_quartic(x, y) == turan_quartic(y, x));
  }
}
