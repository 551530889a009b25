#include <random>

#include "doctest.h"
#include "turancert/sequence.hpp"
#include "turancert/specio.hpp"

using namespace turancert;

static SequenceSpec load(const std::string& name) {
  return load_spec_file(std::string(TURANCERT_FIXTURES) + "/" + name);
}

TEST_CASE("recurrence unrolling reproduces known prefixes") {
  PRecursiveSequence baxter = load("baxter.json").make_sequence();
  CHECK(baxter.term(0) == 1);
  CHECK(baxter.term(1) == 1);
  CHECK(baxter.term(2) == 2);
  CHECK(baxter.term(3) == 6);
  CHECK(baxter.term(4) == 22);
  CHECK(baxter.term(5) == 92);

  PRecursiveSequence h = load("h.json").make_sequence();
  CHECK(h.term(0) == 1);
  CHECK(h.term(1) == 0);
  CHECK(h.term(2) == 1);
  CHECK(h.term(3) == 6);
  CHECK(h.term(4) == 90);
  CHECK(h.term(5) == 2040);
}

TEST_CASE("geometric oracle: the doubling recurrence yields 2^n") {
  PRecursiveSequence seq("pow2", {Polynomial::from_longs({2}),
                                  Polynomial::from_longs({-1})},
                         {Rational(1)}, 0, 0);
  Integer expected = 1;
  for (long n = 0; n <= 200; ++n) {
    CHECK(seq.term(n) == Rational(expected));
    expected *= 2;
  }
  CHECK(seq.ratio(17) == 2);
}

TEST_CASE("recurrence residual vanishes exactly on generated terms") {
  const char* fixtures[] = {"baxter.json",   "h.json",      "fine.json",
                            "motzkin.json",  "cohen.json",  "schroder.json",
                            "hpolyhex.json", "walks.json",  "tmatrix.json",
                            "domb.json"};
  for (const char* f : fixtures) {
    SequenceSpec spec = load(f);
    PRecursiveSequence seq = spec.make_sequence();
    int d = seq.order();
    for (long n = seq.start_index(); n < seq.start_index() + 120; ++n) {
      Rational residual(0);
      for (int i = 0; i <= d; ++i)
        residual += seq.coeffs()[i].eval(Rational(n)) * seq.term(n + i);
      CHECK(residual == 0);
    }
  }
}

TEST_CASE("baxter u_14 lies inside the shipped sandwich") {
  PRecursiveSequence seq = load("baxter.json").make_sequence();
  Interval u = seq.u_term(14, 256);
  CHECK(u.strictly_above(Rational(195, 196)));   // 1 - 1/14^2
  CHECK(u.strictly_below(Rational(2736, 2744))); // 1 - 8/14^3
}

TEST_CASE("interval refinement is nested and shrinking") {
  PRecursiveSequence seq = load("baxter.json").make_sequence();
  for (long n : {5L, 14L, 40L}) {
    Interval prev = seq.derived_term(Target::root, n, 32);
    for (long prec = 48; prec <= 512; prec += 16) {
      Interval next = seq.derived_term(Target::root, n, prec);
      // nesting: the refined enclosure stays within the coarse one
      CHECK(prev.lo_rational() <= next.lo_rational());
      CHECK(next.hi_rational() <= prev.hi_rational());
      CHECK(next.hi_rational() - next.lo_rational() <=
            prev.hi_rational() - prev.lo_rational());
      prev = next;
    }
  }
}

TEST_CASE("derived-sequence identities against u_n, exactly in log form") {
  for (const char* f : {"baxter.json", "h.json"}) {
    PRecursiveSequence seq = load(f).make_sequence();
    long from = seq.name() == "h" ? 3 : 2;
    for (long n = from; n < from + 50; ++n) {
      // log(x_{n-1} x_{n+1} / x_n^2) == log(n/(n+1)) + log u_n
      LogNumber lhs_x = seq.log_derived_term(Target::root, n - 1) +
                        seq.log_derived_term(Target::root, n + 1) -
                        seq.log_derived_term(Target::root, n).scaled(
                            Rational(2));
      LogNumber rhs_x =
          LogNumber::log_of(Rational(n) / Rational(n + 1)) + seq.log_u_term(n);
      CHECK((lhs_x - rhs_x).sign() == 0);

      // log(y_{n-1} y_{n+1} / y_n^2) == log(n/(n+1)) + log u_{n+1} - log u_n
      LogNumber lhs_y = seq.log_derived_term(Target::ratio, n - 1) +
                        seq.log_derived_term(Target::ratio, n + 1) -
                        seq.log_derived_term(Target::ratio, n).scaled(
                            Rational(2));
      LogNumber rhs_y = LogNumber::log_of(Rational(n) / Rational(n + 1)) +
                        seq.log_u_term(n + 1) - seq.log_u_term(n);
      CHECK((lhs_y - rhs_y).sign() == 0);
    }
  }
}

TEST_CASE("domain errors: zero terms, singular leading coefficients") {
  PRecursiveSequence h = load("h.json").make_sequence();
  CHECK_THROWS_AS(h.ratio(1), DomainError);   // H_1 = 0
  CHECK_THROWS_AS(h.log_term(1), DomainError);
  CHECK_THROWS_AS(h.term(-3), DomainError);

  // fine's leading coefficient 2n^2 + 4n vanishes at n = 0, so the third
  // initial value must come from the spec, not the recurrence
  PRecursiveSequence fine = load("fine.json").make_sequence();
  CHECK(fine.term(2) == 0);
  CHECK(fine.term(7) == 57);
}
