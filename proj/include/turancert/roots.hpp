#pragma once

#include <string>
#include <vector>

#include "turancert/ratfunc.hpp"

namespace turancert {

// Signed remainder sequence of (p, p'). Sign-variation differences count
// distinct real roots in an interval.
struct SturmChain {
  std::vector<Polynomial> polys;

  static SturmChain build(const Polynomial& p);

  int variations_at(const Rational& x) const;
  int variations_at_plus_infinity() const;
  int variations_at_minus_infinity() const;
};

// Distinct real roots of p in the open interval (lo, hi).
// Endpoints that are roots are an error the caller must perturb around.
int count_real_roots(const Polynomial& p, const Rational& lo,
                     const Rational& hi);

// A rational B with every real root of p strictly below B (Cauchy bound).
Rational largest_root_upper_bound(const Polynomial& p);

struct PositivityThreshold {
  long threshold = 0;
  std::string witness;
  long checked_floor = 0;  // smallest integer where positivity was confirmed
};

// Minimal integer N >= floor with r(n) > 0 for every integer n >= N.
// Integer poles of the denominator >= floor force N above them.
PositivityThreshold positivity_threshold(const RationalFunction& r,
                                         long floor = 1);

}  // namespace turancert
