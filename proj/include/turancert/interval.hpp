#pragma once

#include <mpfr.h>

#include <string>

#include "turancert/rational.hpp"

namespace turancert {

// Arbitrary-precision enclosure [lo, hi] with outward rounding: every
// operation rounds lo toward -inf and hi toward +inf.
class Interval {
 public:
  explicit Interval(long precision_bits = 64);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(Interval o);
  ~Interval();

  static Interval exact(const Rational& v, long precision_bits);
  static Interval exact_integer(const Integer& v, long precision_bits);

  long precision_bits() const { return prec_; }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator-() const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // enclosure must avoid 0
  Interval log() const;  // requires lo > 0
  Interval exp() const;
  Interval div_long(long d) const;
  Interval mul_rational(const Rational& s) const;

  // -1, 0, +1 against zero; 0 means the enclosure straddles (or is) zero
  int sign() const;
  bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
  bool contains(const Rational& v) const;
  bool strictly_above(const Rational& v) const;
  bool strictly_below(const Rational& v) const;
  // this < o certainly / this > o certainly
  bool certainly_less(const Interval& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
  }

  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  // exact rational midpoint / endpoints of the stored dyadic bounds
  Rational lo_rational() const;
  Rational hi_rational() const;

  std::string to_string() const;

 private:
  mpfr_t lo_, hi_;
  long prec_;
};

}  // namespace turancert
