#pragma once

#include <map>
#include <string>

#include "turancert/interval.hpp"
#include "turancert/rational.hpp"

namespace turancert {

// Exact constant of the form  q0 + sum_i q_i * log(b_i)  with rational q's
// and pairwise-coprime integer bases b_i > 1. Coprime bases > 1 are
// multiplicatively independent, so the value is zero iff every coefficient
// is zero; that makes sign determination exact (interval refinement is
// guaranteed to terminate on nonzero values).
class LogNumber {
 public:
  LogNumber() = default;
  explicit LogNumber(const Rational& rat) : rat_(rat) {}
  static LogNumber log_of(const Rational& arg,
                          const Rational& coeff = Rational(1));

  const Rational& rational_part() const { return rat_; }
  const std::map<Integer, Rational>& log_terms() const { return logs_; }
  bool is_rational() const { return logs_.empty(); }

  LogNumber operator+(const LogNumber& o) const;
  LogNumber operator-(const LogNumber& o) const;
  LogNumber operator-() const;
  LogNumber scaled(const Rational& s) const;

  bool is_zero() const;
  int sign() const;  // exact: -1, 0, +1
  Interval enclose(long precision_bits) const;

  std::string to_string() const;

 private:
  void add_log(Integer base, Rational coeff);
  Rational rat_;
  std::map<Integer, Rational> logs_;
};

}  // namespace turancert
