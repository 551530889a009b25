#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turancert/interval.hpp"
#include "turancert/lognumber.hpp"
#include "turancert/ratfunc.hpp"
#include "turancert/roots.hpp"

namespace turancert {

// A closed expression family: R0(n) + sum_i P_i(n) * log(R_i(n)) with
// rational-function coefficients and arguments. Closed under
// differentiation; asymptotics at +infinity are exactly computable.
class LogExpr {
 public:
  struct LogTerm {
    RationalFunction coeff;
    RationalFunction arg;
  };

  LogExpr() = default;
  explicit LogExpr(RationalFunction rational_part)
      : rational_(std::move(rational_part)) {}
  static LogExpr log_term(const RationalFunction& coeff,
                          const RationalFunction& arg);

  const RationalFunction& rational_part() const { return rational_; }
  const std::vector<LogTerm>& log_terms() const { return terms_; }
  bool is_structurally_zero() const {
    return rational_.is_zero() && terms_.empty();
  }
  // largest numerator degree over all log coefficients (-1 if none)
  int max_coeff_degree() const;
  bool has_polynomial_coeffs() const;

  LogExpr operator+(const LogExpr& o) const;
  LogExpr operator-(const LogExpr& o) const;
  LogExpr operator-() const;
  // multiply by a rational function (scales coefficients and rational part)
  LogExpr scaled(const RationalFunction& s) const;
  LogExpr shift(const Rational& k) const;  // e(n + k)

  LogExpr derivative() const;

  // exact value at an integer point as a log-linear constant
  LogNumber eval_exact(long n) const;
  Interval eval_interval(long n, long precision_bits) const;

  std::string to_string() const;

 private:
  void add_term(RationalFunction coeff, RationalFunction arg);
  RationalFunction rational_;
  std::vector<LogTerm> terms_;
};

struct AsymptoticClass {
  enum class Kind { plus_infinity, minus_infinity, finite };
  Kind kind = Kind::finite;
  // exact limit when finite; `value` is the rational view when it exists
  LogNumber limit;
  std::optional<Rational> value;
  std::string leading_term;

  bool is_finite() const { return kind == Kind::finite; }
  int limit_sign() const;
  static const char* kind_name(Kind k);
};

AsymptoticClass limit_at_infinity(const LogExpr& e);

struct DescentStep {
  int order = 0;  // derivative order this step concluded a sign for
  AsymptoticClass limit;
  int sign = 0;  // concluded sign beyond `threshold`
  long threshold = 0;
  std::string rule;  // "A", "B", or "B-sym" (finite limit away from zero)
};

struct DescentProof {
  int order = 0;  // derivative order at which the expression became rational
  RationalFunction rational_tail;
  PositivityThreshold tail_threshold;
  int tail_sign = 0;
  std::vector<DescentStep> chain;  // orders order-1 down to 0
  long final_threshold = 0;
};

class InconclusiveError : public Error {
 public:
  explicit InconclusiveError(const std::string& what) : Error(what) {}
};
class EventuallyNonpositiveError : public Error {
 public:
  explicit EventuallyNonpositiveError(const std::string& what)
      : Error(what) {}
};

// Certifies e(n) > 0 for all real n >= final_threshold via the
// derivative-descent argument: differentiate until rational, bound the tail
// by Sturm positivity, then propagate signs back down through exact limits.
DescentProof prove_eventually_positive(const LogExpr& e,
                                       int eval_budget = 64);

}  // namespace turancert
