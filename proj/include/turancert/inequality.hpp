#pragma once

#include <functional>
#include <string>

#include "turancert/interval.hpp"
#include "turancert/ratfunc.hpp"

namespace turancert {

enum class CheckStatus { holds, holds_with_equality, fails, undecided };

const char* check_status_name(CheckStatus s);

struct CheckOutcome {
  long index = 0;
  CheckStatus status = CheckStatus::undecided;
  Interval margin;  // enclosure of the inequality's left-hand side

  bool ok() const {
    return status == CheckStatus::holds ||
           status == CheckStatus::holds_with_equality;
  }
};

// Indexed real values, exact when possible.  Exactly one of the two
// accessors must be set; checkers prefer the exact one.
struct SequenceValues {
  std::function<Rational(long n)> exact;
  std::function<Interval(long n, long precision_bits)> approx;

  static SequenceValues from_exact(std::function<Rational(long)> f) {
    SequenceValues v;
    v.exact = std::move(f);
    return v;
  }
  static SequenceValues from_intervals(
      std::function<Interval(long, long)> f) {
    SequenceValues v;
    v.approx = std::move(f);
    return v;
  }
};

inline constexpr long kDefaultPrecisionCap = 4096;

// a_n^2 - a_{n-1} a_{n+1} >= 0
CheckOutcome check_log_concave(const SequenceValues& values, long n,
                               long precision_cap = kDefaultPrecisionCap);

// 4 (a_n^2 - a_{n-1}a_{n+1}) (a_{n+1}^2 - a_n a_{n+2})
//   - (a_n a_{n+1} - a_{n-1} a_{n+2})^2 >= 0
CheckOutcome check_higher_turan(const SequenceValues& values, long n,
                                long precision_cap = kDefaultPrecisionCap);

// L_m(a_n) = 1/2 sum_{k=0}^{2m} (-1)^{k+m} C(2m,k) a_{n+k} a_{n+2m-k} >= 0
CheckOutcome check_laguerre(const SequenceValues& values, int m, long n,
                            long precision_cap = kDefaultPrecisionCap);

// t(x, y) = 4 (1-x) (1-y) - (1-xy)^2, composed and canonicalized
RationalFunction turan_quartic(const RationalFunction& x,
                               const RationalFunction& y);

}  // namespace turancert
