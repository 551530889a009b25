#include "turancert/inequality.hpp"

#include <algorithm>
#include <type_traits>
#include <vector>

namespace turancert {

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds:
      return "holds";
    case CheckStatus::holds_with_equality:
      return "holds_with_equality";
    case CheckStatus::fails:
      return "fails";
    case CheckStatus::undecided:
      return "undecided";
  }
  return "?";
}

namespace {

template <typename T>
T laguerre_margin(const std::vector<T>& a, int m) {
  // 1/2 sum_{k=0}^{2m} (-1)^{k+m} C(2m,k) a[k] a[2m-k]
  Rational binom(1);
  T sum = a[0] * a[2 * m];
  if (m % 2 != 0) sum = -sum;
  for (int k = 1; k <= 2 * m; ++k) {
    binom *= Rational(2 * m - k + 1);
    binom /= Rational(k);
    T term = a[k] * a[2 * m - k];
    Rational c = (k + m) % 2 == 0 ? binom : -binom;
    if constexpr (std::is_same_v<T, Rational>) {
      sum = sum + c * term;
    } else {
      sum = sum + term.mul_rational(c);
    }
  }
  if constexpr (std::is_same_v<T, Rational>) {
    return sum / 2;
  } else {
    return sum.mul_rational(Rational(1, 2));
  }
}

Rational higher_turan_margin_exact(const std::vector<Rational>& a) {
  Rational g1 = a[1] * a[1] - a[0] * a[2];
  Rational g2 = a[2] * a[2] - a[1] * a[3];
  Rational cross = a[1] * a[2] - a[0] * a[3];
  return Rational(4) * g1 * g2 - cross * cross;
}

Interval higher_turan_margin_interval(const std::vector<Interval>& a) {
  Interval g1 = a[1] * a[1] - a[0] * a[2];
  Interval g2 = a[2] * a[2] - a[1] * a[3];
  Interval cross = a[1] * a[2] - a[0] * a[3];
  return (g1 * g2).mul_rational(Rational(4)) - cross * cross;
}

CheckOutcome classify_exact(long n, const Rational& margin) {
  CheckOutcome out;
  out.index = n;
  long prec = static_cast<long>(mpz_sizeinbase(margin.get_num().get_mpz_t(), 2) +
                                mpz_sizeinbase(margin.get_den().get_mpz_t(), 2));
  out.margin = Interval::exact(margin, std::max(64L, prec + 8));
  int s = sign_of(margin);
  out.status = s > 0   ? CheckStatus::holds
               : s < 0 ? CheckStatus::fails
                       : CheckStatus::holds_with_equality;
  return out;
}

// Evaluate margin_fn over the window [n+lo_off, n+hi_off], preferring the
// exact accessor and otherwise refining intervals up to the precision cap.
CheckOutcome run_check(
    const SequenceValues& values, long n, long lo_off, long hi_off,
    long precision_cap,
    const std::function<Rational(const std::vector<Rational>&)>& exact_fn,
    const std::function<Interval(const std::vector<Interval>&)>& approx_fn) {
  if (values.exact) {
    std::vector<Rational> a;
    for (long k = lo_off; k <= hi_off; ++k) a.push_back(values.exact(n + k));
    return classify_exact(n, exact_fn(a));
  }
  if (!values.approx)
    throw DomainError("sequence values: no accessor provided");
  CheckOutcome out;
  out.index = n;
  for (long prec = 64;; prec *= 2) {
    if (prec > precision_cap) prec = precision_cap;
    std::vector<Interval> a;
    for (long k = lo_off; k <= hi_off; ++k)
      a.push_back(values.approx(n + k, prec));
    out.margin = approx_fn(a);
    if (out.margin.strictly_above(Rational(0))) {
      out.status = CheckStatus::holds;
      return out;
    }
    if (out.margin.strictly_below(Rational(0))) {
      out.status = CheckStatus::fails;
      return out;
    }
    if (out.margin.is_point()) {
      out.status = CheckStatus::holds_with_equality;
      return out;
    }
    if (prec == precision_cap) break;
  }
  out.status = CheckStatus::undecided;
  return out;
}

}  // namespace

CheckOutcome check_log_concave(const SequenceValues& values, long n,
                               long precision_cap) {
  return run_check(
      values, n, -1, 1, precision_cap,
      [](const std::vector<Rational>& a) -> Rational {
        return a[1] * a[1] - a[0] * a[2];
      },
      [](const std::vector<Interval>& a) { return a[1] * a[1] - a[0] * a[2]; });
}

CheckOutcome check_higher_turan(const SequenceValues& values, long n,
                                long precision_cap) {
  return run_check(values, n, -1, 2, precision_cap, higher_turan_margin_exact,
                   higher_turan_margin_interval);
}

CheckOutcome check_laguerre(const SequenceValues& values, int m, long n,
                            long precision_cap) {
  if (m < 1) throw DomainError("Laguerre order must be >= 1");
  if (m == 2) {
    // expanded form 3 a_{n+2}^2 - 4 a_{n+1} a_{n+3} + a_n a_{n+4}
    return run_check(
        values, n, 0, 4, precision_cap,
        [](const std::vector<Rational>& a) -> Rational {
          return Rational(3) * a[2] * a[2] - Rational(4) * a[1] * a[3] +
                 a[0] * a[4];
        },
        [](const std::vector<Interval>& a) {
          return (a[2] * a[2]).mul_rational(Rational(3)) -
                 (a[1] * a[3]).mul_rational(Rational(4)) + a[0] * a[4];
        });
  }
  return run_check(
      values, n, 0, 2 * m, precision_cap,
      [m](const std::vector<Rational>& a) -> Rational {
        return laguerre_margin(a, m);
      },
      [m](const std::vector<Interval>& a) { return laguerre_margin(a, m); });
}

RationalFunction turan_quartic(const RationalFunction& x,
                               const RationalFunction& y) {
  RationalFunction one = RationalFunction::constant(Rational(1));
  RationalFunction a = (one - x) * (one - y) *
                       RationalFunction::constant(Rational(4));
  RationalFunction b = one - x * y;
  return a - b * b;
}

}  // namespace turancert
