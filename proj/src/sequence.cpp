#include "turancert/sequence.hpp"

#include <algorithm>

namespace turancert {

PRecursiveSequence::PRecursiveSequence(std::string name,
                                       std::vector<Polynomial> coeffs,
                                       std::vector<Rational> initial_values,
                                       long start_index, long positivity_from)
    : name_(std::move(name)),
      coeffs_(std::move(coeffs)),
      start_(start_index),
      positivity_from_(positivity_from),
      cache_(std::move(initial_values)) {
  if (coeffs_.size() < 2)
    throw DomainError("recurrence needs order >= 1 (" + name_ + ")");
  if (coeffs_.back().is_zero())
    throw DomainError("zero leading recurrence coefficient (" + name_ + ")");
  if (cache_.size() < coeffs_.size() - 1)
    throw DomainError("sequence " + name_ + " needs at least " +
                      std::to_string(coeffs_.size() - 1) + " initial values");
  if (positivity_from_ < start_)
    throw DomainError("positivity_from below start index (" + name_ + ")");
  // the declared positivity window is machine-checked over the initials
  for (size_t i = 0; i < cache_.size(); ++i) {
    long n = start_ + static_cast<long>(i);
    if (n >= positivity_from_ && cache_[i] <= 0)
      throw DomainError("sequence " + name_ + ": term at " +
                        std::to_string(n) +
                        " violates the declared positivity window");
  }
}

void PRecursiveSequence::extend_cache(long n) const {
  std::lock_guard<std::mutex> lock(mu_);
  const int d = order();
  while (start_ + static_cast<long>(cache_.size()) <= n) {
    long next = start_ + static_cast<long>(cache_.size());
    long base = next - d;  // recurrence instance index
    Rational x(base);
    Rational lead = coeffs_.back().eval(x);
    if (lead == 0)
      throw DomainError("singular recurrence point for " + name_ +
                        ": leading coefficient vanishes at n=" +
                        std::to_string(base));
    Rational acc(0);
    for (int i = 0; i < d; ++i)
      acc += coeffs_[i].eval(x) * cache_[base - start_ + i];
    Rational value = -acc / lead;
    if (next >= positivity_from_ && value <= 0)
      throw DomainError("sequence " + name_ + ": term at " +
                        std::to_string(next) +
                        " violates the declared positivity window");
    cache_.push_back(std::move(value));
  }
}

const Rational& PRecursiveSequence::term(long n) const {
  if (n < start_)
    throw DomainError("index " + std::to_string(n) + " below start of " +
                      name_);
  if (start_ + static_cast<long>(cache_.size()) <= n) extend_cache(n);
  return cache_[n - start_];
}

Rational PRecursiveSequence::ratio(long n) const {
  // Copy the numerator first: fetching term(n + 1) may grow the cache and
  // invalidate references into it.
  Rational num = term(n + 1);
  const Rational& a = term(n);
  if (a == 0)
    throw DomainError("ratio undefined: " + name_ + " has a zero term at " +
                      std::to_string(n));
  return num / a;
}

LogNumber PRecursiveSequence::log_term(long n) const {
  const Rational& a = term(n);
  if (a <= 0)
    throw DomainError("log of non-positive term " + name_ + "(" +
                      std::to_string(n) + ")");
  return LogNumber::log_of(a);
}

LogNumber PRecursiveSequence::log_u_term(long n) const {
  if (n - 1 < positivity_from_)
    throw DomainError("u_term needs positive terms from " +
                      std::to_string(n - 1));
  LogNumber acc = log_term(n - 1).scaled(Rational(1, n - 1));
  acc = acc + log_term(n + 1).scaled(Rational(1, n + 1));
  acc = acc - log_term(n).scaled(Rational(2, n));
  return acc;
}

Interval PRecursiveSequence::u_term(long n, long precision_bits) const {
  return log_u_term(n).enclose(precision_bits).exp();
}

LogNumber PRecursiveSequence::log_factorial(long n) {
  static std::mutex memo_mu;
  static std::vector<LogNumber> memo{LogNumber(), LogNumber()};  // 0!, 1!
  std::lock_guard<std::mutex> lock(memo_mu);
  while (static_cast<long>(memo.size()) <= n)
    memo.push_back(memo.back() +
                   LogNumber::log_of(Rational(static_cast<long>(memo.size()))));
  return memo[n];
}

bool PRecursiveSequence::derived_term_is_zero(Target target, long n) const {
  if (target == Target::root) return term(n) == 0;
  return term(n + 1) == 0;
}

LogNumber PRecursiveSequence::log_derived_term(Target target, long n) const {
  if (target == Target::root) {
    // log x_n = log a_n / n - log n!
    return log_term(n).scaled(Rational(1, n)) - log_factorial(n);
  }
  // log y_n = log a_{n+1}/(n+1) - log a_n / n - log n!
  return log_term(n + 1).scaled(Rational(1, n + 1)) -
         log_term(n).scaled(Rational(1, n)) - log_factorial(n);
}

Interval PRecursiveSequence::derived_term(Target target, long n,
                                          long precision_bits) const {
  Rational a = term(n);  // copy: term(n + 1) below may reallocate the cache
  if (a < 0 || (target == Target::ratio && term(n + 1) < 0))
    throw DomainError("derived term needs nonnegative values at " +
                      std::to_string(n));
  if (derived_term_is_zero(target, n)) {
    return Interval::exact(Rational(0), precision_bits);
  }
  if (target == Target::ratio && a == 0)
    throw DomainError("ratio target undefined: zero term at " +
                      std::to_string(n));
  // first root is the value itself: keep it exact
  if (target == Target::root && n == 1)
    return Interval::exact(a, precision_bits);
  return log_derived_term(target, n).enclose(precision_bits).exp();
}

}  // namespace turancert
