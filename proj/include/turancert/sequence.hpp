#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "turancert/interval.hpp"
#include "turancert/lognumber.hpp"
#include "turancert/polynomial.hpp"

namespace turancert {

enum class Target { root, ratio };

inline const char* target_name(Target t) {
  return t == Target::root ? "root" : "ratio";
}

inline Target parse_target(const std::string& s) {
  if (s == "root") return Target::root;
  if (s == "ratio") return Target::ratio;
  throw ParseError("unknown target: " + s);
}

// P-recursive sequence: sum_i p_i(n) * a_{n+i} = 0 with exact rational
// terms, generated forward from the initial window and cached.
class PRecursiveSequence {
 public:
  PRecursiveSequence(std::string name, std::vector<Polynomial> coeffs,
                     std::vector<Rational> initial_values, long start_index,
                     long positivity_from);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  long start_index() const { return start_; }
  long positivity_from() const { return positivity_from_; }

  const Rational& term(long n) const;
  Rational ratio(long n) const;  // a_{n+1}/a_n, error on zero term

  // log a_n as an exact log-linear constant (requires a_n > 0)
  LogNumber log_term(long n) const;
  // u_n = a_{n-1}^{1/(n-1)} a_{n+1}^{1/(n+1)} / a_n^{2/n}, exact log form
  LogNumber log_u_term(long n) const;
  Interval u_term(long n, long precision_bits) const;

  // x_n = a_n^{1/n}/n! (root) or y_n = a_{n+1}^{1/(n+1)}/(a_n^{1/n} n!)
  Interval derived_term(Target target, long n, long precision_bits) const;
  // exact log of the derived term; null-like error if the term is zero
  LogNumber log_derived_term(Target target, long n) const;
  bool derived_term_is_zero(Target target, long n) const;

 private:
  void extend_cache(long n) const;
  static LogNumber log_factorial(long n);

  std::string name_;
  std::vector<Polynomial> coeffs_;
  long start_;
  long positivity_from_;
  mutable std::vector<Rational> cache_;  // cache_[i] = a_{start_ + i}
  mutable std::mutex mu_;
};

}  // namespace turancert
