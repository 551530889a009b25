#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "turancert/rational.hpp"

namespace turancert {

// Dense univariate polynomial over Q in the variable n.
// Coefficients ascending; the zero polynomial has an empty list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }
  Polynomial(std::initializer_list<Rational> coeffs)
      : c_(coeffs) {
    normalize();
  }

  static Polynomial constant(const Rational& v) { return Polynomial({v}); }
  static Polynomial variable() {
    return Polynomial({Rational(0), Rational(1)});
  }
  // Convenience: coefficients given ascending as longs.
  static Polynomial from_longs(std::initializer_list<long> coeffs);

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int k) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_constant() const { return c_.size() <= 1; }

  Rational eval(const Rational& x) const;
  Polynomial derivative() const;
  // p(n + k)
  Polynomial shift(const Rational& k) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  Polynomial monic() const;

  std::string to_string(const std::string& var = "n") const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// quotient and remainder of a / b, b nonzero
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a,
                                              const Polynomial& b);

// Monic greatest common divisor. Both-zero input is a domain error.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

inline Rational poly_eval(const Polynomial& p, const Rational& x) {
  return p.eval(x);
}

}  // namespace turancert
