#pragma once

#include <optional>
#include <string>

#include "turancert/polynomial.hpp"

namespace turancert {

// Quotient of integer/rational polynomials in canonical form:
// gcd(num, den) = 1, den has positive leading coefficient, den != 0.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(Rational(1))) {}
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(const Rational& v) {
    return RationalFunction(Polynomial::constant(v),
                            Polynomial::constant(Rational(1)));
  }
  static RationalFunction variable() {
    return RationalFunction(Polynomial::variable(),
                            Polynomial::constant(Rational(1)));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  // Degree at infinity: deg num - deg den (zero function: large negative).
  int infinity_degree() const;
  // Sign of the function for large n (0 for the zero function).
  int sign_at_infinity() const;

  Rational eval(const Rational& x) const;  // throws DomainError at a pole
  bool is_pole(const Rational& x) const { return den_.eval(x) == 0; }

  RationalFunction derivative() const;
  RationalFunction shift(const Rational& k) const;  // r(n + k)
  // r(s(n)) for a rational-function argument
  RationalFunction compose(const RationalFunction& s) const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  std::string to_string(const std::string& var = "n") const;

 private:
  Polynomial num_, den_;
};

inline RationalFunction ratfunc_simplify(const Polynomial& num,
                                         const Polynomial& den) {
  return RationalFunction(num, den);
}

}  // namespace turancert
