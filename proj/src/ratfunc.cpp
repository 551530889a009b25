#include "turancert/ratfunc.hpp"

namespace turancert {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(Rational(1));
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = poly_divmod(num_, g).first;
    den_ = poly_divmod(den_, g).first;
  }
  // canonical sign: positive leading denominator coefficient, and scale the
  // denominator monic-times-content so structural equality is value equality
  Rational scale = Rational(1) / den_.leading();
  num_ = num_ * scale;
  den_ = den_ * scale;
  // clear rational content to integer coefficients with coprime content
  Integer num_den_lcm(1);
  for (const Rational& c : num_.coeffs()) num_den_lcm = lcm(num_den_lcm, c.get_den());
  for (const Rational& c : den_.coeffs()) num_den_lcm = lcm(num_den_lcm, c.get_den());
  num_ = num_ * Rational(num_den_lcm);
  den_ = den_ * Rational(num_den_lcm);
  Integer content(0);
  for (const Rational& c : num_.coeffs()) content = gcd(content, c.get_num());
  for (const Rational& c : den_.coeffs()) content = gcd(content, c.get_num());
  if (content > 1) {
    Rational inv(1, content);
    inv.canonicalize();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

int RationalFunction::infinity_degree() const {
  if (num_.is_zero()) return -1000000;
  return num_.degree() - den_.degree();
}

int RationalFunction::sign_at_infinity() const {
  if (num_.is_zero()) return 0;
  return sign_of(num_.leading()) * sign_of(den_.leading());
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0)
    throw DomainError("rational function pole at " + turancert::to_string(x));
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(
      num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::shift(const Rational& k) const {
  return RationalFunction(num_.shift(k), den_.shift(k));
}

RationalFunction RationalFunction::compose(const RationalFunction& s) const {
  // Horner over the numerator and denominator separately with common powers
  RationalFunction n_acc, d_acc;
  n_acc = RationalFunction();
  for (int k = num_.degree(); k >= 0; --k)
    n_acc = n_acc * s + RationalFunction::constant(num_.coeff(k));
  d_acc = RationalFunction();
  for (int k = den_.degree(); k >= 0; --k)
    d_acc = d_acc * s + RationalFunction::constant(den_.coeff(k));
  return n_acc / d_acc;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw DomainError("division by zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace turancert
