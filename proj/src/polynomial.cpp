#include "turancert/polynomial.hpp"

#include <sstream>

namespace turancert {

namespace {
const Rational kZero(0);
}

Polynomial Polynomial::from_longs(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

const Rational& Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shift(const Rational& k) const {
  // Horner in (n + k): p(n + k) = (((c_d)(n+k) + c_{d-1})(n+k) + ...)
  Polynomial acc;
  Polynomial lin({k, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * lin + Polynomial::constant(*it);
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (c_.empty() || o.c_.empty()) return Polynomial();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  if (s == 0) return Polynomial();
  std::vector<Rational> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1) && k > 0;
    if (!unit) out << a.get_str();
    if (k > 0) {
      if (!unit) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a,
                                              const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Polynomial q;
  Polynomial r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rational c = r.leading() / b.leading();
    std::vector<Rational> mono(k + 1, Rational(0));
    mono[k] = c;
    Polynomial m(std::move(mono));
    q = q + m;
    r = r - m * b;
  }
  return {q, r};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero())
    throw DomainError("gcd of two zero polynomials");
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = poly_divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

}  // namespace turancert
