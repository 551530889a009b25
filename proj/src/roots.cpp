#include "turancert/roots.hpp"

#include <algorithm>
#include <sstream>

namespace turancert {

SturmChain SturmChain::build(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  SturmChain chain;
  chain.polys.push_back(p);
  if (p.degree() == 0) return chain;
  chain.polys.push_back(p.derivative());
  while (true) {
    const Polynomial& a = chain.polys[chain.polys.size() - 2];
    const Polynomial& b = chain.polys.back();
    Polynomial r = poly_divmod(a, b).second;
    if (r.is_zero()) break;
    chain.polys.push_back(-r);
  }
  return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
  int count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(polys.size());
  for (const Polynomial& q : polys) signs.push_back(sign_of(q.eval(x)));
  return variations(signs);
}

int SturmChain::variations_at_plus_infinity() const {
  std::vector<int> signs;
  signs.reserve(polys.size());
  for (const Polynomial& q : polys) signs.push_back(sign_of(q.leading()));
  return variations(signs);
}

int SturmChain::variations_at_minus_infinity() const {
  std::vector<int> signs;
  signs.reserve(polys.size());
  for (const Polynomial& q : polys) {
    int s = sign_of(q.leading());
    if (q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

int count_real_roots(const Polynomial& p, const Rational& lo,
                     const Rational& hi) {
  if (p.is_zero()) throw DomainError("root count of the zero polynomial");
  if (!(lo < hi)) throw DomainError("empty interval in count_real_roots");
  if (p.eval(lo) == 0)
    throw DomainError("endpoint " + to_string(lo) + " is a root; perturb it");
  if (p.eval(hi) == 0)
    throw DomainError("endpoint " + to_string(hi) + " is a root; perturb it");
  // strip repeated factors so variation counts are exact
  Polynomial q = p;
  if (p.degree() > 1) {
    Polynomial g = poly_gcd(p, p.derivative());
    if (g.degree() > 0) q = poly_divmod(p, g).first;
  }
  SturmChain chain = SturmChain::build(q);
  return chain.variations_at(lo) - chain.variations_at(hi);
}

Rational largest_root_upper_bound(const Polynomial& p) {
  if (p.is_zero() || p.degree() == 0)
    throw DomainError("root bound needs degree >= 1");
  Rational lead = abs(p.leading());
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) { Rational a = abs(p.coeff(k)); if (a > m) m = a; }
  return Rational(1) + m / lead;
}

namespace {

// Largest integer m >= floor such that p has a real root in [m, +inf), or
// floor - 1 when there is none. Locates the root by Sturm bisection so huge
// root bounds cost only logarithmically many evaluations.
long largest_root_floor(const Polynomial& p, long floor_) {
  if (p.degree() <= 0) return floor_ - 1;
  Polynomial sf = p;
  Polynomial d = p.derivative();
  if (!d.is_zero()) {
    Polynomial g = poly_gcd(p, d);
    if (g.degree() >= 1) sf = poly_divmod(p, g).first;
  }
  Rational bound = largest_root_upper_bound(sf);
  Integer t = bound.get_num() / bound.get_den() + 2;
  if (!t.fits_slong_p())
    throw DomainError("root bound too large for threshold search");
  long top = std::max(floor_, t.get_si());

  SturmChain chain = SturmChain::build(sf);
  long v_top = chain.variations_at(Rational(top));
  auto has_root_from = [&](long m) {
    Rational x(m);
    if (sign_of(sf.eval(x)) == 0) return true;
    return chain.variations_at(x) - v_top > 0;
  };
  if (!has_root_from(floor_)) return floor_ - 1;
  long lo = floor_, hi = top;  // root in [lo, +inf); none in [hi, +inf)
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    if (has_root_from(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

PositivityThreshold positivity_threshold(const RationalFunction& r,
                                         long floor) {
  if (r.is_zero())
    throw DomainError("positivity threshold of the zero function");
  if (r.sign_at_infinity() <= 0)
    throw DomainError("eventually-nonpositive: " + r.to_string() +
                      " is not positive at infinity");
  // Strict positivity on [t, +inf) holds exactly when t clears every real
  // numerator root and every pole, since the sign past all of them equals
  // the sign at infinity.
  long num_floor = largest_root_floor(r.num(), floor);
  long den_floor = largest_root_floor(r.den(), floor);
  long threshold = std::max({floor, num_floor + 1, den_floor + 1});

  PositivityThreshold out;
  out.threshold = threshold;
  out.checked_floor = threshold;
  std::ostringstream w;
  if (threshold == floor) {
    w << "no numerator root or pole in [" << floor << ", +inf)";
  } else {
    long m = std::max(num_floor, den_floor);
    w << "largest " << (den_floor >= num_floor ? "pole" : "numerator root")
      << " lies in [" << m << ", " << m + 1 << ")";
    Rational prev(threshold - 1);
    if (r.is_pole(prev))
      w << "; pole at " << threshold - 1;
    else
      w << "; value at " << threshold - 1 << " is "
        << to_string(r.eval(prev));
  }
  out.witness = w.str();
  return out;
}

}  // namespace turancert
