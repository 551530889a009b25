#include "turancert/logexpr.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace turancert {

LogExpr LogExpr::log_term(const RationalFunction& coeff,
                          const RationalFunction& arg) {
  LogExpr e;
  e.add_term(coeff, arg);
  return e;
}

void LogExpr::add_term(RationalFunction coeff, RationalFunction arg) {
  if (coeff.is_zero()) return;
  if (arg.is_constant()) {
    Rational c = arg.num().coeff(0) / arg.den().coeff(0);
    if (c <= 0)
      throw DomainError("log of non-positive constant " + turancert::to_string(c));
    if (c == 1) return;
  } else if (arg.sign_at_infinity() <= 0) {
    throw DomainError("log argument " + arg.to_string() +
                      " is not eventually positive");
  }
  for (auto& t : terms_) {
    if (t.arg == arg) {
      t.coeff = t.coeff + coeff;
      if (t.coeff.is_zero())
        terms_.erase(terms_.begin() + (&t - terms_.data()));
      return;
    }
  }
  terms_.push_back({std::move(coeff), std::move(arg)});
}

int LogExpr::max_coeff_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.coeff.num().degree());
  return d;
}

bool LogExpr::has_polynomial_coeffs() const {
  for (const auto& t : terms_)
    if (!t.coeff.is_polynomial()) return false;
  return true;
}

LogExpr LogExpr::operator+(const LogExpr& o) const {
  LogExpr r = *this;
  r.rational_ = r.rational_ + o.rational_;
  for (const auto& t : o.terms_) r.add_term(t.coeff, t.arg);
  return r;
}

LogExpr LogExpr::operator-(const LogExpr& o) const { return *this + (-o); }

LogExpr LogExpr::operator-() const {
  LogExpr r;
  r.rational_ = -rational_;
  for (const auto& t : terms_) r.terms_.push_back({-t.coeff, t.arg});
  return r;
}

LogExpr LogExpr::scaled(const RationalFunction& s) const {
  LogExpr r;
  if (s.is_zero()) return r;
  r.rational_ = rational_ * s;
  for (const auto& t : terms_) r.terms_.push_back({t.coeff * s, t.arg});
  return r;
}

LogExpr LogExpr::shift(const Rational& k) const {
  LogExpr r;
  r.rational_ = rational_.shift(k);
  for (const auto& t : terms_) r.add_term(t.coeff.shift(k), t.arg.shift(k));
  return r;
}

LogExpr LogExpr::derivative() const {
  LogExpr r;
  r.rational_ = rational_.derivative();
  for (const auto& t : terms_) {
    r.add_term(t.coeff.derivative(), t.arg);
    // P * R'/R folds into the rational part
    r.rational_ = r.rational_ + t.coeff * t.arg.derivative() / t.arg;
  }
  return r;
}

LogNumber LogExpr::eval_exact(long n) const {
  Rational x(n);
  LogNumber acc(rational_.eval(x));
  for (const auto& t : terms_) {
    Rational a = t.arg.eval(x);
    if (a <= 0)
      throw DomainError("log argument non-positive at n=" +
                        std::to_string(n));
    acc = acc + LogNumber::log_of(a, t.coeff.eval(x));
  }
  return acc;
}

Interval LogExpr::eval_interval(long n, long precision_bits) const {
  return eval_exact(n).enclose(precision_bits);
}

std::string LogExpr::to_string() const {
  std::ostringstream out;
  out << rational_.to_string();
  for (const auto& t : terms_)
    out << " + (" << t.coeff.to_string() << ")*log(" << t.arg.to_string()
        << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// Asymptotic expansion at +infinity in the scale n^p and n^p*log n, with
// exact log-linear constants as coefficients.

namespace {

// truncated series sum_{i>=0} c[i] * n^(top - i)
struct PowSeries {
  long top = 0;
  std::vector<Rational> c;
};

std::vector<Rational> series_mul(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b, size_t len) {
  std::vector<Rational> r(len, Rational(0));
  for (size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::vector<Rational> series_inv(const std::vector<Rational>& a, size_t len) {
  std::vector<Rational> r(len, Rational(0));
  r[0] = Rational(1) / a[0];
  for (size_t k = 1; k < len; ++k) {
    Rational acc(0);
    for (size_t j = 1; j <= k; ++j)
      acc += (j < a.size() ? a[j] : Rational(0)) * r[k - j];
    r[k] = -acc / a[0];
  }
  return r;
}

// log(P) for a series with P[0] = 1
std::vector<Rational> series_log1(const std::vector<Rational>& p, size_t len) {
  std::vector<Rational> q(len, Rational(0));
  for (size_t k = 1; k < len; ++k) {
    Rational acc = (k < p.size() ? p[k] : Rational(0)) *
                   Rational(static_cast<long>(k));
    for (size_t j = 1; j < k; ++j)
      acc -= Rational(static_cast<long>(j)) * q[j] *
             (k - j < p.size() ? p[k - j] : Rational(0));
    q[k] = acc / Rational(static_cast<long>(k));
  }
  return q;
}

// Laurent expansion of a rational function at +infinity, len terms.
PowSeries laurent(const RationalFunction& f, size_t len) {
  PowSeries s;
  if (f.is_zero()) {
    s.top = 0;
    s.c.assign(len, Rational(0));
    return s;
  }
  const Polynomial& num = f.num();
  const Polynomial& den = f.den();
  std::vector<Rational> nr(num.degree() + 1), dr(den.degree() + 1);
  for (int i = 0; i <= num.degree(); ++i) nr[i] = num.coeff(num.degree() - i);
  for (int i = 0; i <= den.degree(); ++i) dr[i] = den.coeff(den.degree() - i);
  s.top = num.degree() - den.degree();
  s.c = series_mul(nr, series_inv(dr, len), len);
  return s;
}

// Expansion accumulator: power -> (A, B) for (A + B*log n) * n^power.
using Expansion = std::map<long, std::pair<LogNumber, Rational>, std::greater<long>>;

void add_rational_series(Expansion& ex, const PowSeries& s, long floor_pow,
                         bool log_n, const Rational& scale) {
  for (size_t i = 0; i < s.c.size(); ++i) {
    long p = s.top - static_cast<long>(i);
    if (p < floor_pow) break;
    if (s.c[i] == 0) continue;
    auto& slot = ex[p];
    if (log_n)
      slot.second += s.c[i] * scale;
    else
      slot.first = slot.first + LogNumber(s.c[i] * scale);
  }
}

void add_lognumber_series(Expansion& ex, const PowSeries& s, long floor_pow,
                          const LogNumber& factor) {
  for (size_t i = 0; i < s.c.size(); ++i) {
    long p = s.top - static_cast<long>(i);
    if (p < floor_pow) break;
    if (s.c[i] == 0) continue;
    ex[p].first = ex[p].first + factor.scaled(s.c[i]);
  }
}

// Expand e to powers >= floor_pow (valid down to that power inclusive).
Expansion expand(const LogExpr& e, long floor_pow) {
  Expansion ex;
  auto need = [&](long top) -> size_t {
    return top < floor_pow ? 0 : static_cast<size_t>(top - floor_pow + 1);
  };

  {
    PowSeries s = laurent(e.rational_part(),
                          need(e.rational_part().infinity_degree()) + 1);
    add_rational_series(ex, s, floor_pow, false, Rational(1));
  }

  for (const auto& t : e.log_terms()) {
    long ptop = t.coeff.infinity_degree();
    size_t plen = need(ptop) + 1;
    PowSeries pserie = laurent(t.coeff, plen);

    // log(arg) = log(lc ratio) + d*log n + log(1 + u(1/n))
    const RationalFunction& a = t.arg;
    long d = a.num().degree() - a.den().degree();
    Rational lcr = a.num().leading() / a.den().leading();
    LogNumber lclog = LogNumber::log_of(lcr);

    // P * d * log n
    if (d != 0) {
      PowSeries scaled = pserie;
      add_rational_series(ex, scaled, floor_pow, true,
                          Rational(d));
    }
    // P * log(lc ratio)
    if (!lclog.is_zero())
      add_lognumber_series(ex, pserie, floor_pow, lclog);

    // P * log-series part
    size_t slen = need(ptop) + 2;
    std::vector<Rational> nrm(a.num().degree() + 1), drm(a.den().degree() + 1);
    for (int i = 0; i <= a.num().degree(); ++i)
      nrm[i] = a.num().coeff(a.num().degree() - i) / a.num().leading();
    for (int i = 0; i <= a.den().degree(); ++i)
      drm[i] = a.den().coeff(a.den().degree() - i) / a.den().leading();
    std::vector<Rational> lg_num = series_log1(nrm, slen);
    std::vector<Rational> lg_den = series_log1(drm, slen);
    std::vector<Rational> lg(slen);
    for (size_t i = 0; i < slen; ++i) lg[i] = lg_num[i] - lg_den[i];
    // lg starts at 1/n: as a PowSeries its top is 0 with c[0] = 0
    PowSeries lgs{0, lg};
    std::vector<Rational> prod =
        series_mul(pserie.c, lgs.c, need(ptop + lgs.top) + 1);
    PowSeries ps{pserie.top + lgs.top, prod};
    add_rational_series(ex, ps, floor_pow, false, Rational(1));
  }
  return ex;
}

long natural_depth(const LogExpr& e) {
  long d = std::max(2, e.rational_part().infinity_degree() + 2);
  for (const auto& t : e.log_terms())
    d = std::max<long>(d, t.coeff.infinity_degree() + 2);
  return d;
}

}  // namespace

int AsymptoticClass::limit_sign() const {
  switch (kind) {
    case Kind::plus_infinity:
      return 1;
    case Kind::minus_infinity:
      return -1;
    case Kind::finite:
      return limit.sign();
  }
  return 0;
}

const char* AsymptoticClass::kind_name(Kind k) {
  switch (k) {
    case Kind::plus_infinity:
      return "plus_infinity";
    case Kind::minus_infinity:
      return "minus_infinity";
    case Kind::finite:
      return "finite";
  }
  return "?";
}

AsymptoticClass limit_at_infinity(const LogExpr& e) {
  AsymptoticClass out;
  if (e.is_structurally_zero()) {
    out.kind = AsymptoticClass::Kind::finite;
    out.value = Rational(0);
    out.leading_term = "0";
    return out;
  }
  long depth = natural_depth(e);
  const long cap = depth + 192;
  for (; depth <= cap; depth = depth * 2 + 8) {
    long top = std::max<long>(
        e.rational_part().infinity_degree(),
        e.max_coeff_degree() >= 0 ? e.max_coeff_degree() + 1 : 0);
    long floor_pow = top - depth;
    Expansion ex = expand(e, floor_pow);
    for (const auto& [p, ab] : ex) {
      const auto& [A, B] = ab;
      if (B == 0 && A.is_zero()) continue;
      std::ostringstream lt;
      {
        int s = B != 0 ? sign_of(B) : A.sign();
        lt << (s >= 0 ? "+" : "-");
        if (p != 0) lt << "n^" << p;
        if (B != 0) lt << (p != 0 ? "*log n" : "log n");
        if (p == 0 && B == 0) lt << "1";
      }
      out.leading_term = lt.str();
      if (p > 0 || (p == 0 && B != 0)) {
        int s = B != 0 ? sign_of(B) : A.sign();
        out.kind = s > 0 ? AsymptoticClass::Kind::plus_infinity
                         : AsymptoticClass::Kind::minus_infinity;
        return out;
      }
      out.kind = AsymptoticClass::Kind::finite;
      if (p == 0) {
        out.limit = A;
        if (A.is_rational()) out.value = A.rational_part();
      } else {
        out.value = Rational(0);
      }
      return out;
    }
  }
  // every coefficient vanished to the probed depth: the expression is the
  // zero function on this family (expansions are faithful here)
  out.kind = AsymptoticClass::Kind::finite;
  out.value = Rational(0);
  out.leading_term = "0";
  return out;
}

DescentProof prove_eventually_positive(const LogExpr& e, int eval_budget) {
  if (e.is_structurally_zero())
    throw DomainError("descent on the identically-zero expression");

  std::vector<LogExpr> levels{e};
  while (!levels.back().log_terms().empty()) {
    if (!levels.back().has_polynomial_coeffs())
      throw InconclusiveError(
          "descent requires polynomial log coefficients; got " +
          levels.back().to_string());
    if (static_cast<int>(levels.size()) > e.max_coeff_degree() + 2)
      throw InconclusiveError("descent did not reach a rational tail");
    levels.push_back(levels.back().derivative());
  }

  DescentProof proof;
  proof.order = static_cast<int>(levels.size()) - 1;
  proof.rational_tail = levels.back().rational_part();
  if (proof.rational_tail.is_zero()) {
    if (proof.order == 0)
      throw DomainError("descent on the identically-zero expression");
    throw InconclusiveError("derivative tail vanished identically");
  }

  proof.tail_sign = proof.rational_tail.sign_at_infinity();
  proof.tail_threshold = positivity_threshold(
      proof.tail_sign > 0 ? proof.rational_tail : -proof.rational_tail, 1);
  long n_cursor = proof.tail_threshold.threshold;
  int sign = proof.tail_sign;

  for (int j = proof.order - 1; j >= 0; --j) {
    const LogExpr& ej = levels[j];
    DescentStep step;
    step.order = j;
    step.limit = limit_at_infinity(ej);
    int lim_sign = step.limit.limit_sign();

    if (step.limit.is_finite() && lim_sign == 0) {
      // rule A: monotone approach to zero flips the sign
      step.sign = -sign;
      step.threshold = n_cursor;
      step.rule = "A";
    } else if (lim_sign == -sign) {
      // monotone toward a finite limit on the far side of zero: the value
      // stays on the limit's side for the whole range
      if (!step.limit.is_finite())
        throw InconclusiveError("limit inconsistent with monotonicity at order " +
                                std::to_string(j));
      step.sign = lim_sign;
      step.threshold = n_cursor;
      step.rule = "B-sym";
    } else {
      // rule B: monotone toward a limit with the same sign; certify one
      // point of that sign and monotonicity carries it forward
      long n0 = n_cursor;
      bool found = false;
      long stride = 1;
      for (int tries = 0; tries < eval_budget; ++tries) {
        int s = 0;
        try {
          s = ej.eval_exact(n0).sign();
        } catch (const DomainError&) {
          s = 0;  // pole or log domain issue at this point; move on
        }
        if (s == lim_sign || (lim_sign == 0 && s != 0)) {
          found = true;
          break;
        }
        n0 += stride;
        stride *= 2;
      }
      if (!found)
        throw InconclusiveError(
            "could not certify a sign for derivative order " +
            std::to_string(j) + " within the evaluation budget");
      step.sign = lim_sign != 0 ? lim_sign : sign;
      step.threshold = n0;
      step.rule = "B";
    }
    proof.chain.push_back(step);
    sign = step.sign;
    n_cursor = step.threshold;
  }

  proof.final_threshold = n_cursor;
  if (sign < 0)
    throw EventuallyNonpositiveError(
        "expression is negative for n >= " + std::to_string(n_cursor));
  return proof;
}

}  // namespace turancert
