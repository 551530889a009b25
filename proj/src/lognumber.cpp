#include "turancert/lognumber.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace turancert {

LogNumber LogNumber::log_of(const Rational& arg, const Rational& coeff) {
  if (arg <= 0)
    throw DomainError("log of non-positive rational " + turancert::to_string(arg));
  LogNumber r;
  if (coeff == 0 || arg == 1) return r;
  r.add_log(arg.get_num(), coeff);
  r.add_log(arg.get_den(), -coeff);
  return r;
}

void LogNumber::add_log(Integer base, Rational coeff) {
  if (base == 1 || coeff == 0) return;
  if (base <= 0) throw DomainError("log base must be positive");
  // factor refinement: keep the multiplicative support pairwise coprime
  std::vector<std::pair<Integer, Rational>> items(logs_.begin(), logs_.end());
  items.emplace_back(std::move(base), std::move(coeff));
  bool changed = true;
  while (changed) {
    changed = false;
    // merge equal bases and drop trivial entries
    for (size_t i = 0; i < items.size(); ++i) {
      for (size_t j = i + 1; j < items.size();) {
        if (items[i].first == items[j].first) {
          items[i].second += items[j].second;
          items.erase(items.begin() + j);
        } else {
          ++j;
        }
      }
    }
    for (size_t i = 0; i < items.size();) {
      if (items[i].first == 1 || items[i].second == 0)
        items.erase(items.begin() + i);
      else
        ++i;
    }
    for (size_t i = 0; i < items.size() && !changed; ++i) {
      for (size_t j = i + 1; j < items.size() && !changed; ++j) {
        Integer g = gcd(items[i].first, items[j].first);
        if (g > 1) {
          // b_i^e_i * b_j^e_j = (b_i/g)^e_i * (b_j/g)^e_j * g^(e_i+e_j)
          Rational shared = items[i].second + items[j].second;
          items[i].first /= g;
          items[j].first /= g;
          items.emplace_back(g, shared);
          changed = true;
        }
      }
    }
  }
  logs_.clear();
  for (auto& [b, c] : items) logs_.emplace(std::move(b), std::move(c));
}

LogNumber LogNumber::operator+(const LogNumber& o) const {
  LogNumber r = *this;
  r.rat_ += o.rat_;
  for (const auto& [b, c] : o.logs_) r.add_log(b, c);
  return r;
}

LogNumber LogNumber::operator-(const LogNumber& o) const {
  return *this + (-o);
}

LogNumber LogNumber::operator-() const {
  LogNumber r;
  r.rat_ = -rat_;
  for (const auto& [b, c] : logs_) r.logs_.emplace(b, -c);
  return r;
}

LogNumber LogNumber::scaled(const Rational& s) const {
  LogNumber r;
  if (s == 0) return r;
  r.rat_ = rat_ * s;
  for (const auto& [b, c] : logs_) r.logs_.emplace(b, c * s);
  return r;
}

bool LogNumber::is_zero() const { return rat_ == 0 && logs_.empty(); }

Interval LogNumber::enclose(long precision_bits) const {
  Interval acc = Interval::exact(rat_, precision_bits);
  for (const auto& [b, c] : logs_) {
    Interval lg = Interval::exact_integer(b, precision_bits).log();
    acc = acc + lg.mul_rational(c);
  }
  return acc;
}

int LogNumber::sign() const {
  if (is_zero()) return 0;
  // nonzero by coprime-base independence, so refinement terminates
  for (long prec = 64;; prec *= 2) {
    int s = enclose(prec).sign();
    if (s != 0) return s;
    if (prec > (1L << 22))
      throw Error("log-constant sign refinement exceeded precision cap");
  }
}

std::string LogNumber::to_string() const {
  std::ostringstream out;
  out << turancert::to_string(rat_);
  for (const auto& [b, c] : logs_)
    out << " + (" << turancert::to_string(c) << ")*log("
        << turancert::to_string(b) << ")";
  return out.str();
}

}  // namespace turancert
