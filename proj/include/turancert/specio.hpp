#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "turancert/logexpr.hpp"
#include "turancert/ratfunc.hpp"
#include "turancert/sequence.hpp"

namespace turancert {

// Expression tree for the calculator grammar
// (precedence: ^ > unary- > *,/ > +,-; only `log` as a function symbol).
struct ExprAst {
  enum class Kind { number, variable, neg, add, sub, mul, div, pow, log };

  Kind kind = Kind::number;
  Rational value;        // number
  long exponent = 0;     // pow (integer literal)
  std::unique_ptr<ExprAst> lhs, rhs;  // rhs unused for neg/log/pow

  static std::unique_ptr<ExprAst> make(Kind k);
};

std::unique_ptr<ExprAst> parse_expression(const std::string& text);

RationalFunction parse_ratfunc(const std::string& text);
LogExpr parse_logexpr(const std::string& text);

std::string to_string(const RationalFunction& r);  // re-parseable form

struct BoundSpec {
  std::string expr;
  long from = 0;
};

struct BoundsSpec {
  BoundSpec f, g, s_log, S_log, fu, gu;  // ratio, value (log form), u bounds
  RationalFunction f_fn, g_fn, fu_fn, gu_fn;
  LogExpr s_log_fn, S_log_fn;
  bool has_f = false, has_g = false, has_s_log = false, has_S_log = false,
       has_fu = false, has_gu = false;
};

struct SequenceSpec {
  std::string name;
  int order = 0;
  std::vector<Polynomial> coeffs;  // sum_i coeffs[i](n) a_{n+i} = 0
  long start = 0;
  std::vector<Rational> initial;
  long positivity_from = 0;
  std::string oeis_id;  // empty when absent
  std::optional<BoundsSpec> bounds;

  PRecursiveSequence make_sequence() const;
};

SequenceSpec load_spec(const nlohmann::json& doc);
SequenceSpec load_spec_file(const std::string& path);

}  // namespace turancert
