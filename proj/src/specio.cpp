#include "turancert/specio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace turancert {

std::unique_ptr<ExprAst> ExprAst::make(Kind k) {
  auto node = std::make_unique<ExprAst>();
  node->kind = k;
  return node;
}

namespace {

struct Token {
  enum class Kind { number, variable, log, plus, minus, star, slash, caret,
                    lparen, rparen, end };
  Kind kind;
  Integer number;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg, size_t pos) const {
    std::ostringstream os;
    os << "syntax error at position " << pos << ": " << msg;
    throw ParseError(os.str());
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_])))
      ++i_;
    current_.pos = i_;
    if (i_ >= text_.size()) {
      current_.kind = Token::Kind::end;
      return;
    }
    char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[j])))
        ++j;
      current_.kind = Token::Kind::number;
      current_.number = Integer(text_.substr(i_, j - i_));
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[j])))
        ++j;
      std::string word = text_.substr(i_, j - i_);
      i_ = j;
      if (word == "n") {
        current_.kind = Token::Kind::variable;
        return;
      }
      if (word == "log") {
        current_.kind = Token::Kind::log;
        return;
      }
      fail("unknown identifier '" + word + "'", current_.pos);
    }
    ++i_;
    switch (c) {
      case '+': current_.kind = Token::Kind::plus; return;
      case '-': current_.kind = Token::Kind::minus; return;
      case '*': current_.kind = Token::Kind::star; return;
      case '/': current_.kind = Token::Kind::slash; return;
      case '^': current_.kind = Token::Kind::caret; return;
      case '(': current_.kind = Token::Kind::lparen; return;
      case ')': current_.kind = Token::Kind::rparen; return;
    }
    fail(std::string("unexpected character '") + c + "'", current_.pos);
  }

  const std::string& text_;
  size_t i_ = 0;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  std::unique_ptr<ExprAst> parse() {
    auto e = parse_sum(1);
    if (lex_.peek().kind != Token::Kind::end)
      lex_.fail("trailing input", lex_.peek().pos);
    return e;
  }

 private:
  static int binary_prec(Token::Kind k) {
    switch (k) {
      case Token::Kind::plus:
      case Token::Kind::minus:
        return 1;
      case Token::Kind::star:
      case Token::Kind::slash:
        return 2;
      default:
        return 0;
    }
  }

  std::unique_ptr<ExprAst> parse_sum(int min_prec) {
    auto lhs = parse_unary();
    while (true) {
      Token::Kind k = lex_.peek().kind;
      int prec = binary_prec(k);
      if (prec == 0 || prec < min_prec) return lhs;
      lex_.take();
      auto rhs = parse_sum(prec + 1);
      ExprAst::Kind op = k == Token::Kind::plus   ? ExprAst::Kind::add
                         : k == Token::Kind::minus ? ExprAst::Kind::sub
                         : k == Token::Kind::star  ? ExprAst::Kind::mul
                                                   : ExprAst::Kind::div;
      auto node = ExprAst::make(op);
      node->lhs = std::move(lhs);
      node->rhs = std::move(rhs);
      lhs = std::move(node);
    }
  }

  std::unique_ptr<ExprAst> parse_unary() {
    if (lex_.peek().kind == Token::Kind::minus) {
      lex_.take();
      auto node = ExprAst::make(ExprAst::Kind::neg);
      node->lhs = parse_unary();
      return node;
    }
    return parse_power();
  }

  std::unique_ptr<ExprAst> parse_power() {
    auto base = parse_atom();
    while (lex_.peek().kind == Token::Kind::caret) {
      lex_.take();
      bool negate = false;
      if (lex_.peek().kind == Token::Kind::minus) {
        lex_.take();
        negate = true;
      }
      Token t = lex_.peek();
      if (t.kind != Token::Kind::number)
        lex_.fail("exponent must be an integer literal", t.pos);
      lex_.take();
      if (!t.number.fits_slong_p())
        lex_.fail("exponent out of range", t.pos);
      auto node = ExprAst::make(ExprAst::Kind::pow);
      node->lhs = std::move(base);
      node->exponent = t.number.get_si() * (negate ? -1 : 1);
      base = std::move(node);
    }
    return base;
  }

  std::unique_ptr<ExprAst> parse_atom() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Token::Kind::number: {
        lex_.take();
        auto node = ExprAst::make(ExprAst::Kind::number);
        node->value = Rational(t.number);
        return node;
      }
      case Token::Kind::variable:
        lex_.take();
        return ExprAst::make(ExprAst::Kind::variable);
      case Token::Kind::lparen: {
        lex_.take();
        auto inner = parse_sum(1);
        if (lex_.peek().kind != Token::Kind::rparen)
          lex_.fail("expected ')'", lex_.peek().pos);
        lex_.take();
        return inner;
      }
      case Token::Kind::log: {
        lex_.take();
        if (lex_.peek().kind != Token::Kind::lparen)
          lex_.fail("expected '(' after log", lex_.peek().pos);
        lex_.take();
        auto node = ExprAst::make(ExprAst::Kind::log);
        node->lhs = parse_sum(1);
        if (lex_.peek().kind != Token::Kind::rparen)
          lex_.fail("expected ')'", lex_.peek().pos);
        lex_.take();
        return node;
      }
      default:
        lex_.fail("expected a value", t.pos);
    }
  }

  Lexer lex_;
};

bool pure_rational(const LogExpr& e) { return e.log_terms().empty(); }

RationalFunction ratfunc_pow(const RationalFunction& base, long k) {
  if (k == 0) return RationalFunction::constant(Rational(1));
  bool inv = k < 0;
  if (inv && base.is_zero()) throw ParseError("zero raised to a negative power");
  unsigned long e = inv ? -k : k;
  RationalFunction acc = RationalFunction::constant(Rational(1));
  RationalFunction b = base;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  if (inv) acc = RationalFunction::constant(Rational(1)) / acc;
  return acc;
}

LogExpr compile(const ExprAst& e, bool allow_log) {
  switch (e.kind) {
    case ExprAst::Kind::number:
      return LogExpr(RationalFunction::constant(e.value));
    case ExprAst::Kind::variable:
      return LogExpr(RationalFunction(Polynomial::from_longs({0, 1}),
                                      Polynomial::from_longs({1})));
    case ExprAst::Kind::neg:
      return -compile(*e.lhs, allow_log);
    case ExprAst::Kind::add:
      return compile(*e.lhs, allow_log) + compile(*e.rhs, allow_log);
    case ExprAst::Kind::sub:
      return compile(*e.lhs, allow_log) - compile(*e.rhs, allow_log);
    case ExprAst::Kind::mul: {
      LogExpr a = compile(*e.lhs, allow_log);
      LogExpr b = compile(*e.rhs, allow_log);
      if (pure_rational(b)) return a.scaled(b.rational_part());
      if (pure_rational(a)) return b.scaled(a.rational_part());
      throw ParseError("product of two log-bearing expressions is unsupported");
    }
    case ExprAst::Kind::div: {
      LogExpr a = compile(*e.lhs, allow_log);
      LogExpr b = compile(*e.rhs, allow_log);
      if (!pure_rational(b))
        throw ParseError("division by a log-bearing expression is unsupported");
      if (b.rational_part().is_zero())
        throw ParseError("division by a zero expression");
      return a.scaled(RationalFunction::constant(Rational(1)) /
                      b.rational_part());
    }
    case ExprAst::Kind::pow: {
      LogExpr base = compile(*e.lhs, allow_log);
      if (!pure_rational(base))
        throw ParseError("power of a log-bearing expression is unsupported");
      return LogExpr(ratfunc_pow(base.rational_part(), e.exponent));
    }
    case ExprAst::Kind::log: {
      if (!allow_log)
        throw ParseError("log is not allowed in a rational-function context");
      LogExpr arg = compile(*e.lhs, false);  // nested log rejected here
      return LogExpr::log_term(RationalFunction::constant(Rational(1)),
                               arg.rational_part());
    }
  }
  throw ParseError("unreachable expression kind");
}

void require_field(const nlohmann::json& doc, const char* key,
                   std::vector<std::string>& errs) {
  if (!doc.contains(key)) errs.push_back(std::string(key) + ": missing");
}

}  // namespace

std::unique_ptr<ExprAst> parse_expression(const std::string& text) {
  return Parser(text).parse();
}

RationalFunction parse_ratfunc(const std::string& text) {
  LogExpr e = compile(*parse_expression(text), /*allow_log=*/false);
  return e.rational_part();
}

LogExpr parse_logexpr(const std::string& text) {
  return compile(*parse_expression(text), /*allow_log=*/true);
}

std::string to_string(const RationalFunction& r) { return r.to_string(); }

PRecursiveSequence SequenceSpec::make_sequence() const {
  return PRecursiveSequence(name, coeffs, initial, start, positivity_from);
}

SequenceSpec load_spec(const nlohmann::json& doc) {
  std::vector<std::string> errs;
  SequenceSpec spec;
  if (!doc.is_object()) throw ParseError("spec: document is not a JSON object");
  if (doc.value("schema", "") != "turancert-spec/1")
    errs.push_back("schema: expected \"turancert-spec/1\"");
  for (const char* key : {"name", "order", "coeffs", "initial",
                          "positivity_from"})
    require_field(doc, key, errs);
  if (!errs.empty()) {
    std::string joined;
    for (const auto& e : errs) joined += (joined.empty() ? "" : "; ") + e;
    throw ParseError("spec: " + joined);
  }

  auto field_error = [&errs](const std::string& path, const std::string& msg) {
    errs.push_back(path + ": " + msg);
  };

  try {
    spec.name = doc.at("name").get<std::string>();
    if (spec.name.empty()) field_error("name", "empty");
  } catch (const nlohmann::json::exception& e) {
    field_error("name", e.what());
  }
  try {
    spec.order = doc.at("order").get<int>();
    if (spec.order < 1) field_error("order", "must be >= 1");
  } catch (const nlohmann::json::exception& e) {
    field_error("order", e.what());
  }

  if (doc.at("coeffs").is_array()) {
    auto arr = doc.at("coeffs");
    if (spec.order >= 1 &&
        static_cast<int>(arr.size()) != spec.order + 1)
      field_error("coeffs", "expected order+1 entries");
    for (size_t i = 0; i < arr.size(); ++i) {
      std::string path = "coeffs[" + std::to_string(i) + "]";
      try {
        RationalFunction r = parse_ratfunc(arr[i].get<std::string>());
        if (r.den().degree() != 0)
          field_error(path, "coefficient must be a polynomial");
        else
          spec.coeffs.push_back(r.num() * (Rational(1) / r.den().coeff(0)));
      } catch (const Error& e) {
        field_error(path, e.what());
      } catch (const nlohmann::json::exception& e) {
        field_error(path, e.what());
      }
    }
  } else {
    field_error("coeffs", "expected an array of expression strings");
  }

  try {
    const auto& init = doc.at("initial");
    spec.start = init.at("start").get<long>();
    for (size_t i = 0; i < init.at("values").size(); ++i) {
      std::string path = "initial.values[" + std::to_string(i) + "]";
      try {
        spec.initial.push_back(
            parse_rational(init.at("values")[i].get<std::string>()));
      } catch (const Error& e) {
        field_error(path, e.what());
      }
    }
    if (static_cast<int>(spec.initial.size()) < spec.order)
      field_error("initial.values", "need at least `order` values");
  } catch (const nlohmann::json::exception& e) {
    field_error("initial", e.what());
  }

  try {
    spec.positivity_from = doc.at("positivity_from").get<long>();
  } catch (const nlohmann::json::exception& e) {
    field_error("positivity_from", e.what());
  }
  if (doc.contains("oeis_id")) {
    try {
      spec.oeis_id = doc.at("oeis_id").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      field_error("oeis_id", e.what());
    }
  }

  if (doc.contains("bounds")) {
    BoundsSpec b;
    struct Slot {
      const char* key;
      BoundSpec* raw;
      bool is_log;
      RationalFunction* fn;
      LogExpr* le;
      bool* present;
    };
    Slot slots[] = {
        {"f", &b.f, false, &b.f_fn, nullptr, &b.has_f},
        {"g", &b.g, false, &b.g_fn, nullptr, &b.has_g},
        {"s_log", &b.s_log, true, nullptr, &b.s_log_fn, &b.has_s_log},
        {"S_log", &b.S_log, true, nullptr, &b.S_log_fn, &b.has_S_log},
        {"fu", &b.fu, false, &b.fu_fn, nullptr, &b.has_fu},
        {"gu", &b.gu, false, &b.gu_fn, nullptr, &b.has_gu},
    };
    for (const Slot& s : slots) {
      std::string path = std::string("bounds.") + s.key;
      if (!doc.at("bounds").contains(s.key)) continue;
      try {
        const auto& node = doc.at("bounds").at(s.key);
        *s.present = true;
        s.raw->expr = node.at("expr").get<std::string>();
        s.raw->from = node.at("from").get<long>();
        if (s.raw->from < spec.start)
          field_error(path + ".from", "must be >= initial.start");
        if (s.is_log)
          *s.le = parse_logexpr(s.raw->expr);
        else
          *s.fn = parse_ratfunc(s.raw->expr);
      } catch (const Error& e) {
        field_error(path, e.what());
      } catch (const nlohmann::json::exception& e) {
        field_error(path, e.what());
      }
    }
    spec.bounds = std::move(b);
  }

  if (errs.empty()) {
    // the sequence constructor enforces the positivity window over the
    // reachable terms; surface its complaint as a load-time error
    try {
      spec.make_sequence();
    } catch (const Error& e) {
      field_error("positivity_from", e.what());
    }
  }

  if (!errs.empty()) {
    std::string joined;
    for (const auto& e : errs) joined += (joined.empty() ? "" : "; ") + e;
    throw ParseError("spec: " + joined);
  }
  return spec;
}

SequenceSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("spec file " + path + ": " + e.what());
  }
  try {
    return load_spec(doc);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace turancert
