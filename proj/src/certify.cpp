#include "turancert/certify.hpp"

#include <algorithm>
#include <sstream>

namespace turancert {

const char* property_name(Property p) {
  return p == Property::higher_turan ? "higher_turan" : "laguerre2";
}

const char* laguerre_mode_name(LaguerreMode m) {
  return m == LaguerreMode::paper ? "paper" : "conservative";
}

Property parse_property(const std::string& s) {
  if (s == "higher_turan" || s == "hot") return Property::higher_turan;
  if (s == "laguerre2") return Property::laguerre2;
  throw ParseError("unknown property: " + s);
}

LaguerreMode parse_laguerre_mode(const std::string& s) {
  if (s == "paper") return LaguerreMode::paper;
  if (s == "conservative") return LaguerreMode::conservative;
  throw ParseError("unknown mode: " + s);
}

namespace {

RationalFunction rf_const(long v) {
  return RationalFunction::constant(Rational(v));
}

RationalFunction rf_poly(const Polynomial& p) {
  return RationalFunction(p, Polynomial::constant(Rational(1)));
}

ThresholdRecord certify_positive(const std::string& name,
                                 const RationalFunction& expr,
                                 long must_not_exceed, long floor = 1) {
  ThresholdRecord rec{name, expr, 0};
  PositivityThreshold t;
  try {
    t = positivity_threshold(expr, floor);
  } catch (const DomainError& e) {
    throw StageError(name + ": " + e.what());
  }
  rec.threshold = t.threshold;
  if (must_not_exceed >= 0 && t.threshold > must_not_exceed) {
    std::ostringstream os;
    os << name << ": positive only from " << t.threshold
       << ", which exceeds the induction base " << must_not_exceed;
    throw StageError(os.str());
  }
  return rec;
}

// exact sign of  lhs - log(rhs_value)  for the window checks
int compare_log_exact(const LogNumber& lhs, const Rational& rhs_value) {
  return (lhs - LogNumber::log_of(rhs_value)).sign();
}

void note(StageRecord& rec, const std::string& text) {
  rec.notes.push_back(text);
}

}  // namespace

StageRecord verify_ratio_bounds(const PRecursiveSequence& seq,
                                const BoundsSpec& b) {
  if (!b.has_f || !b.has_g)
    throw StageError("ratio-bounds: bounds block must provide f and g");
  StageRecord rec;
  rec.name = "ratio-bounds";
  long base = std::max(b.f.from, b.g.from);

  rec.thresholds.push_back(
      certify_positive("f<g beyond base", b.g_fn - b.f_fn, base));

  if (seq.order() == 1) {
    // r_n = -p0/p1 exactly; both containments are rational positivity
    RationalFunction r = -rf_poly(seq.coeffs()[0]) / rf_poly(seq.coeffs()[1]);
    rec.thresholds.push_back(certify_positive("f<r", r - b.f_fn, base));
    rec.thresholds.push_back(certify_positive("r<g", b.g_fn - r, base));
    rec.certified_from = base;
    note(rec, "order-1 recurrence: ratio is an exact rational function");
    return rec;
  }
  if (seq.order() != 2)
    throw StageError(
        "ratio-bounds: unsupported-order (induction needs a three-term "
        "recurrence; use direct exact checking over a finite range)");

  RationalFunction p0 = rf_poly(seq.coeffs()[0]);
  RationalFunction p1 = rf_poly(seq.coeffs()[1]);
  RationalFunction p2 = rf_poly(seq.coeffs()[2]);

  // phi_n(x) = -(p1 x + p0)/(p2 x) maps r_n to r_{n+1}; it is monotone in x
  // with the sign of p0 p2, provided neither factor vanishes past the base
  Rational mono = (p0 * p2).eval(Rational(base));
  int mono_sign = sign_of(mono);
  if (mono_sign == 0)
    throw StageError("ratio-bounds: p0*p2 vanishes at the induction base");
  rec.thresholds.push_back(certify_positive(
      "monotonicity sign", p0 * p2 * rf_const(mono_sign), base));
  rec.thresholds.push_back(
      certify_positive("lower bound stays positive", b.f_fn, base));

  auto phi = [&](const RationalFunction& x) {
    return -(p1 * x + p0) / (p2 * x);
  };
  RationalFunction f1 = b.f_fn.shift(1), g1 = b.g_fn.shift(1);
  if (mono_sign > 0) {
    rec.thresholds.push_back(certify_positive(
        "induction: phi(f) >= f(n+1)", phi(b.f_fn) - f1, base));
    rec.thresholds.push_back(certify_positive(
        "induction: phi(g) <= g(n+1)", g1 - phi(b.g_fn), base));
  } else {
    rec.thresholds.push_back(certify_positive(
        "induction: phi(f) <= g(n+1)", g1 - phi(b.f_fn), base));
    rec.thresholds.push_back(certify_positive(
        "induction: phi(g) >= f(n+1)", phi(b.g_fn) - f1, base));
  }

  Rational r = seq.ratio(base);
  if (!(b.f_fn.eval(Rational(base)) < r && r < b.g_fn.eval(Rational(base)))) {
    std::ostringstream os;
    os << "ratio-bounds: sandwich violated at the base index " << base;
    throw StageError(os.str());
  }
  rec.window_from = base;
  rec.window_to = base + 1;
  rec.window_method = "exact";
  rec.window_outcomes.emplace_back(base, "holds");
  rec.certified_from = base;
  note(rec, mono_sign > 0 ? "phi increasing" : "phi decreasing");
  return rec;
}

StageRecord verify_value_bounds(const PRecursiveSequence& seq,
                                const BoundsSpec& b,
                                long ratio_certified_from) {
  if (!b.has_s_log || !b.has_S_log || !b.has_f || !b.has_g)
    throw StageError("value-bounds: bounds block must provide s_log, S_log, f, g");
  StageRecord rec;
  rec.name = "value-bounds";
  long from = std::max(b.s_log.from, b.S_log.from);

  LogExpr lower_gap = LogExpr::log_term(rf_const(1), b.f_fn) + b.s_log_fn -
                      b.s_log_fn.shift(Rational(1));
  LogExpr upper_gap = b.S_log_fn.shift(Rational(1)) -
                      LogExpr::log_term(rf_const(1), b.g_fn) - b.S_log_fn;
  DescentProof d_lower, d_upper;
  try {
    d_lower = prove_eventually_positive(lower_gap);
    d_upper = prove_eventually_positive(upper_gap);
  } catch (const Error& e) {
    throw StageError(std::string("value-bounds: induction step: ") + e.what());
  }
  rec.descents.push_back({"s-side induction gap", d_lower});
  rec.descents.push_back({"S-side induction gap", d_upper});

  long induction_from =
      std::max({d_lower.final_threshold, d_upper.final_threshold,
                ratio_certified_from, from});
  rec.window_from = from;
  rec.window_to = induction_from + 1;  // base case included
  rec.window_method = "exact";
  for (long n = rec.window_from; n < rec.window_to; ++n) {
    LogNumber log_a = seq.log_term(n);
    int lo = (log_a - b.s_log_fn.eval_exact(n)).sign();
    int hi = (b.S_log_fn.eval_exact(n) - log_a).sign();
    if (lo <= 0 || hi <= 0) {
      std::ostringstream os;
      os << "value-bounds: base check fails at n = " << n << " ("
         << (lo <= 0 ? "lower" : "upper") << " side)";
      throw StageError(os.str());
    }
    rec.window_outcomes.emplace_back(n, "holds");
  }
  rec.certified_from = from;
  return rec;
}

StageRecord verify_u_bounds(const PRecursiveSequence& seq,
                            const BoundsSpec& b, long inputs_valid_from) {
  if (!(b.has_f && b.has_g && b.has_s_log && b.has_S_log && b.has_fu &&
        b.has_gu))
    throw StageError("u-bounds: bounds block must provide all six bounds");
  StageRecord rec;
  rec.name = "u-bounds";
  long from = std::max(b.fu.from, b.gu.from);

  RationalFunction w2 =
      rf_poly(Polynomial::from_longs({0, -1, 1}));  // n^2 - n
  RationalFunction w1 =
      rf_poly(Polynomial::from_longs({-2, 1, 1}));  // n^2 + n - 2
  RationalFunction w3 = rf_poly(Polynomial::from_longs({0, -1, 0, 1}));
  // w3 = (n-1)n(n+1) = n^3 - n

  LogExpr d1 = LogExpr::log_term(w2, b.f_fn) -
               LogExpr::log_term(w1, b.g_fn.shift(-1)) +
               b.s_log_fn.shift(Rational(-1)).scaled(rf_const(2)) -
               LogExpr::log_term(w3, b.fu_fn);
  LogExpr d2 = LogExpr::log_term(w3, b.gu_fn) -
               LogExpr::log_term(w2, b.g_fn) +
               LogExpr::log_term(w1, b.f_fn.shift(-1)) -
               b.S_log_fn.shift(Rational(-1)).scaled(rf_const(2));
  DescentProof p1, p2;
  try {
    p1 = prove_eventually_positive(d1);
    p2 = prove_eventually_positive(d2);
  } catch (const EventuallyNonpositiveError& e) {
    throw StageError(std::string("u-bounds: sandwich fails eventually: ") +
                     e.what());
  } catch (const Error& e) {
    throw StageError(std::string("u-bounds: descent inconclusive: ") +
                     e.what());
  }
  rec.descents.push_back({"D1 (lower sandwich)", p1});
  rec.descents.push_back({"D2 (upper sandwich)", p2});

  long proven_from = std::max(
      {p1.final_threshold, p2.final_threshold, inputs_valid_from, from});
  rec.window_from = from;
  rec.window_to = proven_from;
  rec.window_method = "exact";
  for (long n = rec.window_from; n < rec.window_to; ++n) {
    LogNumber log_u = seq.log_u_term(n);
    Rational lo_v = b.fu_fn.eval(Rational(n));
    Rational hi_v = b.gu_fn.eval(Rational(n));
    if (sign_of(hi_v) <= 0)
      throw StageError("u-bounds: upper bound not positive inside the window");
    int lo = sign_of(lo_v) <= 0 ? 1 : compare_log_exact(log_u, lo_v) > 0 ? 1
                                                                         : -1;
    int hi = compare_log_exact(log_u, hi_v) < 0 ? 1 : -1;
    if (lo <= 0 || hi <= 0) {
      std::ostringstream os;
      os << "u-bounds: " << (lo <= 0 ? "lower" : "upper")
         << " sandwich fails at n = " << n;
      throw StageError(os.str());
    }
    rec.window_outcomes.emplace_back(n, "holds");
  }
  rec.certified_from = from;
  return rec;
}

std::pair<RationalFunction, RationalFunction> criterion_pq(const BoundsSpec& b,
                                                           Target target) {
  if (!b.has_fu || !b.has_gu)
    throw StageError("criterion: bounds block must provide fu and gu");
  RationalFunction n_frac(Polynomial::from_longs({0, 1}),
                          Polynomial::from_longs({1, 1}));
  if (target == Target::root)
    return {n_frac * b.fu_fn, n_frac * b.gu_fn};
  return {n_frac * b.fu_fn.shift(1) / b.gu_fn,
          n_frac * b.gu_fn.shift(1) / b.fu_fn};
}

StageRecord criterion_higher_turan(const BoundsSpec& b, Target target,
                                   long floor) {
  StageRecord rec;
  rec.name = "criterion";
  auto [p, q] = criterion_pq(b, target);
  RationalFunction p1 = p.shift(1), q1 = q.shift(1);
  struct Pair {
    const char* name;
    RationalFunction x, y;
  } pairs[] = {
      {"t(p_n, p_{n+1})", p, p1},
      {"t(p_n, q_{n+1})", p, q1},
      {"t(q_n, p_{n+1})", q, p1},
      {"t(q_n, q_{n+1})", q, q1},
  };
  long max_threshold = 1;
  for (const Pair& pr : pairs) {
    RationalFunction comp = turan_quartic(pr.x, pr.y);
    ThresholdRecord t;
    try {
      t = certify_positive(pr.name, comp, -1);
    } catch (const StageError& e) {
      throw StageError(std::string("criterion-failure at ") + pr.name + ": " +
                       e.what());
    }
    max_threshold = std::max(max_threshold, t.threshold);
    rec.thresholds.push_back(std::move(t));
  }
  rec.certified_from = std::max(floor, max_threshold);
  return rec;
}

StageRecord criterion_laguerre2(const BoundsSpec& b, Target target,
                                LaguerreMode mode, long floor) {
  StageRecord rec;
  rec.name = "criterion";
  auto [p, q] = criterion_pq(b, target);
  RationalFunction expr;
  std::string name;
  if (target == Target::root || mode == LaguerreMode::conservative) {
    expr = p.shift(-1) * p * p * p.shift(1) - q * rf_const(4) + rf_const(3);
    name = "p_{n-1} p_n^2 p_{n+1} - 4 q_n + 3";
  } else {
    expr = p.shift(-1) * p * q * p.shift(1) - q * rf_const(4) + rf_const(3);
    name = "p_{n-1} p_n q_n p_{n+1} - 4 q_n + 3";
  }
  ThresholdRecord t;
  try {
    t = certify_positive(name, expr, -1);
  } catch (const StageError& e) {
    throw StageError(std::string("criterion-failure: ") + e.what());
  }
  rec.certified_from = std::max(floor, t.threshold);
  rec.thresholds.push_back(std::move(t));
  note(rec, std::string("laguerre2 mode: ") +
                (target == Target::root ? "root (p-form)"
                                        : laguerre_mode_name(mode)));
  return rec;
}

namespace {

void validate_candidate_bounds(const PRecursiveSequence& seq,
                               const BoundsSpec& b) {
  // spot checks: 50 sampled indices beyond each declared_from
  long rb = std::max(b.f.from, b.g.from);
  for (long n = rb; n < rb + 50; ++n) {
    Rational r = seq.ratio(n);
    if (!(b.f_fn.eval(Rational(n)) < r && r < b.g_fn.eval(Rational(n)))) {
      std::ostringstream os;
      os << "candidate bounds: f < r < g fails at sampled n = " << n;
      throw StageError(os.str());
    }
  }
  long vb = std::max(b.s_log.from, b.S_log.from);
  for (long n = vb; n < vb + 50; ++n) {
    LogNumber log_a = seq.log_term(n);
    if ((log_a - b.s_log_fn.eval_exact(n)).sign() <= 0 ||
        (b.S_log_fn.eval_exact(n) - log_a).sign() <= 0) {
      std::ostringstream os;
      os << "candidate bounds: s < a < S fails at sampled n = " << n;
      throw StageError(os.str());
    }
  }
  long ub = std::max(b.fu.from, b.gu.from);
  certify_positive("candidate bounds: fu < gu", b.gu_fn - b.fu_fn, ub);
}

StageRecord run_initial_window(const PRecursiveSequence& seq, Target target,
                               Property property, long start, long to,
                               long precision_cap) {
  StageRecord rec;
  rec.name = "initial-window";
  rec.window_from = start;
  rec.window_to = std::max(start, to);
  rec.window_method = "interval";
  rec.window_precision = precision_cap;
  SequenceValues values = SequenceValues::from_intervals(
      [&seq, target](long n, long prec) {
        return seq.derived_term(target, n, prec);
      });
  for (long n = rec.window_from; n < rec.window_to; ++n) {
    CheckOutcome out = property == Property::higher_turan
                           ? check_higher_turan(values, n, precision_cap)
                           : check_laguerre(values, 2, n, precision_cap);
    rec.window_outcomes.emplace_back(n, check_status_name(out.status));
    if (out.status == CheckStatus::undecided) {
      std::ostringstream os;
      os << "initial window undecided at n = " << n << " (precision cap "
         << precision_cap << " bits)";
      throw InconclusiveError(os.str());
    }
    if (!out.ok()) {
      std::ostringstream os;
      os << "initial window fails at n = " << n;
      throw StageError(os.str());
    }
  }
  rec.certified_from = start;
  return rec;
}

}  // namespace

Certificate certify_property(const SequenceSpec& spec, Target target,
                             Property property, long start, LaguerreMode mode,
                             long precision_cap) {
  if (!spec.bounds)
    throw StageError("certify: spec has no bounds block");
  const BoundsSpec& b = *spec.bounds;
  if (!(b.has_f && b.has_g && b.has_s_log && b.has_S_log && b.has_fu &&
        b.has_gu))
    throw StageError("certify: bounds block must provide f, g, s_log, S_log, "
                     "fu and gu");
  PRecursiveSequence seq = spec.make_sequence();
  validate_candidate_bounds(seq, b);

  Certificate cert;
  cert.sequence = spec.name;
  cert.target = target;
  cert.property = property;
  cert.mode = mode;
  cert.start = start;

  StageRecord ratio = verify_ratio_bounds(seq, b);
  StageRecord value = verify_value_bounds(seq, b, ratio.certified_from);
  long inputs_valid_from =
      std::max(ratio.certified_from, value.certified_from) + 1;
  StageRecord ubounds = verify_u_bounds(seq, b, inputs_valid_from);
  StageRecord criterion =
      property == Property::higher_turan
          ? criterion_higher_turan(b, target, ubounds.certified_from)
          : criterion_laguerre2(b, target, mode, ubounds.certified_from);

  cert.initial_window = run_initial_window(
      seq, target, property, start, criterion.certified_from, precision_cap);

  cert.stages = {std::move(ratio), std::move(value), std::move(ubounds),
                 std::move(criterion)};
  cert.overall_from = start;
  return cert;
}

namespace {

nlohmann::json json_of(const PositivityThreshold& t) {
  return {{"threshold", std::to_string(t.threshold)},
          {"witness", t.witness},
          {"checked_floor", std::to_string(t.checked_floor)}};
}

nlohmann::json json_of(const DescentProof& p) {
  nlohmann::json chain = nlohmann::json::array();
  for (const DescentStep& s : p.chain) {
    chain.push_back({{"order", std::to_string(s.order)},
                     {"rule", s.rule},
                     {"sign", std::to_string(s.sign)},
                     {"threshold", std::to_string(s.threshold)},
                     {"limit", AsymptoticClass::kind_name(s.limit.kind)}});
  }
  return {{"order", std::to_string(p.order)},
          {"rational_tail", p.rational_tail.to_string()},
          {"tail_threshold", json_of(p.tail_threshold)},
          {"tail_sign", std::to_string(p.tail_sign)},
          {"chain", chain},
          {"final_threshold", std::to_string(p.final_threshold)}};
}

nlohmann::json json_of(const StageRecord& rec) {
  nlohmann::json thresholds = nlohmann::json::array();
  for (const ThresholdRecord& t : rec.thresholds)
    thresholds.push_back({{"name", t.name},
                          {"expr", t.expr.to_string()},
                          {"threshold", std::to_string(t.threshold)}});
  nlohmann::json descents = nlohmann::json::array();
  for (const DescentRecord& d : rec.descents)
    descents.push_back({{"name", d.name}, {"proof", json_of(d.proof)}});
  nlohmann::json window = nlohmann::json::array();
  for (const auto& [index, status] : rec.window_outcomes)
    window.push_back({{"index", std::to_string(index)}, {"status", status}});
  return {{"name", rec.name},
          {"certified_from", std::to_string(rec.certified_from)},
          {"thresholds", thresholds},
          {"descents", descents},
          {"window",
           {{"from", std::to_string(rec.window_from)},
            {"to", std::to_string(rec.window_to)},
            {"method", rec.window_method},
            {"precision", std::to_string(rec.window_precision)},
            {"outcomes", window}}},
          {"notes", rec.notes}};
}

}  // namespace

nlohmann::json certificate_to_json(const Certificate& cert) {
  nlohmann::json stages = nlohmann::json::array();
  for (const StageRecord& s : cert.stages) stages.push_back(json_of(s));
  return {{"schema", "turancert/1"},
          {"sequence", cert.sequence},
          {"target", target_name(cert.target)},
          {"property", property_name(cert.property)},
          {"mode", laguerre_mode_name(cert.mode)},
          {"start", std::to_string(cert.start)},
          {"stages", stages},
          {"initial_window", json_of(cert.initial_window)},
          {"overall_from", std::to_string(cert.overall_from)}};
}

namespace {

void diff_json(const nlohmann::json& expected, const nlohmann::json& got,
               const std::string& path, std::vector<std::string>& out) {
  if (out.size() >= 20) return;
  if (expected == got) return;
  if (expected.type() != got.type() || !(expected.is_object() ||
                                         expected.is_array())) {
    out.push_back(path + ": expected " + expected.dump() + ", certificate has " +
                  got.dump());
    return;
  }
  if (expected.is_object()) {
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      if (!got.contains(it.key()))
        out.push_back(path + "." + it.key() + ": missing");
      else
        diff_json(it.value(), got.at(it.key()), path + "." + it.key(), out);
    }
    for (auto it = got.begin(); it != got.end(); ++it)
      if (!expected.contains(it.key()))
        out.push_back(path + "." + it.key() + ": unexpected field");
    return;
  }
  if (expected.size() != got.size()) {
    out.push_back(path + ": length " + std::to_string(got.size()) +
                  " differs from recomputed " +
                  std::to_string(expected.size()));
    return;
  }
  for (size_t i = 0; i < expected.size(); ++i)
    diff_json(expected[i], got[i], path + "[" + std::to_string(i) + "]", out);
}

}  // namespace

ReverifyReport reverify(const nlohmann::json& cert, const SequenceSpec& spec) {
  ReverifyReport report;
  if (cert.value("schema", "") != "turancert/1") {
    report.failures.push_back("schema: expected \"turancert/1\"");
    return report;
  }
  if (cert.value("sequence", "") != spec.name) {
    report.failures.push_back("sequence: certificate is for \"" +
                              cert.value("sequence", "") +
                              "\", spec is \"" + spec.name + "\"");
    return report;
  }
  Target target;
  Property property;
  LaguerreMode mode;
  long start;
  try {
    std::string t = cert.at("target").get<std::string>();
    if (t == "root")
      target = Target::root;
    else if (t == "ratio")
      target = Target::ratio;
    else
      throw ParseError("unknown target: " + t);
    property = parse_property(cert.at("property").get<std::string>());
    mode = parse_laguerre_mode(cert.at("mode").get<std::string>());
    start = std::stol(cert.at("start").get<std::string>());
  } catch (const std::exception& e) {
    report.failures.push_back(std::string("certificate header: ") + e.what());
    return report;
  }
  nlohmann::json fresh;
  try {
    fresh = certificate_to_json(
        certify_property(spec, target, property, start, mode));
  } catch (const Error& e) {
    report.failures.push_back(std::string("re-run failed: ") + e.what());
    return report;
  }
  diff_json(fresh, cert, "$", report.failures);
  report.ok = report.failures.empty();
  return report;
}

}  // namespace turancert
