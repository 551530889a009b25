// turancert: certify Turán-type and Laguerre inequalities for sequences
// derived from P-recursive recurrences.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "turancert/certify.hpp"
#include "turancert/inequality.hpp"
#include "turancert/oeis.hpp"
#include "turancert/specio.hpp"

namespace {

using namespace turancert;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitInput = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write to " + out_path);
  out << text;
}

SequenceValues derived_values(const PRecursiveSequence& seq, Target target) {
  return SequenceValues::from_intervals(
      [&seq, target](long n, long prec) {
        return seq.derived_term(target, n, prec);
      });
}

int cmd_terms(const std::string& spec_path, long from, long to,
              bool with_ratios, bool as_json, const std::string& out_path) {
  SequenceSpec spec = load_spec_file(spec_path);
  PRecursiveSequence seq = spec.make_sequence();
  if (from < seq.start_index()) from = seq.start_index();
  if (as_json) {
    nlohmann::json rows = nlohmann::json::array();
    for (long n = from; n <= to; ++n) {
      nlohmann::json row = {{"n", std::to_string(n)},
                            {"a", to_string(seq.term(n))}};
      if (with_ratios && seq.term(n) != 0)
        row["r"] = to_string(seq.ratio(n));
      rows.push_back(row);
    }
    nlohmann::json doc = {{"sequence", spec.name}, {"terms", rows}};
    emit(doc.dump(2), out_path);
    return kExitHolds;
  }
  std::ostringstream table;
  for (long n = from; n <= to; ++n) {
    table << n << '\t' << seq.term(n);
    if (with_ratios && seq.term(n) != 0) table << '\t' << seq.ratio(n);
    table << '\n';
  }
  emit(table.str(), out_path);
  return kExitHolds;
}

CheckOutcome run_one_check(const SequenceValues& values, Property property,
                           int laguerre_m, long n, long precision) {
  if (property == Property::higher_turan)
    return check_higher_turan(values, n, precision);
  return check_laguerre(values, laguerre_m, n, precision);
}

int cmd_check(const std::string& spec_path, Target target, Property property,
              int laguerre_m, long from, long to, long precision, bool raw,
              bool as_json, const std::string& out_path) {
  SequenceSpec spec = load_spec_file(spec_path);
  PRecursiveSequence seq = spec.make_sequence();
  SequenceValues values =
      raw ? SequenceValues::from_exact(
                [&seq](long n) -> Rational { return seq.term(n); })
          : derived_values(seq, target);
  bool any_fails = false, any_undecided = false;
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream table;
  for (long n = from; n <= to; ++n) {
    CheckOutcome out = run_one_check(values, property, laguerre_m, n,
                                     precision);
    any_fails |= out.status == CheckStatus::fails;
    any_undecided |= out.status == CheckStatus::undecided;
    if (as_json) {
      rows.push_back({{"n", std::to_string(n)},
                      {"status", check_status_name(out.status)}});
    } else {
      table << n << '\t' << check_status_name(out.status) << '\n';
    }
  }
  if (as_json) {
    nlohmann::json doc = {{"sequence", spec.name},
                          {"target", target_name(target)},
                          {"property", property_name(property)},
                          {"outcomes", rows}};
    emit(doc.dump(2), out_path);
  } else {
    emit(table.str(), out_path);
  }
  if (any_fails) return kExitFails;
  if (any_undecided) return kExitUndecided;
  return kExitHolds;
}

int cmd_certify(const std::string& spec_path, Target target, Property property,
                long start, LaguerreMode mode, long precision,
                const std::string& out_path) {
  SequenceSpec spec = load_spec_file(spec_path);
  try {
    Certificate cert =
        certify_property(spec, target, property, start, mode, precision);
    emit(certificate_to_json(cert).dump(2), out_path);
    return kExitHolds;
  } catch (const InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kExitUndecided;
  } catch (const Error& e) {
    std::cerr << "certification failed: " << e.what() << '\n';
    return kExitFails;
  }
}

int cmd_verify_cert(const std::string& cert_path,
                    const std::string& spec_path) {
  std::ifstream in(cert_path, std::ios::binary);
  if (!in) throw Error("cannot read " + cert_path);
  nlohmann::json cert = nlohmann::json::parse(in);
  SequenceSpec spec = load_spec_file(spec_path);
  ReverifyReport report = reverify(cert, spec);
  if (report.ok) {
    std::cout << "certificate verified against " << spec_path << '\n';
    return kExitHolds;
  }
  for (const std::string& f : report.failures) std::cerr << f << '\n';
  return kExitFails;
}

int cmd_oeis_check(const std::string& spec_path, const std::string& bfile_path,
                   long limit, bool allow_network) {
  SequenceSpec spec = load_spec_file(spec_path);
  PRecursiveSequence seq = spec.make_sequence();
  BFile b;
  if (!bfile_path.empty()) {
    std::ifstream in(bfile_path, std::ios::binary);
    if (!in) throw Error("cannot read " + bfile_path);
    std::ostringstream text;
    text << in.rdbuf();
    b = parse_bfile(text.str());
    b.oeis_id = spec.oeis_id;
  } else {
    if (spec.oeis_id.empty())
      throw Error("spec has no oeis_id; pass --bfile instead");
    b = fetch_bfile(spec.oeis_id, allow_network);
  }
  CrossValidation report = cross_validate(seq, b, limit);
  std::cout << spec.name << ": " << report.confirmed << " confirmed, "
            << report.mismatches.size() << " mismatched (source "
            << bfile_source_name(b.source) << ")\n";
  for (const auto& m : report.mismatches)
    std::cout << "  n=" << m.index << " computed " << m.expected
              << " but b-file has " << m.actual << '\n';
  return report.ok() ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certify Turán/Laguerre inequalities for P-recursive sequences"};
  app.require_subcommand(1);

  std::string spec_path, cert_path, bfile_path, out_path;
  std::string target_s = "root", property_s = "hot", mode_s = "conservative";
  long from = 0, to = 0, start = 2, precision = kDefaultPrecisionCap;
  long limit = 1000;
  int laguerre_m = 2;
  bool as_json = false, with_ratios = false, allow_network = false;
  bool raw = false;

  auto* terms = app.add_subcommand("terms", "print exact terms a_n");
  terms->add_option("--spec", spec_path)->required();
  terms->add_option("--from", from)->required();
  terms->add_option("--to", to)->required();
  terms->add_flag("--ratios", with_ratios, "also print r_n = a_{n+1}/a_n");
  terms->add_flag("--json", as_json);
  terms->add_option("--out", out_path);

  auto* check = app.add_subcommand(
      "check", "verify the inequality directly on an index range");
  check->add_option("--spec", spec_path)->required();
  check->add_option("--target", target_s)->check(CLI::IsMember({"root", "ratio"}));
  check->add_option("--property", property_s)
      ->check(CLI::IsMember({"hot", "higher_turan", "laguerre2"}));
  check->add_option("--laguerre-m", laguerre_m, "Laguerre order for ad-hoc checks");
  check->add_option("--from", from)->required();
  check->add_option("--to", to)->required();
  check->add_option("--precision", precision);
  check->add_flag("--raw", raw, "check the terms a_n themselves");
  check->add_flag("--json", as_json);
  check->add_option("--out", out_path);

  auto* certify = app.add_subcommand(
      "certify", "run the staged certification pipeline");
  certify->add_option("--spec", spec_path)->required();
  certify->add_option("--target", target_s)->check(CLI::IsMember({"root", "ratio"}));
  certify->add_option("--property", property_s)
      ->check(CLI::IsMember({"hot", "higher_turan", "laguerre2"}));
  certify->add_option("--from", start, "start index the certificate covers");
  certify->add_option("--mode", mode_s)
      ->check(CLI::IsMember({"paper", "conservative"}));
  certify->add_option("--precision", precision);
  certify->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify-cert",
                                    "recompute and compare a certificate");
  verify->add_option("--cert", cert_path)->required();
  verify->add_option("--spec", spec_path)->required();

  auto* oeis = app.add_subcommand("oeis-check",
                                  "cross-validate terms against a b-file");
  oeis->add_option("--spec", spec_path)->required();
  oeis->add_option("--bfile", bfile_path, "local b-file path");
  oeis->add_option("--limit", limit);
  oeis->add_flag("--network", allow_network,
                 "permit downloading a missing b-file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;  // keep 0 for --help
  }

  try {
    if (*terms) return cmd_terms(spec_path, from, to, with_ratios, as_json,
                                 out_path);
    if (*check)
      return cmd_check(spec_path, parse_target(target_s),
                       parse_property(property_s), laguerre_m, from, to,
                       precision, raw, as_json, out_path);
    if (*certify)
      return cmd_certify(spec_path, parse_target(target_s),
                         parse_property(property_s), start,
                         parse_laguerre_mode(mode_s), precision, out_path);
    if (*verify) return cmd_verify_cert(cert_path, spec_path);
    if (*oeis) return cmd_oeis_check(spec_path, bfile_path, limit,
                                     allow_network);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
