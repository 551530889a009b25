#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "turancert/inequality.hpp"
#include "turancert/logexpr.hpp"
#include "turancert/specio.hpp"

namespace turancert {

enum class Property { higher_turan, laguerre2 };
enum class LaguerreMode { paper, conservative };

const char* property_name(Property p);
const char* laguerre_mode_name(LaguerreMode m);
Property parse_property(const std::string& s);
LaguerreMode parse_laguerre_mode(const std::string& s);

class StageError : public Error {
 public:
  explicit StageError(const std::string& what) : Error(what) {}
};

struct ThresholdRecord {
  std::string name;
  RationalFunction expr;
  long threshold = 0;
};

struct DescentRecord {
  std::string name;
  DescentProof proof;
};

struct StageRecord {
  std::string name;
  long certified_from = 0;
  std::vector<ThresholdRecord> thresholds;
  std::vector<DescentRecord> descents;
  // pointwise-checked index range [window_from, window_to)
  long window_from = 0, window_to = 0;
  std::string window_method;
  long window_precision = 0;
  std::vector<std::pair<long, std::string>> window_outcomes;
  std::vector<std::string> notes;
};

struct Certificate {
  std::string sequence;
  Target target = Target::root;
  Property property = Property::higher_turan;
  LaguerreMode mode = LaguerreMode::conservative;
  long start = 0;
  std::vector<StageRecord> stages;
  StageRecord initial_window;
  long overall_from = 0;
};

// stage 1: f(n) < a_{n+1}/a_n < g(n) for n >= max declared_from, by exact
// base check plus fractional-linear induction on the three-term recurrence
StageRecord verify_ratio_bounds(const PRecursiveSequence& seq,
                                const BoundsSpec& bounds);

// stage 2: s_n < a_n < S_n by descent on the log induction gaps plus an
// exact window down to the bounds' declared_from
StageRecord verify_value_bounds(const PRecursiveSequence& seq,
                                const BoundsSpec& bounds,
                                long ratio_certified_from);

// stage 3: the u_n sandwich via the two descent expressions built from the
// certified ratio/value bounds, plus an exact window
StageRecord verify_u_bounds(const PRecursiveSequence& seq,
                            const BoundsSpec& bounds,
                            long inputs_valid_from);

// p/q construction fed to the criteria (root or ratio flavour)
std::pair<RationalFunction, RationalFunction> criterion_pq(
    const BoundsSpec& bounds, Target target);

StageRecord criterion_higher_turan(const BoundsSpec& bounds, Target target,
                                   long floor);
StageRecord criterion_laguerre2(const BoundsSpec& bounds, Target target,
                                LaguerreMode mode, long floor);

Certificate certify_property(const SequenceSpec& spec, Target target,
                             Property property, long start,
                             LaguerreMode mode = LaguerreMode::conservative,
                             long precision_cap = kDefaultPrecisionCap);

nlohmann::json certificate_to_json(const Certificate& cert);

struct ReverifyReport {
  bool ok = false;
  std::vector<std::string> failures;
};

// re-runs the whole pipeline from the spec and compares the result
// field-by-field against the presented certificate
ReverifyReport reverify(const nlohmann::json& cert, const SequenceSpec& spec);

}  // namespace turancert
