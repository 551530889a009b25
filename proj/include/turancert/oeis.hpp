#pragma once

#include <string>
#include <utility>
#include <vector>

#include "turancert/rational.hpp"
#include "turancert/sequence.hpp"

namespace turancert {

class OeisError : public Error {
 public:
  explicit OeisError(const std::string& what) : Error(what) {}
};

enum class BFileSource { local, cache, network };

const char* bfile_source_name(BFileSource s);

// One OEIS b-file: exact (index, value) pairs with strictly increasing
// indices.
struct BFile {
  std::string oeis_id;
  std::vector<std::pair<long, Integer>> entries;
  BFileSource source = BFileSource::local;
};

// Parses "index value" lines; '#' comment lines and blank lines are skipped.
// Malformed lines and non-monotone indices raise OeisError naming the line.
BFile parse_bfile(const std::string& text);

// Inverse of parse_bfile on the entry list.
std::string serialize_bfile(const BFile& b);

struct CrossValidation {
  struct Mismatch {
    long index = 0;
    Rational expected;  // recurrence-computed value
    Integer actual;     // b-file value
  };
  long confirmed = 0;  // shared indices that agree exactly
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Compares exact recurrence terms against b-file entries on the shared index
// range, up to and including `limit`. Mismatches are report content, not
// errors.
CrossValidation cross_validate(const PRecursiveSequence& seq, const BFile& b,
                               long limit);

// Resolves the cache directory: TURANCERT_CACHE_DIR if set, otherwise
// $XDG_CACHE_HOME/turancert or ~/.cache/turancert.
std::string cache_directory();

// Returns the b-file for an id like "A001181". Serves from the cache when
// possible; otherwise downloads from oeis.org (if allowed) and caches the
// result. Offline with a cold cache raises OeisError naming the cache miss.
BFile fetch_bfile(const std::string& oeis_id, bool allow_network = true);

}  // namespace turancert
