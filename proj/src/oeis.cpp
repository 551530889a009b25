#include "turancert/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "httplib.h"

namespace turancert {

const char* bfile_source_name(BFileSource s) {
  switch (s) {
    case BFileSource::local: return "local";
    case BFileSource::cache: return "cache";
    case BFileSource::network: return "network";
  }
  return "unknown";
}

BFile parse_bfile(const std::string& text) {
  BFile b;
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  bool have_prev = false;
  long prev = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream fields(line);
    long index;
    std::string value_text, extra;
    if (!(fields >> index >> value_text) || (fields >> extra)) {
      throw OeisError("b-file line " + std::to_string(line_no) +
                      ": expected \"index value\", got \"" + line + "\"");
    }
    Integer value;
    if (value.set_str(value_text, 10) != 0)
      throw OeisError("b-file line " + std::to_string(line_no) +
                      ": not an integer: \"" + value_text + "\"");
    if (have_prev && index <= prev)
      throw OeisError("b-file line " + std::to_string(line_no) +
                      ": index " + std::to_string(index) +
                      " does not increase past " + std::to_string(prev));
    prev = index;
    have_prev = true;
    b.entries.emplace_back(index, std::move(value));
  }
  return b;
}

std::string serialize_bfile(const BFile& b) {
  std::ostringstream out;
  for (const auto& [index, value] : b.entries)
    out << index << ' ' << value.get_str() << '\n';
  return out.str();
}

CrossValidation cross_validate(const PRecursiveSequence& seq, const BFile& b,
                               long limit) {
  CrossValidation report;
  for (const auto& [index, value] : b.entries) {
    if (index < seq.start_index() || index > limit) continue;
    Rational expected = seq.term(index);
    if (expected == Rational(value)) {
      ++report.confirmed;
    } else {
      report.mismatches.push_back({index, expected, value});
    }
  }
  return report;
}

std::string cache_directory() {
  if (const char* dir = std::getenv("TURANCERT_CACHE_DIR"); dir && *dir)
    return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::string(xdg) + "/turancert";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::string(home) + "/.cache/turancert";
  return ".turancert-cache";
}

namespace {

bool valid_oeis_id(const std::string& id) {
  if (id.size() < 7 || id[0] != 'A') return false;
  for (size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  return true;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

BFile fetch_bfile(const std::string& oeis_id, bool allow_network) {
  if (!valid_oeis_id(oeis_id))
    throw OeisError("invalid OEIS id \"" + oeis_id +
                    "\": expected 'A' followed by at least six digits");
  std::filesystem::path cache_dir = cache_directory();
  std::filesystem::path cached = cache_dir / (oeis_id + ".txt");
  if (std::filesystem::exists(cached)) {
    BFile b = parse_bfile(read_file(cached));
    b.oeis_id = oeis_id;
    b.source = BFileSource::cache;
    return b;
  }
  if (!allow_network)
    throw OeisError("cache miss for " + oeis_id + " under " +
                    cache_dir.string() + " and network access is disabled");
  // b-file path: /A001181/b001181.txt
  std::string bname = "b" + oeis_id.substr(1) + ".txt";
  httplib::Client client("http://oeis.org");
  client.set_follow_location(true);
  auto res = client.Get("/" + oeis_id + "/" + bname);
  if (!res || res->status != 200)
    throw OeisError("cache miss for " + oeis_id + " under " +
                    cache_dir.string() + " and the download failed (" +
                    (res ? "HTTP " + std::to_string(res->status)
                         : httplib::to_string(res.error())) +
                    ")");
  BFile b = parse_bfile(res->body);
  b.oeis_id = oeis_id;
  b.source = BFileSource::network;
  std::filesystem::create_directories(cache_dir);
  std::ofstream(cached, std::ios::binary) << res->body;
  return b;
}

}  // namespace turancert
