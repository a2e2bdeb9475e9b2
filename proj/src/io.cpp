#include "bslope/io.hpp"

#include <fstream>
#include <sstream>

namespace bslope {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<DegenerationIndex> parse_index_file(std::string_view text) {
  std::vector<DegenerationIndex> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    size_t b = line.find_last_not_of(" \t\r");
    out.push_back(parse_index(std::string_view(line).substr(a, b - a + 1)));
  }
  return out;
}

json bigint_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<int64_t>::min();
  static const BigInt hi = std::numeric_limits<int64_t>::max();
  if (v >= lo && v <= hi) return json(int64_t(v));
  return json(v.str());
}

json vector_to_json(const std::vector<BigInt>& v) {
  json arr = json::array();
  for (const BigInt& x : v) arr.push_back(bigint_to_json(x));
  return arr;
}

json slope_result_to_json(const SlopeResult& r) {
  json j;
  json idx = json::array();
  for (IndexValue v : r.index) idx.push_back(std::string(1, "01i"[int(v)]));
  j["index"] = std::move(idx);
  j["d"] = vector_to_json(r.d);
  j["c"] = bigint_to_json(r.content);
  j["v_mu"] = bigint_to_json(r.v_mu);
  j["v_lambda"] = bigint_to_json(r.v_lambda);
  if (r.slope)
    j["slope"] = r.slope->str();
  else
    j["slope"] = nullptr;
  return j;
}

json search_report_to_json(const SearchReport& rep) {
  json j;
  json certified = json::array();
  for (const SlopeResult& r : rep.certified) certified.push_back(slope_result_to_json(r));
  j["certified"] = std::move(certified);
  j["scanned"] = rep.scanned;
  json slopes = json::array();
  for (const Slope& s : rep.distinct_slopes) slopes.push_back(s.str());
  j["distinct_slopes"] = std::move(slopes);
  if (rep.resume_token) j["resume_token"] = *rep.resume_token;
  return j;
}

}  // namespace bslope
