#pragma once

#include <string>

#include "json.hpp"

#include "bslope/peripheral.hpp"
#include "bslope/search.hpp"

namespace bslope {

using json = nlohmann::json;

std::string read_file(const std::string& path);

// One degeneration index per line, characters in {0,1,i}.
std::vector<DegenerationIndex> parse_index_file(std::string_view text);

// BigInt -> JSON number when it fits in 64 bits, decimal string otherwise.
json bigint_to_json(const BigInt& v);
json vector_to_json(const std::vector<BigInt>& v);

json slope_result_to_json(const SlopeResult& r);
json search_report_to_json(const SearchReport& rep);

}  // namespace bslope
