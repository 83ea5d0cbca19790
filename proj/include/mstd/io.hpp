#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "mstd/constructions.hpp"
#include "mstd/counting.hpp"
#include "mstd/group_lattice.hpp"
#include "mstd/int_set.hpp"
#include "mstd/search.hpp"

namespace mstd::io {

using nlohmann::json;

// IntSet: {"elements":[...ascending...]} or space-separated ascending text.
// Both reject duplicates and non-monotone input with ParseError.
IntSet int_set_from_json(const json& j);
json to_json(const IntSet& s);
IntSet parse_int_set_text(std::string_view text);
std::string format_int_set_text(const IntSet& s);

// GroupSubset: {"moduli":[m1,...,md], "elements":[[r1,...,rd],...]}.
GroupSubset group_subset_from_json(const json& j);
json to_json(const GroupSubset& a);

// Gap: {"base":a, "dims":[{"step":m,"offset":l,"length":k},...]}; "dims"
// may be omitted and "offset" defaults to 0.
Gap gap_from_json(const json& j);
json to_json(const Gap& g);

json to_json(const MstdDelta& d);
json to_json(const CountReport& r, bool include_table);
json to_json(const SearchReport& r);

/// Header `delta,count,witness`; witness is space-separated.
std::string to_csv(const SearchReport& r);

}  // namespace mstd::io
