#pragma once

// Canonical JSON interchange. A LaurentPoly is a list of
// [exponent-vector, "coefficient"] pairs in graded-lex order; a RatFunc is
// {"num": ..., "den": ...} with both sides fully expanded.

#include <json.hpp>

#include "laumon/symbolic.hpp"

namespace laumon {

using Json = nlohmann::ordered_json;

Json to_json(const sym::LaurentPoly& p, const sym::VarSpace& vs);
Json to_json(const sym::RatFunc& r, const sym::VarSpace& vs);

sym::LaurentPoly poly_from_json(const Json& j, const sym::VarSpace& vs);
sym::RatFunc ratfunc_from_json(const Json& j, const sym::VarSpace& vs);

/// Compact single-line dump with a stable key order.
std::string dump_line(const Json& j);

}  // namespace laumon
