#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "profile.hpp"

namespace adams {

using Json = nlohmann::ordered_json;

/// Serializes with every floating-point number printed to 17 significant
/// digits; non-finite numbers become null. Output ends without a newline.
std::string dump_json(const Json& value, int indent = 2);

/// Array of {knot, value, piece_kind, params}; a bounded profile ends with a
/// {"piece_kind": "end"} element at its right endpoint. Mapped pieces throw
/// InvalidArgument.
Json profile_to_json(const PiecewiseProfile& profile);
PiecewiseProfile profile_from_json(const Json& array);

}  // namespace adams
