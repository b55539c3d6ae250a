#pragma once

#include <string>

#include <json.hpp>

#include "qtorus/represent.hpp"

namespace qtorus {

using Json = nlohmann::json;

// Element format:
// {"d": int, "theta": [[j, k, value], ...] for 0 <= j < k < d,
//  "coeffs": [{"m": [...], "re": x, "im": y}, ...]}
// Round trips are bit exact for finite doubles.
Json theta_to_json(const Theta& theta);              // the upper-triangle triplets
Theta theta_from_upper_json(int d, const Json& upper);

Json element_to_json(const QtElement& x);
QtElement element_from_json(const Json& j);

// debugging export: row-major [re, im] pairs
Json rep_to_json(const TruncatedRep& A);

// FNV-1a of the canonical element serialization
std::string element_hash(const QtElement& x);

std::string format_double17(double v);  // 17 significant digits, CSV format

}  // namespace qtorus
