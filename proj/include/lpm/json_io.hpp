#pragma once

#include <json.hpp>

#include "lpm/ehrhart.hpp"
#include "lpm/polynomial.hpp"
#include "lpm/shapes.hpp"

namespace lpm {

// Stable field order everywhere: fixtures are diffed byte-for-byte.
using Json = nlohmann::ordered_json;

Json shape_json(const SkewShape& s);          // {"lambda":[...],"mu":[...]}
Json polynomial_json(const Polynomial& p);    // {"coeffs":["c0","c1",...]} ascending
Json report_json(const EhrhartReport& r);

}  // namespace lpm
