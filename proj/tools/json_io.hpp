#pragma once

#include <json.hpp>

#include "aa/oracle.hpp"
#include "aa/regions.hpp"
#include "aa/theorems.hpp"

namespace aa::cli {

using Json = nlohmann::ordered_json;

/// {"rational": "p/q"} or {"sqrtsum": ["a", "b"]}, plus an advisory decimal.
Json to_json(const Endpoint& e);
/// [lo, hi]
Json to_json(const Interval& iv);
/// [[lo, hi], ...]
Json to_json(const IntervalUnion& u);
Json to_json(const TraceEntry& e);
Json to_json(const Trace& t);
Json to_json(const Verdict& v);
Json to_json(const CorollaryReport& r);
Json to_json(const PointClass& pc);
Json to_json(const DensityResult& d);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace aa::cli
