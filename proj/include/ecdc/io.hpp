#pragma once

#include <string>

#include <json.hpp>

#include "ecdc/cconj.hpp"
#include "ecdc/dc_duality.hpp"
#include "ecdc/dualsets.hpp"

namespace ecdc {

using Json = nlohmann::json;

// Extended reals are numbers or the strings "+inf" / "-inf". Parsing errors
// of any kind surface as Error(kValidation) naming the offending field.

Json to_json(const ExtReal& v);
ExtReal extreal_from_json(const Json& j, const std::string& field);

Json to_json(const Interval& set);
Interval interval_from_json(const Json& j, const std::string& field);

Json to_json(const PiecewiseFunction& f);
PiecewiseFunction function_from_json(const Json& j, const std::string& field);

Json to_json(const DCInstance& inst);
/// Parses and validates (convexity, dom f inside dom g, A nonempty).
DCInstance instance_from_json(const Json& j);
DCInstance load_instance(const std::string& path);

Json to_json(const SearchConfig& cfg);
SearchConfig search_config_from_json(const Json& j);

Json to_json(const ValueReport& r);
Json to_json(const SliceRay& r);
Json to_json(const PropertyVerdict& v);
Json to_json(const TheoremVerdict& v);
Json to_json(const SeparationReport& r);

}  // namespace ecdc
