#pragma once

#include <string>

#include <json.hpp>

#include "conred/classify.hpp"
#include "conred/geometry.hpp"
#include "conred/rep.hpp"
#include "conred/verify.hpp"

namespace conred::io {

// Output order is fixed, so identical invocations produce identical bytes.
using json = nlohmann::ordered_json;

RepDescriptor descriptor_from_json(const json& j);
RepDescriptor load_descriptor(const std::string& path);
json descriptor_to_json(const RepDescriptor& rep);

json rational_to_json(const Rational& q);
json polygon_to_json(const Polygon2& poly);
json index_pairs_to_json(const std::vector<IndexPair>& idx);
json rays_to_json(const CriticalRaySet& rays, const std::vector<Wedge>& wedges);
json verdict_to_json(const TransversalityReport& report);
json variety_to_json(const VarietyDescriptor& v);
json wps_to_json(const PlainWPS& w);
json report_to_json(const PropertyReport& r);
json error_to_json(const Error& e);

} // namespace conred::io
