#include "conred/io.hpp"

#include <fstream>

namespace conred::io {

RepDescriptor descriptor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("summands") || !j["summands"].is_array())
        raise(errc::malformed_input, "descriptor JSON must be {\"summands\": [{\"l\": int, \"k\": uint}, ...]}");
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    for (const auto& s : j["summands"]) {
        if (!s.is_object() || !s.contains("l") || !s.contains("k") || !s["l"].is_number_integer() ||
            !s["k"].is_number_integer())
            raise(errc::malformed_input, "each summand must carry integer fields l and k");
        raw.emplace_back(s["l"].get<std::int64_t>(), s["k"].get<std::int64_t>());
    }
    return RepDescriptor::validate(raw);
}

RepDescriptor load_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(errc::malformed_input, "cannot open descriptor file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        raise(errc::malformed_input, std::string("descriptor JSON parse error: ") + e.what());
    }
    return descriptor_from_json(j);
}

json descriptor_to_json(const RepDescriptor& rep) {
    json arr = json::array();
    for (const Summand& s : rep.summands())
        arr.push_back(json{{"l", s.l}, {"k", s.k}});
    return json{{"summands", std::move(arr)}};
}

json rational_to_json(const Rational& q) { return json{{"num", q.num}, {"den", q.den}}; }

json polygon_to_json(const Polygon2& poly) {
    json verts = json::array();
    for (const RatPoint& v : poly.vertices)
        verts.push_back(json{{"x", rational_to_json(v.x)}, {"y", rational_to_json(v.y)}});
    return json{{"vertices", std::move(verts)}};
}

json index_pairs_to_json(const std::vector<IndexPair>& idx) {
    json arr = json::array();
    for (const IndexPair& p : idx)
        arr.push_back(json::array({p.a, p.j}));
    return arr;
}

json rays_to_json(const CriticalRaySet& rays, const std::vector<Wedge>& wedges) {
    json jr = json::array();
    for (const CriticalRay& r : rays)
        jr.push_back(json{{"dir", json::array({r.dir.x, r.dir.y})}, {"witnesses", index_pairs_to_json(r.witnesses)}});
    json jw = json::array();
    for (const Wedge& w : wedges)
        jw.push_back(json{{"lo", json::array({w.lo.x, w.lo.y})}, {"hi", json::array({w.hi.x, w.hi.y})}});
    return json{{"rays", std::move(jr)}, {"wedges", std::move(jw)}};
}

json verdict_to_json(const TransversalityReport& report) {
    const char* name = report.verdict == Verdict::transverse    ? "transverse"
                       : report.verdict == Verdict::critical    ? "critical"
                                                                : "misses_image";
    json j{{"verdict", name}};
    if (report.verdict == Verdict::critical)
        j["witnesses"] = index_pairs_to_json(report.witnesses);
    return j;
}

json wps_to_json(const PlainWPS& w) {
    return json{{"kind", "wps"}, {"weights", w.weights}, {"raw_weights", w.raw_weights}};
}

json variety_to_json(const VarietyDescriptor& v) {
    if (const auto* w = std::get_if<PlainWPS>(&v))
        return wps_to_json(*w);
    const auto& s = std::get<SegreQuotient>(v);
    return json{{"kind", "segre"}, {"a", s.a},         {"b", s.b},
                {"c", s.c},        {"d", s.d},         {"generators", s.generators},
                {"complex_dim", s.complex_dim}};
}

json report_to_json(const PropertyReport& r) {
    json j{{"property", r.property}, {"pass", r.pass}, {"samples", r.samples}, {"max_residual", r.max_residual}};
    if (!r.witness.empty())
        j["witness"] = r.witness;
    if (!r.error.empty())
        j["error"] = r.error;
    return j;
}

json error_to_json(const Error& e) {
    json j{{"error", json{{"code", errc_name(e.code())}, {"message", e.what()}}}};
    if (!e.witnesses().empty())
        j["error"]["witnesses"] = index_pairs_to_json(e.witnesses());
    return j;
}

} // namespace conred::io
