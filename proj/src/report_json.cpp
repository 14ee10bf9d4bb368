#include "njump/report_json.hpp"

namespace njump {

ordered_json json_int(const Int& v)
{
    if (fits_int64(v))
        return v.convert_to<std::int64_t>();
    return v.str();
}

ordered_json to_json(const ExponentVector& p, int dimension)
{
    ordered_json out = ordered_json::array();
    for (int i = 0; i < dimension; ++i)
        out.push_back(p[i]);
    return out;
}

ordered_json to_json(const NewtonDiagram& d)
{
    ordered_json out;
    out["dimension"] = d.dimension;
    out["convenient"] = d.convenient();

    auto vertices = ordered_json::array();
    for (const auto& v : d.vertices)
        vertices.push_back(to_json(v, d.dimension));
    out["vertices"] = std::move(vertices);

    auto edges = ordered_json::array();
    for (const auto& [a, b] : d.edges)
        edges.push_back(ordered_json::array({to_json(a, d.dimension), to_json(b, d.dimension)}));
    out["edges"] = std::move(edges);

    auto facets = ordered_json::array();
    for (const auto& f : d.facets) {
        ordered_json jf;
        auto cycle = ordered_json::array();
        for (const auto& v : f.vertices)
            cycle.push_back(to_json(v, d.dimension));
        jf["vertices"] = std::move(cycle);
        auto normal = ordered_json::array();
        for (int i = 0; i < d.dimension; ++i)
            normal.push_back(json_int(f.normal[i]));
        jf["normal"] = std::move(normal);
        jf["offset"] = json_int(f.offset);
        facets.push_back(std::move(jf));
    }
    out["facets"] = std::move(facets);

    auto intercepts = ordered_json::array();
    for (int i = 0; i < d.dimension; ++i) {
        if (d.axis_intercepts[i])
            intercepts.push_back(*d.axis_intercepts[i]);
        else
            intercepts.push_back(nullptr);
    }
    out["axis_intercepts"] = std::move(intercepts);
    return out;
}

ordered_json to_json(const GammaMinusMetrics& m)
{
    ordered_json out;
    out["V"] = fraction_string(m.volume);
    if (m.dimension == 3) {
        out["P"] = ordered_json::array({fraction_string(m.plane_areas[0]),
                                        fraction_string(m.plane_areas[1]),
                                        fraction_string(m.plane_areas[2])});
    }
    auto w = ordered_json::array();
    for (int i = 0; i < m.dimension; ++i)
        w.push_back(m.axis_lengths[i]);
    out["W"] = std::move(w);
    return out;
}

ordered_json to_json(const JumpReport& r, int dimension)
{
    ordered_json out;
    out["nu"] = json_int(r.nu_before);
    out["lambda_nd"] = json_int(r.lambda_nd);
    out["method"] = to_string(r.method);

    auto realizing = ordered_json::array();
    for (const auto& p : r.realizing_exponents)
        realizing.push_back(to_json(p, dimension));
    out["realizing"] = std::move(realizing);
    out["candidates"] = r.candidates_examined;

    if (r.mu)
        out["mu"] = json_int(*r.mu);

    if (r.method == Method::fastpath) {
        auto trace = ordered_json::array();
        for (const auto& row : r.fastpath_trace) {
            ordered_json jr;
            jr["i0"] = row.i0;
            jr["a"] = json_int(row.a);
            jr["b"] = json_int(row.b);
            jr["c"] = json_int(row.c);
            jr["value"] = json_int(row.value);
            jr["success"] = row.success;
            trace.push_back(std::move(jr));
        }
        out["trace"] = std::move(trace);
    } else if (!r.candidate_trace.empty()) {
        auto trace = ordered_json::array();
        for (const auto& row : r.candidate_trace) {
            ordered_json jr;
            jr["exponent"] = to_json(row.exponent, dimension);
            jr["nu_after"] = json_int(row.nu_after);
            jr["jump"] = json_int(row.jump);
            trace.push_back(std::move(jr));
        }
        out["trace"] = std::move(trace);
    }
    return out;
}

ordered_json candidates_json(const Support& s, const std::vector<DeformationCandidate>& rows)
{
    ordered_json out;
    out["dimension"] = s.dimension();
    out["count"] = rows.size();
    auto list = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json jr;
        jr["exponent"] = to_json(row.exponent, s.dimension());
        jr["nu_after"] = json_int(row.nu_after);
        jr["jump"] = json_int(row.jump);
        list.push_back(std::move(jr));
    }
    out["candidates"] = std::move(list);
    return out;
}

} // namespace njump
