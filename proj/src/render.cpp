#include "njump/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace njump {
namespace {

void require_dim(const NewtonDiagram& d, int dim, const char* format)
{
    if (d.dimension != dim) {
        std::ostringstream out;
        out << format << " rendering requires a " << dim << "-variable germ";
        fail(ErrorKind::input_mismatch, out.str());
    }
}

} // namespace

std::string render_svg(const NewtonDiagram& d, const Support& s)
{
    require_dim(d, 2, "svg");
    if (!d.convenient())
        fail(ErrorKind::not_convenient, "svg rendering requires a convenient support");

    const std::int64_t w1 = *d.axis_intercepts[0];
    const std::int64_t w2 = *d.axis_intercepts[1];
    std::int64_t max_x = w1, max_y = w2;
    for (const auto& p : s.points()) {
        max_x = std::max(max_x, p[0]);
        max_y = std::max(max_y, p[1]);
    }

    const int unit = 40, pad = 60;
    const std::int64_t width = (max_x + 1) * unit + 2 * pad;
    const std::int64_t height = (max_y + 1) * unit + 2 * pad;
    auto X = [&](std::int64_t x) { return pad + x * unit; };
    auto Y = [&](std::int64_t y) { return height - pad - y * unit; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n";
    out << "  <style>\n"
           "    .axis { stroke: #555; stroke-width: 2; }\n"
           "    .grid { stroke: #e4e4e4; stroke-width: 1; }\n"
           "    .gamma { fill: #cfe3f7; stroke: none; }\n"
           "    .face { stroke: #c22; stroke-width: 4; stroke-linecap: round; }\n"
           "    .pt { fill: #222; }\n"
           "    .vx { fill: #c22; }\n"
           "    text { font: 20px sans-serif; fill: #333; }\n"
           "  </style>\n";

    // Shaded gamma-minus region: origin, the x-intercept, the diagram chain
    // up to the y-intercept. Diagram vertices ordered by decreasing x trace
    // the chain.
    auto chain = d.vertices;
    std::sort(chain.begin(), chain.end(),
              [](const auto& a, const auto& b) { return a[0] > b[0]; });
    out << "  <polygon class=\"gamma\" points=\"" << X(0) << ',' << Y(0);
    for (const auto& v : chain)
        out << ' ' << X(v[0]) << ',' << Y(v[1]);
    out << "\"/>\n";

    if (max_x <= 64 && max_y <= 64) {
        for (std::int64_t x = 1; x <= max_x; ++x)
            out << "  <line class=\"grid\" x1=\"" << X(x) << "\" y1=\"" << Y(0) << "\" x2=\""
                << X(x) << "\" y2=\"" << Y(max_y) << "\"/>\n";
        for (std::int64_t y = 1; y <= max_y; ++y)
            out << "  <line class=\"grid\" x1=\"" << X(0) << "\" y1=\"" << Y(y) << "\" x2=\""
                << X(max_x) << "\" y2=\"" << Y(y) << "\"/>\n";
    }

    out << "  <line class=\"axis\" x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\""
        << X(max_x) + unit / 2 << "\" y2=\"" << Y(0) << "\"/>\n";
    out << "  <line class=\"axis\" x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0)
        << "\" y2=\"" << Y(max_y) - unit / 2 << "\"/>\n";
    out << "  <text x=\"" << X(max_x) + unit / 2 + 8 << "\" y=\"" << Y(0) + 6 << "\">x</text>\n";
    out << "  <text x=\"" << X(0) - 8 << "\" y=\"" << Y(max_y) - unit / 2 - 8
        << "\">y</text>\n";

    for (const auto& [a, b] : d.edges)
        out << "  <line class=\"face\" x1=\"" << X(a[0]) << "\" y1=\"" << Y(a[1]) << "\" x2=\""
            << X(b[0]) << "\" y2=\"" << Y(b[1]) << "\"/>\n";

    for (const auto& p : s.points())
        out << "  <circle class=\"pt\" cx=\"" << X(p[0]) << "\" cy=\"" << Y(p[1])
            << "\" r=\"5\"/>\n";
    for (const auto& v : d.vertices)
        out << "  <circle class=\"vx\" cx=\"" << X(v[0]) << "\" cy=\"" << Y(v[1])
            << "\" r=\"7\"/>\n";

    out << "</svg>\n";
    return out.str();
}

std::string render_obj(const NewtonDiagram& d)
{
    require_dim(d, 3, "obj");
    if (!d.convenient())
        fail(ErrorKind::not_convenient, "obj rendering requires a convenient support");

    std::map<ExponentVector, int> index;
    std::vector<ExponentVector> order;
    auto vertex_id = [&](const ExponentVector& p) {
        auto [it, inserted] = index.try_emplace(p, static_cast<int>(order.size()) + 1);
        if (inserted)
            order.push_back(p);
        return it->second;
    };

    const ExponentVector origin{};
    vertex_id(origin);
    for (const auto& f : d.facets)
        for (const auto& v : f.vertices)
            vertex_id(v);

    std::ostringstream faces;
    faces << "g diagram\n";
    for (const auto& f : d.facets)
        for (std::size_t i = 1; i + 1 < f.vertices.size(); ++i)
            faces << "f " << vertex_id(f.vertices[0]) << ' ' << vertex_id(f.vertices[i]) << ' '
                  << vertex_id(f.vertices[i + 1]) << '\n';

    // Coordinate-plane walls, fanned from the origin over the diagram edges
    // lying in each plane.
    faces << "g walls\n";
    static const int zero_axis_of_plane[3] = {2, 1, 0};
    for (int plane = 0; plane < 3; ++plane) {
        int za = zero_axis_of_plane[plane];
        for (const auto& [a, b] : d.edges) {
            if (a[za] != 0 || b[za] != 0)
                continue;
            faces << "f " << vertex_id(origin) << ' ' << vertex_id(a) << ' ' << vertex_id(b)
                  << '\n';
        }
    }

    std::ostringstream out;
    out << "# boundary mesh of the region under the newton diagram\n";
    out << "# " << order.size() << " vertices\n";
    for (const auto& p : order)
        out << "v " << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    out << faces.str();
    return out.str();
}

} // namespace njump
