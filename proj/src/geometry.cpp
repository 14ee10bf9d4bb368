#include "njump/geometry.hpp"

#include "njump/parser.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace njump {
namespace {

using Vec3 = std::array<Int, 3>;
using Vec2 = std::array<Int, 2>;

Int dot(const Vec3& w, const ExponentVector& p)
{
    return w[0] * p[0] + w[1] * p[1] + w[2] * p[2];
}

Vec3 difference(const ExponentVector& a, const ExponentVector& b)
{
    return {Int(a[0]) - b[0], Int(a[1]) - b[1], Int(a[2]) - b[2]};
}

Vec3 cross(const Vec3& u, const Vec3& v)
{
    return {u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]};
}

Int dot_vec(const Vec3& a, const Vec3& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Int det3(const ExponentVector& a, const ExponentVector& b, const ExponentVector& c)
{
    return Int(a[0]) * (Int(b[1]) * c[2] - Int(b[2]) * c[1]) -
           Int(a[1]) * (Int(b[0]) * c[2] - Int(b[2]) * c[0]) +
           Int(a[2]) * (Int(b[0]) * c[1] - Int(b[1]) * c[0]);
}

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

void divide_by_gcd(Vec3& v)
{
    Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(v[0]), abs(v[1])), abs(v[2]));
    if (g > 1)
        for (auto& c : v)
            c /= g;
}

// Primitive representative with all entries > 0, if the direction admits one.
bool make_strictly_positive(Vec3& v)
{
    if (v[0] < 0 && v[1] < 0 && v[2] < 0)
        for (auto& c : v)
            c = -c;
    if (v[0] <= 0 || v[1] <= 0 || v[2] <= 0)
        return false;
    divide_by_gcd(v);
    return true;
}

// Primitive representative with all entries >= 0 and at least one > 0.
bool make_nonnegative(Vec3& v)
{
    if (is_zero(v))
        return false;
    bool has_pos = v[0] > 0 || v[1] > 0 || v[2] > 0;
    bool has_neg = v[0] < 0 || v[1] < 0 || v[2] < 0;
    if (has_pos && has_neg)
        return false;
    if (has_neg)
        for (auto& c : v)
            c = -c;
    divide_by_gcd(v);
    return true;
}

// Support points not componentwise dominated by another; dropping the rest
// changes neither the Newton polyhedron nor its faces.
std::vector<ExponentVector> minimal_points(const std::vector<ExponentVector>& pts)
{
    std::vector<ExponentVector> out;
    for (const auto& p : pts) {
        bool dominated = false;
        for (const auto& q : pts) {
            if (q != p && q[0] <= p[0] && q[1] <= p[1] && q[2] <= p[2]) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            out.push_back(p);
    }
    return out;
}

Int cross2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

Int dot2(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

// Turn determinant of the (x, y) projections.
Int turn_xy(const ExponentVector& o, const ExponentVector& a, const ExponentVector& b)
{
    return (Int(a[0]) - o[0]) * (Int(b[1]) - o[1]) - (Int(a[1]) - o[1]) * (Int(b[0]) - o[0]);
}

// Counterclockwise convex hull cycle of coplanar points, computed on the
// (x, y) projection. The projection is injective and orientation-preserving
// on any plane with strictly positive normal. Collinear boundary points are
// dropped; the cycle starts at the lexicographically smallest vertex.
std::vector<ExponentVector> hull_cycle(std::vector<ExponentVector> pts)
{
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return std::pair(a[0], a[1]) < std::pair(b[0], b[1]);
    });
    std::vector<ExponentVector> lower, upper;
    for (const auto& p : pts) {
        while (lower.size() >= 2 && turn_xy(lower[lower.size() - 2], lower.back(), p) <= 0)
            lower.pop_back();
        lower.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (upper.size() >= 2 && turn_xy(upper[upper.size() - 2], upper.back(), *it) <= 0)
            upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());

    auto lo = std::min_element(lower.begin(), lower.end());
    std::rotate(lower.begin(), lo, lower.end());
    return lower;
}

bool affinely_two_dimensional(const std::vector<ExponentVector>& pts)
{
    if (pts.size() < 3)
        return false;
    Vec3 d1{};
    std::size_t base = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        d1 = difference(pts[i], pts[base]);
        if (!is_zero(d1)) {
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (!is_zero(cross(d1, difference(pts[j], pts[base]))))
                    return true;
            return false;
        }
    }
    return false;
}

// Exact test for p being a vertex of the Newton polyhedron of M, i.e. not a
// member of conv(M - p) + R+^n. Separating directions, when they exist, can
// be taken normal to a facet of that polyhedron; every such normal is
// orthogonal to two independent vectors drawn from differences of points of
// M - p and coordinate directions, so the candidate set below is complete.
bool is_vertex3(const ExponentVector& p, const std::vector<ExponentVector>& m)
{
    std::vector<ExponentVector> rest;
    for (const auto& q : m)
        if (q != p)
            rest.push_back(q);
    if (rest.empty())
        return true;

    static const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::set<Vec3> candidates{axes[0], axes[1], axes[2]};
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            Vec3 d = difference(rest[i], rest[j]);
            for (const auto& e : axes) {
                Vec3 w = cross(d, e);
                if (make_nonnegative(w))
                    candidates.insert(w);
            }
            for (std::size_t k = j + 1; k < rest.size(); ++k) {
                Vec3 w = cross(d, difference(rest[k], rest[j]));
                if (make_nonnegative(w))
                    candidates.insert(w);
            }
        }

    for (const auto& w : candidates) {
        Int best = dot(w, rest[0]);
        for (const auto& q : rest)
            best = std::min(best, dot(w, q));
        if (dot(w, p) < best)
            return true;
    }
    return false;
}

bool is_vertex2(const ExponentVector& p, const std::vector<ExponentVector>& m)
{
    std::vector<ExponentVector> rest;
    for (const auto& q : m)
        if (q != p)
            rest.push_back(q);
    if (rest.empty())
        return true;

    std::set<Vec2> candidates{{Int(1), Int(0)}, {Int(0), Int(1)}};
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            Vec2 w{Int(rest[j][1]) - rest[i][1], Int(rest[i][0]) - rest[j][0]};
            if (w[0] < 0 || w[1] < 0) {
                w[0] = -w[0];
                w[1] = -w[1];
            }
            if (w[0] < 0 || w[1] < 0 || (w[0] == 0 && w[1] == 0))
                continue;
            Int g = boost::multiprecision::gcd(abs(w[0]), abs(w[1]));
            if (g > 1) {
                w[0] /= g;
                w[1] /= g;
            }
            candidates.insert(w);
        }

    for (const auto& w : candidates) {
        auto value = [&](const ExponentVector& q) -> Int { return w[0] * q[0] + w[1] * q[1]; };
        Int best = value(rest[0]);
        for (const auto& q : rest)
            best = std::min(best, value(q));
        if (value(p) < best)
            return true;
    }
    return false;
}

// Feasibility of the open system dot(row, c) > 0 for all rows in the plane.
// The closed solution cone is cut out by half-planes through the origin, so
// it has nonempty interior iff it contains two linearly independent vectors
// among the rows and their rotations. Zero rows make the system infeasible.
bool open_cone_feasible(const std::vector<Vec2>& rows)
{
    std::vector<Vec2> candidates;
    for (const auto& a : rows) {
        if (a[0] == 0 && a[1] == 0)
            return false;
        candidates.push_back(a);
        candidates.push_back({-a[1], a[0]});
        candidates.push_back({a[1], -a[0]});
    }
    std::vector<Vec2> feasible;
    for (const auto& c : candidates) {
        bool ok = true;
        for (const auto& a : rows)
            if (dot2(a, c) < 0) {
                ok = false;
                break;
            }
        if (ok)
            feasible.push_back(c);
    }
    for (std::size_t i = 0; i < feasible.size(); ++i)
        for (std::size_t j = i + 1; j < feasible.size(); ++j)
            if (cross2(feasible[i], feasible[j]) != 0)
                return true;
    return false;
}

// Whether the segment [u, v] is a compact edge of the Newton polyhedron of
// m: some strictly positive w must attain its minimum over m exactly on the
// support points of that segment. Projecting w onto the plane orthogonal to
// v - u turns this into a two-dimensional open-cone feasibility problem.
bool is_compact_edge3(const ExponentVector& u, const ExponentVector& v,
                      const std::vector<ExponentVector>& m)
{
    Vec3 d = difference(v, u);

    std::vector<const ExponentVector*> on_line;
    std::vector<const ExponentVector*> off_line;
    for (const auto& q : m) {
        if (is_zero(cross(d, difference(q, u))))
            on_line.push_back(&q);
        else
            off_line.push_back(&q);
    }
    // u and v must be the extreme support points on their line, otherwise
    // the candidate face would extend past them.
    Int tmax = dot_vec(d, d);
    for (const auto* q : on_line) {
        Int t = dot(d, *q) - dot(d, u);
        if (t < 0 || t > tmax)
            return false;
    }

    // Integer basis of the orthogonal complement of d.
    Vec3 span[3] = {{d[1], -d[0], Int(0)}, {d[2], Int(0), -d[0]}, {Int(0), d[2], -d[1]}};
    Vec3 b1{}, b2{};
    bool found = false;
    for (int i = 0; i < 3 && !found; ++i)
        for (int j = i + 1; j < 3 && !found; ++j)
            if (!is_zero(span[i]) && !is_zero(span[j]) && !is_zero(cross(span[i], span[j]))) {
                b1 = span[i];
                b2 = span[j];
                found = true;
            }
    if (!found)
        return false;

    std::vector<Vec2> rows;
    for (int k = 0; k < 3; ++k)
        rows.push_back({b1[k], b2[k]});
    for (const auto* q : off_line) {
        Vec3 diff = difference(*q, u);
        rows.push_back({dot_vec(b1, diff), dot_vec(b2, diff)});
    }
    return open_cone_feasible(rows);
}

NewtonDiagram build3(const Support& s)
{
    NewtonDiagram d;
    d.dimension = 3;

    const auto m = minimal_points(s.points());

    std::set<Vec3> normals;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            for (std::size_t k = j + 1; k < m.size(); ++k) {
                Vec3 w = cross(difference(m[j], m[i]), difference(m[k], m[i]));
                if (!is_zero(w) && make_strictly_positive(w))
                    normals.insert(w);
            }

    std::set<ExponentVector> vertex_set;
    std::set<Edge> edge_set;
    for (const auto& w : normals) {
        Int offset = dot(w, m[0]);
        for (const auto& p : m)
            offset = std::min(offset, dot(w, p));
        std::vector<ExponentVector> face;
        for (const auto& p : m)
            if (dot(w, p) == offset)
                face.push_back(p);
        if (!affinely_two_dimensional(face))
            continue;

        Facet f;
        f.vertices = hull_cycle(std::move(face));
        f.normal = w;
        f.offset = offset;
        for (std::size_t i = 0; i < f.vertices.size(); ++i) {
            const auto& a = f.vertices[i];
            const auto& b = f.vertices[(i + 1) % f.vertices.size()];
            edge_set.insert(a < b ? Edge{a, b} : Edge{b, a});
            vertex_set.insert(a);
        }
        d.facets.push_back(std::move(f));
    }
    std::sort(d.facets.begin(), d.facets.end(),
              [](const Facet& a, const Facet& b) { return a.normal < b.normal; });

    // Vertices of the polyhedron that do not lie on any compact facet. They
    // can only occur for non-convenient supports, but the test is exact
    // either way.
    for (const auto& p : m) {
        bool on_facet = false;
        for (const auto& f : d.facets)
            if (dot(f.normal, p) == f.offset) {
                on_facet = true;
                break;
            }
        if (!on_facet && is_vertex3(p, m))
            vertex_set.insert(p);
    }

    d.vertices.assign(vertex_set.begin(), vertex_set.end());

    // Compact edges not on the boundary of any compact facet.
    for (std::size_t i = 0; i < d.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < d.vertices.size(); ++j) {
            Edge e{d.vertices[i], d.vertices[j]};
            if (!edge_set.count(e) && is_compact_edge3(e.first, e.second, m))
                edge_set.insert(e);
        }
    d.edges.assign(edge_set.begin(), edge_set.end());

    for (const auto& p : s.points())
        for (int axis = 0; axis < 3; ++axis)
            if (p[axis] > 0 && p[(axis + 1) % 3] == 0 && p[(axis + 2) % 3] == 0)
                if (!d.axis_intercepts[axis] || p[axis] < *d.axis_intercepts[axis])
                    d.axis_intercepts[axis] = p[axis];

    return d;
}

NewtonDiagram build2(const Support& s)
{
    NewtonDiagram d;
    d.dimension = 2;

    const auto m = minimal_points(s.points());

    std::set<Vec3> normals;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            Vec2 w{Int(m[j][1]) - m[i][1], Int(m[i][0]) - m[j][0]};
            if (w[0] < 0 && w[1] < 0) {
                w[0] = -w[0];
                w[1] = -w[1];
            }
            if (w[0] <= 0 || w[1] <= 0)
                continue;
            Int g = boost::multiprecision::gcd(w[0], w[1]);
            normals.insert({w[0] / g, w[1] / g, Int(0)});
        }

    std::set<ExponentVector> vertex_set;
    for (const auto& w : normals) {
        Int offset = dot(w, m[0]);
        for (const auto& p : m)
            offset = std::min(offset, dot(w, p));
        std::vector<ExponentVector> face;
        for (const auto& p : m)
            if (dot(w, p) == offset)
                face.push_back(p);
        if (face.size() < 2)
            continue;
        std::sort(face.begin(), face.end());

        Facet f;
        f.vertices = {face.front(), face.back()};
        f.normal = w;
        f.offset = offset;
        vertex_set.insert(face.front());
        vertex_set.insert(face.back());
        d.edges.emplace_back(face.front(), face.back());
        d.facets.push_back(std::move(f));
    }
    std::sort(d.facets.begin(), d.facets.end(),
              [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
    std::sort(d.edges.begin(), d.edges.end());

    for (const auto& p : m) {
        bool on_face = false;
        for (const auto& f : d.facets)
            if (dot(f.normal, p) == f.offset) {
                on_face = true;
                break;
            }
        if (!on_face && is_vertex2(p, m))
            vertex_set.insert(p);
    }
    d.vertices.assign(vertex_set.begin(), vertex_set.end());

    for (const auto& p : s.points())
        for (int axis = 0; axis < 2; ++axis)
            if (p[axis] > 0 && p[1 - axis] == 0)
                if (!d.axis_intercepts[axis] || p[axis] < *d.axis_intercepts[axis])
                    d.axis_intercepts[axis] = p[axis];

    return d;
}

void require_convenient(const NewtonDiagram& d, const char* what)
{
    if (!d.convenient())
        fail(ErrorKind::not_convenient,
             std::string(what) + " requires a convenient support (every axis touched)");
}

} // namespace

bool operator==(const Facet& a, const Facet& b)
{
    return a.vertices == b.vertices && a.normal == b.normal && a.offset == b.offset;
}

bool operator==(const NewtonDiagram& a, const NewtonDiagram& b)
{
    return a.dimension == b.dimension && a.vertices == b.vertices && a.edges == b.edges &&
           a.facets == b.facets && a.axis_intercepts == b.axis_intercepts;
}

bool NewtonDiagram::convenient() const
{
    for (int axis = 0; axis < dimension; ++axis)
        if (!axis_intercepts[axis])
            return false;
    return true;
}

NewtonDiagram build_diagram(const Support& s)
{
    return s.dimension() == 3 ? build3(s) : build2(s);
}

bool in_gamma_minus(const NewtonDiagram& d, const ExponentVector& p)
{
    require_convenient(d, "gamma-minus membership");
    if (p[0] < 0 || p[1] < 0 || p[2] < 0)
        return false;
    for (const auto& f : d.facets)
        if (dot(f.normal, p) <= f.offset)
            return true;
    return false;
}

bool in_newton_polyhedron(const NewtonDiagram& d, const ExponentVector& p)
{
    require_convenient(d, "polyhedron membership");
    if (p[0] < 0 || p[1] < 0 || p[2] < 0)
        return false;
    for (const auto& f : d.facets)
        if (dot(f.normal, p) < f.offset)
            return false;
    return true;
}

GammaMinusMetrics gamma_minus_metrics(const NewtonDiagram& d)
{
    require_convenient(d, "gamma-minus measurement");
    if (d.facets.empty())
        fail(ErrorKind::internal, "convenient diagram produced no compact facets");

    GammaMinusMetrics out;
    out.dimension = d.dimension;
    for (int axis = 0; axis < d.dimension; ++axis)
        out.axis_lengths[axis] = *d.axis_intercepts[axis];

    if (d.dimension == 2) {
        Int twice_area = 0;
        for (const auto& f : d.facets) {
            const auto& u = f.vertices[0];
            const auto& v = f.vertices[1];
            twice_area += abs(Int(u[0]) * v[1] - Int(u[1]) * v[0]);
        }
        out.volume = Rat(twice_area, 2);
        return out;
    }

    // The solid under the diagram is star-shaped about the origin, so its
    // volume is the sum of the cones over the facets; each cone is fanned
    // into tetrahedra from the first cycle vertex.
    Int six_volume = 0;
    for (const auto& f : d.facets)
        for (std::size_t i = 1; i + 1 < f.vertices.size(); ++i)
            six_volume += abs(det3(f.vertices[0], f.vertices[i], f.vertices[i + 1]));
    out.volume = Rat(six_volume, 6);

    // The intersection with a coordinate plane is bounded by the diagram
    // edges lying in that plane; fan the area from the plane origin.
    static const std::array<std::array<int, 2>, 3> plane_axes{{{0, 1}, {0, 2}, {1, 2}}};
    for (int plane = 0; plane < 3; ++plane) {
        int zero_axis = 3 - plane_axes[plane][0] - plane_axes[plane][1];
        Int twice_area = 0;
        for (const auto& [u, v] : d.edges) {
            if (u[zero_axis] != 0 || v[zero_axis] != 0)
                continue;
            Int ux = u[plane_axes[plane][0]], uy = u[plane_axes[plane][1]];
            Int vx = v[plane_axes[plane][0]], vy = v[plane_axes[plane][1]];
            twice_area += abs(ux * vy - uy * vx);
        }
        out.plane_areas[plane] = Rat(twice_area, 2);
    }
    return out;
}

Int newton_number(const NewtonDiagram& d)
{
    require_convenient(d, "newton number");
    const auto m = gamma_minus_metrics(d);

    Rat nu;
    if (d.dimension == 3) {
        nu = 6 * m.volume - 2 * (m.plane_areas[0] + m.plane_areas[1] + m.plane_areas[2]) +
             (Int(m.axis_lengths[0]) + m.axis_lengths[1] + m.axis_lengths[2]) - 1;
    } else {
        nu = 2 * m.volume - (Int(m.axis_lengths[0]) + m.axis_lengths[1]) + 1;
    }
    if (denominator(nu) != 1)
        fail(ErrorKind::internal, "newton number came out non-integral");
    Int result = numerator(nu);
    if (result < 0)
        fail(ErrorKind::internal, "newton number came out negative");
    return result;
}

Int newton_number(const Support& s)
{
    return newton_number(build_diagram(s));
}

} // namespace njump
