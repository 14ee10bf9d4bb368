#pragma once

#include "njump/types.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace njump {

// A maximal compact face of the Newton polyhedron together with its
// supporting data. In dimension 3 these are the two-dimensional facets of
// the diagram; in dimension 2 they are its segments. Either way the normal
// is primitive with strictly positive entries (the unused third slot stays
// zero in dimension 2) and every support point p satisfies
// dot(normal, p) >= offset, with equality exactly on the face.
struct Facet {
    std::vector<ExponentVector> vertices; // canonical cycle, see build_diagram
    std::array<Int, 3> normal{};
    Int offset;
};

using Edge = std::pair<ExponentVector, ExponentVector>; // lex-ordered endpoints

// The Newton diagram: all compact faces of the Newton polyhedron of a
// support, by dimension. Facet vertex cycles are counterclockwise in the
// (x, y) projection and start at the lexicographically smallest vertex;
// collinear boundary points are not vertices. Edges and vertices are sorted.
struct NewtonDiagram {
    int dimension = 3;
    std::vector<ExponentVector> vertices;
    std::vector<Edge> edges;
    std::vector<Facet> facets;
    // axis_intercepts[i] is the smallest exponent of a pure power of
    // variable i in the support, when one exists.
    std::array<std::optional<std::int64_t>, 3> axis_intercepts{};

    bool convenient() const;

    friend bool operator==(const NewtonDiagram&, const NewtonDiagram&);
};

bool operator==(const Facet&, const Facet&);

NewtonDiagram build_diagram(const Support& s);

// Membership tests against the region under the diagram. Both require a
// convenient diagram. A nonnegative point lies in gamma-minus iff it is on
// the origin side of at least one facet (dot(normal, p) <= offset), and in
// the Newton polyhedron iff it violates no facet inequality.
bool in_gamma_minus(const NewtonDiagram& d, const ExponentVector& p);
bool in_newton_polyhedron(const NewtonDiagram& d, const ExponentVector& p);

// Exact measures of the gamma-minus region of a convenient diagram.
//   volume:      full-dimensional volume (area in dimension 2)
//   plane_areas: areas of the intersections with the coordinate planes,
//                indexed OXY, OXZ, OYZ; all zero in dimension 2
//   axis_lengths:lengths of the intersections with the axes, i.e. the
//                axis intercepts
struct GammaMinusMetrics {
    int dimension = 3;
    Rat volume;
    std::array<Rat, 3> plane_areas{};
    std::array<std::int64_t, 3> axis_lengths{};
};

GammaMinusMetrics gamma_minus_metrics(const NewtonDiagram& d);

// The Newton number of a convenient support:
//   dimension 3:  6V - 2(P1 + P2 + P3) + (W1 + W2 + W3) - 1
//   dimension 2:  2A - (W1 + W2) + 1
Int newton_number(const Support& s);
Int newton_number(const NewtonDiagram& d);

} // namespace njump
