#pragma once

// Slow, independent reference computations used by the tests.  Everything
// here is deliberately naive: volumes are accumulated cell by cell with the
// inclusion-exclusion formula for a halfspace clipped to a unit box, and
// lattice point counts walk the full integer box.  The library under test
// must agree with these on every input where both are defined.

#include <array>
#include <cstdint>

#include "njump/numbers.hpp"
#include "njump/types.hpp"

namespace oracle {

using njump::Int;
using njump::Rat;

// Volume of { x in [0,1]^3 : a.x <= b } for strictly positive a.
inline Rat unit_cell_halfspace_volume(const std::array<Int, 3>& a, const Int& b)
{
    Rat sum = 0;
    for (int mask = 0; mask < 8; ++mask) {
        Int shifted = b;
        int bits = 0;
        for (int i = 0; i < 3; ++i)
            if (mask & (1 << i)) {
                shifted -= a[i];
                ++bits;
            }
        if (shifted <= 0)
            continue;
        Rat cube = Rat(shifted * shifted * shifted);
        sum += (bits % 2 == 0) ? cube : -cube;
    }
    return sum / Rat(6 * a[0] * a[1] * a[2]);
}

// Area of { x in [0,1]^2 : a.x <= b } for strictly positive a.
inline Rat unit_cell_halfplane_area(const std::array<Int, 2>& a, const Int& b)
{
    Rat sum = 0;
    for (int mask = 0; mask < 4; ++mask) {
        Int shifted = b;
        int bits = 0;
        for (int i = 0; i < 2; ++i)
            if (mask & (1 << i)) {
                shifted -= a[i];
                ++bits;
            }
        if (shifted <= 0)
            continue;
        Rat square = Rat(shifted * shifted);
        sum += (bits % 2 == 0) ? square : -square;
    }
    return sum / Rat(2 * a[0] * a[1]);
}

// Volume below the plane qr.x + pr.y + pq.z = pqr inside the positive
// octant, accumulated over unit cells.  Equals the volume of the region
// under the Newton diagram of x^p + y^q + z^r.
inline Rat one_face_volume_by_cells(std::int64_t p, std::int64_t q, std::int64_t r)
{
    const std::array<Int, 3> a = {Int(q) * r, Int(p) * r, Int(p) * q};
    const Int m = Int(p) * q * r;
    Rat total = 0;
    for (std::int64_t i = 0; i < p; ++i)
        for (std::int64_t j = 0; j < q; ++j)
            for (std::int64_t k = 0; k < r; ++k) {
                Int corner = a[0] * i + a[1] * j + a[2] * k;
                total += unit_cell_halfspace_volume(a, m - corner);
            }
    return total;
}

// Area below the segment from (p,0) to (0,q), accumulated over unit cells.
inline Rat one_face_area_by_cells(std::int64_t p, std::int64_t q)
{
    const std::array<Int, 2> a = {Int(q), Int(p)};
    const Int m = Int(p) * q;
    Rat total = 0;
    for (std::int64_t i = 0; i < p; ++i)
        for (std::int64_t j = 0; j < q; ++j) {
            Int corner = a[0] * i + a[1] * j;
            total += unit_cell_halfplane_area(a, m - corner);
        }
    return total;
}

// Volume of the tetrahedron with apex t over the triangle (v1, v2, v3).
inline Rat tetra_volume(const njump::ExponentVector& t,
                        const njump::ExponentVector& v1,
                        const njump::ExponentVector& v2,
                        const njump::ExponentVector& v3)
{
    std::array<Int, 3> e1, e2, e3;
    for (int i = 0; i < 3; ++i) {
        e1[i] = Int(v1[i]) - t[i];
        e2[i] = Int(v2[i]) - t[i];
        e3[i] = Int(v3[i]) - t[i];
    }
    Int det = e1[0] * (e2[1] * e3[2] - e2[2] * e3[1])
            - e1[1] * (e2[0] * e3[2] - e2[2] * e3[0])
            + e1[2] * (e2[0] * e3[1] - e2[1] * e3[0]);
    if (det < 0)
        det = -det;
    return Rat(det) / 6;
}

// Nonzero lattice points in the positive octant on or below the plane
// qr.x + pr.y + pq.z = pqr, counted one by one.
inline std::int64_t one_face_candidate_count(std::int64_t p, std::int64_t q, std::int64_t r)
{
    const Int a0 = Int(q) * r, a1 = Int(p) * r, a2 = Int(p) * q;
    const Int m = Int(p) * q * r;
    std::int64_t count = 0;
    for (std::int64_t i = 0; i <= p; ++i)
        for (std::int64_t j = 0; j <= q; ++j)
            for (std::int64_t k = 0; k <= r; ++k) {
                if (i == 0 && j == 0 && k == 0)
                    continue;
                if (a0 * i + a1 * j + a2 * k <= m)
                    ++count;
            }
    return count;
}

inline std::int64_t one_face_candidate_count_2d(std::int64_t p, std::int64_t q)
{
    const Int m = Int(p) * q;
    std::int64_t count = 0;
    for (std::int64_t i = 0; i <= p; ++i)
        for (std::int64_t j = 0; j <= q; ++j) {
            if (i == 0 && j == 0)
                continue;
            if (Int(q) * i + Int(p) * j <= m)
                ++count;
        }
    return count;
}

} // namespace oracle
