#pragma once

#include "njump/geometry.hpp"
#include "njump/jump.hpp"
#include "njump/types.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <tuple>

namespace njump {

// One-face surface singularity x^p + y^q + z^r with p >= q >= r >= 2 and
// p, q, r pairwise coprime. Its diagram is the single triangle through
// (p,0,0), (0,q,0), (0,0,r) and its Newton number is (p-1)(q-1)(r-1).
struct OneFaceTriple {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t r = 0;
};

// Throws input_mismatch unless p >= q >= r >= 2 and the entries are pairwise
// coprime.
void validate_triple(const OneFaceTriple& t);

Support triple_support(const OneFaceTriple& t);

// gcd(u, v) together with Bezout coefficients g = x*u + y*v, for u, v >= 1.
// Among all valid x (a residue class modulo v/g) the one of least absolute
// value is returned, preferring the positive one on ties; y follows.
struct ExtendedGcd {
    Int g, x, y;
};

ExtendedGcd extended_gcd(const Int& u, const Int& v);

// Coefficients of a fixed representation a*qr + b*pr + c*pq = 1 with
// a, b, c all nonzero, built from two nested gcd runs.
std::array<Int, 3> base_identity(const OneFaceTriple& t);

// The unique candidate witness for the jump value i0, 1 <= i0 <= r-2. The
// residues a = i0*(qr)^-1 mod p in (0,p), b = i0*(pr)^-1 mod q in (-q,0),
// c = i0*(pq)^-1 mod r in (-r,0) are forced; the combination
// a*qr + b*pr + c*pq then equals either i0 (success: the deformation by
// x^(p-a) y^(-b) z^(-c) drops the Newton number by exactly i0) or i0 - pqr
// (failure: no deformation achieves a drop of i0).
struct BezoutWitness {
    std::int64_t i0 = 0;
    Int a, b, c;
};

std::optional<BezoutWitness> forced_witness(const OneFaceTriple& t, std::int64_t i0,
                                            FastpathTraceRow* trace = nullptr);

// The full Euclid-based computation: scans i0 = 1, ..., r-2 for a successful
// witness; the first success is the answer. When none succeeds the jump is
// r - 1, realized inside the OXY coordinate plane by (b1, q - a1, 0) where
// a1*p - b1*q = 1 with 0 < a1 < q. The report always carries the scan trace.
JumpReport lambda_nd_fastpath(const OneFaceTriple& t);

// Recognizes supports the fastpath accepts: dimension 3, a single facet
// whose vertices are the three axis points, pairwise coprime intercepts all
// >= 2. Returns the sorted triple plus the permutation mapping triple axes
// back to the support's axes (axis_of[k] is the support axis carrying the
// k-th triple entry).
struct TripleMatch {
    OneFaceTriple triple;
    std::array<int, 3> axis_of{0, 1, 2};
};

std::optional<TripleMatch> match_one_face_triple(const NewtonDiagram& d);

// Applies the axis permutation of a match to an exponent vector in triple
// coordinates.
ExponentVector unpermute(const TripleMatch& m, const ExponentVector& p);

} // namespace njump
