#include "njump/fastpath.hpp"

#include <algorithm>
#include <numeric>

namespace njump {
namespace {

// Inverse of a modulo m, in (0, m). Requires gcd(a, m) = 1 and m >= 2.
Int modular_inverse(const Int& a, const Int& m)
{
    Int reduced = a % m;
    if (reduced < 0)
        reduced += m;
    if (reduced == 0)
        fail(ErrorKind::internal, "modular inverse of a multiple of the modulus");
    auto eg = extended_gcd(reduced, m);
    if (eg.g != 1)
        fail(ErrorKind::internal, "modular inverse requires coprime arguments");
    Int inv = eg.x % m;
    if (inv <= 0)
        inv += m;
    return inv;
}

// Residue of value * inverse(unit) modulo m, normalized into (0, m).
Int forced_residue(const Int& value, const Int& unit, const Int& m)
{
    Int res = (value * modular_inverse(unit, m)) % m;
    if (res <= 0)
        res += m;
    return res;
}

} // namespace

void validate_triple(const OneFaceTriple& t)
{
    if (t.r < 2 || t.q < t.r || t.p < t.q)
        fail(ErrorKind::input_mismatch, "one-face triple requires p >= q >= r >= 2");
    if (std::gcd(t.p, t.q) != 1 || std::gcd(t.p, t.r) != 1 || std::gcd(t.q, t.r) != 1)
        fail(ErrorKind::input_mismatch, "one-face triple requires pairwise coprime exponents");
}

Support triple_support(const OneFaceTriple& t)
{
    validate_triple(t);
    return Support(3, {ev(t.p, 0, 0), ev(0, t.q, 0), ev(0, 0, t.r)});
}

ExtendedGcd extended_gcd(const Int& u, const Int& v)
{
    if (u < 1 || v < 1)
        fail(ErrorKind::input_mismatch, "extended gcd requires positive arguments");

    Int r0 = u, r1 = v, x0 = 1, x1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int x2 = x0 - q * x1;
        x0 = x1;
        x1 = x2;
    }

    ExtendedGcd out;
    out.g = r0;
    // x is unique modulo v/g; pick the representative of least absolute
    // value, the positive one when both halves tie.
    Int period = v / out.g;
    Int x = x0 % period;
    if (x < 0)
        x += period;
    if (2 * x > period)
        x -= period;
    out.x = x;
    out.y = (out.g - x * u) / v;
    if (out.x * u + out.y * v != out.g)
        fail(ErrorKind::internal, "extended gcd identity failed");
    return out;
}

std::array<Int, 3> base_identity(const OneFaceTriple& t)
{
    validate_triple(t);
    const Int qr = Int(t.q) * t.r;
    const Int pr = Int(t.p) * t.r;
    const Int pq = Int(t.p) * t.q;

    auto inner = extended_gcd(qr, pr);
    if (inner.g != t.r)
        fail(ErrorKind::internal, "gcd(qr, pr) must equal r for a coprime triple");
    auto outer = extended_gcd(inner.g, pq);
    if (outer.g != 1)
        fail(ErrorKind::internal, "gcd(r, pq) must be 1 for a coprime triple");

    std::array<Int, 3> abc{outer.x * inner.x, outer.x * inner.y, outer.y};
    if (abc[0] * qr + abc[1] * pr + abc[2] * pq != 1)
        fail(ErrorKind::internal, "base identity failed");
    if (abc[0] == 0 || abc[1] == 0 || abc[2] == 0)
        fail(ErrorKind::internal, "base identity produced a zero coefficient");
    return abc;
}

std::optional<BezoutWitness> forced_witness(const OneFaceTriple& t, std::int64_t i0,
                                            FastpathTraceRow* trace)
{
    validate_triple(t);
    if (i0 < 1 || i0 > t.r - 2)
        fail(ErrorKind::input_mismatch,
             "jump candidate i0 must lie in [1, r-2]");

    const Int qr = Int(t.q) * t.r;
    const Int pr = Int(t.p) * t.r;
    const Int pq = Int(t.p) * t.q;
    const Int pqr = qr * t.p;

    // Reading the identity a*qr + b*pr + c*pq = i0 modulo p, q and r in turn
    // pins each coefficient to a single residue; the stated ranges are the
    // only ones compatible with a monomial inside the candidate region.
    const Int a = forced_residue(i0, qr, t.p);
    const Int b = forced_residue(i0, pr, t.q) - t.q;
    const Int c = forced_residue(i0, pq, t.r) - t.r;

    const Int value = a * qr + b * pr + c * pq;
    const bool success = value == i0;
    if (!success && value != i0 - pqr)
        fail(ErrorKind::internal, "forced combination missed both admissible values");

    if (trace)
        *trace = FastpathTraceRow{i0, a, b, c, value, success};
    if (!success)
        return std::nullopt;
    return BezoutWitness{i0, a, b, c};
}

JumpReport lambda_nd_fastpath(const OneFaceTriple& t)
{
    validate_triple(t);

    JumpReport report;
    report.method = Method::fastpath;
    report.nu_before = Int(t.p - 1) * (t.q - 1) * (t.r - 1);

    for (std::int64_t i0 = 1; i0 <= t.r - 2; ++i0) {
        FastpathTraceRow row;
        auto witness = forced_witness(t, i0, &row);
        report.fastpath_trace.push_back(row);
        if (witness) {
            ExponentVector e = ev(t.p - witness->a.convert_to<std::int64_t>(),
                                  (-witness->b).convert_to<std::int64_t>(),
                                  (-witness->c).convert_to<std::int64_t>());
            if (e[0] <= 0 || e[1] <= 0 || e[2] <= 0)
                fail(ErrorKind::internal, "fastpath witness left the open octant");
            report.lambda_nd = i0;
            report.realizing_exponents = {e};
            report.candidates_examined = i0;
            return report;
        }
    }

    // No interior witness: the minimal drop is realized inside the OXY
    // plane. With a1*p - b1*q = 1, 0 < a1 < q, the monomial
    // x^b1 y^(q - a1) lowers the newton number by exactly r - 1.
    const Int a1 = modular_inverse(Int(t.p), Int(t.q));
    const Int b1 = (a1 * t.p - 1) / t.q;
    if (a1 * t.p - b1 * t.q != 1 || b1 < 1)
        fail(ErrorKind::internal, "plane fallback identity failed");

    report.lambda_nd = t.r - 1;
    report.realizing_exponents = {ev(b1.convert_to<std::int64_t>(),
                                     t.q - a1.convert_to<std::int64_t>(), 0)};
    report.candidates_examined = std::max<std::int64_t>(t.r - 2, 0);
    return report;
}

std::optional<TripleMatch> match_one_face_triple(const NewtonDiagram& d)
{
    if (d.dimension != 3 || d.facets.size() != 1)
        return std::nullopt;
    const auto& f = d.facets.front();
    if (f.vertices.size() != 3)
        return std::nullopt;

    std::array<std::int64_t, 3> intercept{0, 0, 0};
    for (const auto& v : f.vertices) {
        int axis = -1;
        for (int i = 0; i < 3; ++i) {
            if (v[i] != 0) {
                if (axis != -1)
                    return std::nullopt; // not a pure power
                axis = i;
            }
        }
        if (axis == -1 || intercept[axis] != 0)
            return std::nullopt;
        intercept[axis] = v[axis];
    }
    for (int i = 0; i < 3; ++i)
        if (intercept[i] < 2)
            return std::nullopt;
    if (std::gcd(intercept[0], intercept[1]) != 1 || std::gcd(intercept[0], intercept[2]) != 1 ||
        std::gcd(intercept[1], intercept[2]) != 1)
        return std::nullopt;

    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return intercept[a] != intercept[b] ? intercept[a] > intercept[b] : a < b;
    });

    TripleMatch m;
    m.triple = OneFaceTriple{intercept[order[0]], intercept[order[1]], intercept[order[2]]};
    m.axis_of = order;
    return m;
}

ExponentVector unpermute(const TripleMatch& m, const ExponentVector& p)
{
    ExponentVector out;
    for (int k = 0; k < 3; ++k)
        out[m.axis_of[k]] = p[k];
    return out;
}

} // namespace njump
