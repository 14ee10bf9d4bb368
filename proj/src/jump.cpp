#include "njump/jump.hpp"

#include <algorithm>

namespace njump {
namespace {

constexpr std::int64_t max_candidate_box = 100'000'000;

Int facet_value(const Facet& f, const ExponentVector& p)
{
    return f.normal[0] * p[0] + f.normal[1] * p[1] + f.normal[2] * p[2];
}

bool below_some_facet(const NewtonDiagram& d, const ExponentVector& p)
{
    for (const auto& f : d.facets)
        if (facet_value(f, p) <= f.offset)
            return true;
    return false;
}

void validate_exponent(const Support& s, const ExponentVector& i)
{
    if (i[0] < 0 || i[1] < 0 || i[2] < 0)
        fail(ErrorKind::input_mismatch,
             "deformation exponent " + to_string(i, s.dimension()) + " has a negative coordinate");
    if (i == ExponentVector{})
        fail(ErrorKind::input_mismatch, "the origin is not a valid deformation exponent");
    if (s.dimension() == 2 && i[2] != 0)
        fail(ErrorKind::input_mismatch, "deformation exponent uses the third variable in dimension 2");
}

DeformationCandidate jump_against(const Support& s, const Int& nu_before, const ExponentVector& i)
{
    DeformationCandidate out;
    out.exponent = i;
    if (s.contains(i)) {
        out.nu_after = nu_before;
        out.jump = 0;
        return out;
    }
    out.nu_after = newton_number(s.with_point(i));
    out.jump = nu_before - out.nu_after;
    if (out.jump < 0)
        fail(ErrorKind::internal,
             "monotonicity violated at " + to_string(i, s.dimension()));
    return out;
}

} // namespace

std::string to_string(Method m)
{
    return m == Method::bruteforce ? "bruteforce" : "fastpath";
}

CandidateSet enumerate_candidates(const Support& s)
{
    const auto d = build_diagram(s);
    if (!d.convenient())
        fail(ErrorKind::not_convenient,
             "candidate enumeration requires a convenient support (every axis touched)");

    std::array<std::int64_t, 3> box{*d.axis_intercepts[0], *d.axis_intercepts[1],
                                    s.dimension() == 3 ? *d.axis_intercepts[2] : 0};
    Int cells = (Int(box[0]) + 1) * (Int(box[1]) + 1) * (Int(box[2]) + 1);
    if (cells > max_candidate_box)
        fail(ErrorKind::input_mismatch,
             "candidate box holds " + cells.str() + " lattice points; refusing to enumerate");

    CandidateSet out;
    for (std::int64_t a = 0; a <= box[0]; ++a)
        for (std::int64_t b = 0; b <= box[1]; ++b)
            for (std::int64_t c = 0; c <= box[2]; ++c) {
                ExponentVector p = ev(a, b, c);
                if (p == ExponentVector{})
                    continue;
                if (below_some_facet(d, p))
                    out.points.push_back(p);
            }
    return out;
}

DeformationCandidate jump_of_candidate(const Support& s, const ExponentVector& i)
{
    validate_exponent(s, i);
    return jump_against(s, newton_number(s), i);
}

JumpReport lambda_nd_bruteforce(const Support& s, bool keep_trace)
{
    const Int nu_before = newton_number(s);
    if (nu_before == 0)
        fail(ErrorKind::input_mismatch,
             "the germ is smooth (newton number 0); no deformation can lower it");

    const auto candidates = enumerate_candidates(s);

    JumpReport report;
    report.method = Method::bruteforce;
    report.nu_before = nu_before;
    report.candidates_examined = static_cast<std::int64_t>(candidates.points.size());

    bool have_min = false;
    Int best;
    for (const auto& p : candidates.points) {
        auto row = jump_against(s, nu_before, p);
        if (row.jump > 0) {
            if (!have_min || row.jump < best) {
                have_min = true;
                best = row.jump;
                report.realizing_exponents.clear();
            }
            if (row.jump == best)
                report.realizing_exponents.push_back(p);
        }
        if (keep_trace)
            report.candidate_trace.push_back(std::move(row));
    }
    if (!have_min)
        fail(ErrorKind::internal,
             "no candidate produced a positive jump although the newton number is positive");

    report.lambda_nd = best;
    return report;
}

JumpReport lambda_nd_degenerate(const Support& s, const Int& mu, bool keep_trace)
{
    const Int nu = newton_number(s);
    if (mu < nu)
        fail(ErrorKind::input_mismatch,
             "milnor number " + mu.str() + " is below the newton number " + nu.str() +
                 "; no such germ exists");

    if (mu > nu) {
        JumpReport report;
        report.lambda_nd = mu - nu;
        report.method = Method::bruteforce;
        report.nu_before = nu;
        report.candidates_examined = 0;
        report.mu = mu;
        return report;
    }

    JumpReport report = lambda_nd_bruteforce(s, keep_trace);
    report.mu = mu;
    return report;
}

} // namespace njump
