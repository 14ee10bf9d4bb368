#pragma once

#include "njump/geometry.hpp"
#include "njump/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace njump {

// Lattice points of gamma-minus minus the origin: the exponents whose
// single-monomial deformations can possibly change the Newton number.
struct CandidateSet {
    std::vector<ExponentVector> points; // sorted lexicographically
};

CandidateSet enumerate_candidates(const Support& s);

struct DeformationCandidate {
    ExponentVector exponent;
    Int nu_after;
    Int jump; // nu(s) - nu(s + exponent), always >= 0
};

enum class Method { bruteforce, fastpath };

struct FastpathTraceRow {
    std::int64_t i0 = 0;
    Int a, b, c;
    Int value; // a*qr + b*pr + c*pq, either i0 or i0 - pqr
    bool success = false;
};

struct JumpReport {
    Int lambda_nd;
    std::vector<ExponentVector> realizing_exponents; // sorted; empty when not witnessed
    Method method = Method::bruteforce;
    Int nu_before;
    std::int64_t candidates_examined = 0;
    std::vector<DeformationCandidate> candidate_trace; // bruteforce, opt-in
    std::vector<FastpathTraceRow> fastpath_trace;      // fastpath, always kept
    std::optional<Int> mu;                             // set by the degenerate entry point
};

std::string to_string(Method m);

// Newton number of s + {i} and the resulting drop. The exponent must be
// nonnegative and not the origin. Requires a convenient s.
DeformationCandidate jump_of_candidate(const Support& s, const ExponentVector& i);

// Exhaustive scan over the candidate set. Requires nu(s) >= 1; a smooth germ
// (nu = 0) admits no positive jump and is rejected. When keep_trace is set
// the report retains the per-candidate results.
JumpReport lambda_nd_bruteforce(const Support& s, bool keep_trace = false);

// Entry point for germs whose principal part is degenerate, given the true
// Milnor number mu. Kouchnirenko gives mu >= nu; smaller values are rejected.
// When mu > nu the jump is mu - nu with no witnessing monomial; when mu = nu
// the answer coincides with the non-degenerate one and the scan runs.
JumpReport lambda_nd_degenerate(const Support& s, const Int& mu, bool keep_trace = false);

} // namespace njump
