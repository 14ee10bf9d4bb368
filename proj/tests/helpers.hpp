#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "njump/types.hpp"

namespace testutil {

inline bool contains(const std::string& haystack, const std::string& needle)
{
    return haystack.find(needle) != std::string::npos;
}

// Runs fn, requires that it throws an njump::Error of the given kind whose
// message contains the given fragment.
inline void expect_error(const std::function<void()>& fn,
                         njump::ErrorKind kind,
                         const std::string& fragment)
{
    try {
        fn();
        FAIL_CHECK("expected an error containing \"" << fragment << "\", none was thrown");
    } catch (const njump::Error& e) {
        CHECK(e.kind() == kind);
        if (!contains(e.what(), fragment))
            FAIL_CHECK("error message \"" << e.what()
                       << "\" does not contain \"" << fragment << "\"");
    }
}

// One pure power on each axis plus a few extra random points: convenient by
// construction, otherwise arbitrary.
inline njump::Support random_convenient_support(std::mt19937& rng, int dim,
                                                std::int64_t max_coord, int extra_points)
{
    std::uniform_int_distribution<std::int64_t> intercept(1, max_coord);
    std::uniform_int_distribution<std::int64_t> coord(0, max_coord);
    std::vector<njump::ExponentVector> pts;
    for (int axis = 0; axis < dim; ++axis) {
        njump::ExponentVector p{};
        p[axis] = intercept(rng);
        pts.push_back(p);
    }
    for (int k = 0; k < extra_points; ++k) {
        njump::ExponentVector p{};
        for (int i = 0; i < dim; ++i)
            p[i] = coord(rng);
        if (p == njump::ExponentVector{})
            continue;
        pts.push_back(p);
    }
    return njump::Support(dim, std::move(pts));
}

} // namespace testutil
