#include "njump/types.hpp"

#include <algorithm>
#include <sstream>

namespace njump {

std::string to_string(const ExponentVector& p, int dimension)
{
    std::ostringstream out;
    out << '(';
    for (int i = 0; i < dimension; ++i) {
        if (i)
            out << ',';
        out << p[i];
    }
    out << ')';
    return out.str();
}

Support::Support(int dimension, std::vector<ExponentVector> points)
    : dimension_(dimension), points_(std::move(points))
{
    if (dimension_ != 2 && dimension_ != 3)
        fail(ErrorKind::input_mismatch, "support dimension must be 2 or 3");
    if (points_.empty())
        fail(ErrorKind::input_mismatch, "support must contain at least one monomial");

    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());

    for (const auto& p : points_) {
        if (p[0] < 0 || p[1] < 0 || p[2] < 0)
            fail(ErrorKind::input_mismatch,
                 "support point " + to_string(p) + " has a negative coordinate");
        if (p == ExponentVector{})
            fail(ErrorKind::input_mismatch, "support must not contain the origin");
        if (dimension_ == 2 && p[2] != 0)
            fail(ErrorKind::input_mismatch,
                 "support point " + to_string(p) + " uses the third variable in dimension 2");
    }
}

bool Support::contains(const ExponentVector& p) const
{
    return std::binary_search(points_.begin(), points_.end(), p);
}

Support Support::with_point(const ExponentVector& p) const
{
    if (contains(p))
        return *this;
    auto pts = points_;
    pts.push_back(p);
    return Support(dimension_, std::move(pts));
}

} // namespace njump
