#pragma once

#include "njump/numbers.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace njump {

// Failure categories, in one-to-one correspondence with the CLI exit codes.
enum class ErrorKind {
    parse = 1,          // malformed germ text
    not_convenient = 2, // support misses a coordinate axis
    input_mismatch = 3, // structurally valid input that an operation cannot accept
    internal = 4,       // broken invariant; always a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind)
    {
    }

    ErrorKind kind() const { return kind_; }
    int exit_code() const { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

// A monomial exponent vector. Three slots always; two-variable germs keep the
// third coordinate at zero.
struct ExponentVector {
    std::array<std::int64_t, 3> e{0, 0, 0};

    std::int64_t& operator[](std::size_t i) { return e[i]; }
    std::int64_t operator[](std::size_t i) const { return e[i]; }

    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

inline ExponentVector ev(std::int64_t a, std::int64_t b, std::int64_t c = 0)
{
    return ExponentVector{{a, b, c}};
}

std::string to_string(const ExponentVector& p, int dimension = 3);

// The support of a germ: the set of exponent vectors with nonzero coefficient.
// Coefficients themselves are irrelevant to every quantity computed here, so
// they are dropped at the door. Invariants: dimension is 2 or 3, points are
// sorted, distinct, componentwise nonnegative, never the origin, and for
// dimension 2 the third coordinate is identically zero.
class Support {
public:
    Support(int dimension, std::vector<ExponentVector> points);

    int dimension() const { return dimension_; }
    const std::vector<ExponentVector>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    bool contains(const ExponentVector& p) const;

    // New support with one extra monomial. No-op when already present.
    Support with_point(const ExponentVector& p) const;

    friend bool operator==(const Support&, const Support&) = default;

private:
    int dimension_;
    std::vector<ExponentVector> points_;
};

} // namespace njump
