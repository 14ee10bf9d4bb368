#pragma once

#include "njump/types.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace njump {

// Parses a polynomial germ in the variables x, y, z into its support.
//
// Grammar, informally:
//   germ  := ['+'|'-'] term (('+'|'-') term)*
//   term  := factor (['*'] factor)*
//   factor:= integer ['/' integer] | var ['^' integer]
//   var   := 'x' | 'y' | 'z'
// Whitespace is free. "2x^3y" and "2*x^3*y" are the same term.
//
// Rules enforced:
//   - coefficients are optional and default to 1; an explicit zero
//     coefficient is rejected,
//   - exponents are nonnegative integers,
//   - constant terms are rejected (a germ must vanish at the origin),
//   - repeated monomials are allowed only when their coefficients do not
//     sum to zero exactly; an exact cancellation leaves the membership of
//     the monomial undecidable and is reported as an error.
//
// `dimension`, when given, must be 2 or 3. With dimension 2 the variable z
// is rejected. When omitted, the germ is read as a three-variable germ.
Support parse_germ(std::string_view text, std::optional<int> dimension = std::nullopt);

// True when the support touches every coordinate axis, i.e. contains a pure
// power of each variable.
bool is_convenient(const Support& s);

// Sorted, coefficient-free textual form; parse_germ(to_canonical_string(s))
// reproduces s exactly.
std::string to_canonical_string(const Support& s);

} // namespace njump
