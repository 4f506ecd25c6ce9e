#pragma once

// Text literals for ring elements: integers, p/q, the ring's variables, with
// +, -, *, /, ^ and parentheses. Multiplication is always explicit. Division is
// allowed only by a unit of the target ring, so "1/2" is fine in Q and Z/7 but
// not in Z. Value::to_string output always parses back to the same value.

#include "hurwitz/ring.hpp"

#include <string_view>
#include <vector>

namespace seqalg {

/// ParseError with a column on malformed input; RingMismatch with a column for
/// well-formed text naming something outside the ring.
Value parse_value(std::string_view text, const Ring& ring);

/// A bracketed, comma separated list such as "[1, x, x^2-1]"; brackets optional.
std::vector<Value> parse_value_list(std::string_view text, const Ring& ring);

}  // namespace seqalg
