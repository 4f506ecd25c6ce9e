#pragma once

// Sequence files. A document is a JSON object
//   {"ring": "Zmod:6", "convention": "egf-terms", "length": 3, "terms": [1, 0, 5]}
// where terms are JSON integers or literal strings ("-1/2", "3*x^2+x").
// "convention" and "length" may be omitted on input; any other field is an
// error. Output always carries all four fields.

#include "hurwitz/seq.hpp"

#include <string>
#include <string_view>

namespace seqalg {

/// ParseError with a line and column for malformed JSON, with the field or
/// term index otherwise; RingMismatch when a term is not an element of the ring.
Seq parse_seq(std::string_view document);

/// Terms over Z and Z/n are JSON integers while they fit in 64 bits and strings
/// beyond that; terms over Q and polynomial rings are always strings.
std::string serialize_seq(const Seq& s);

}  // namespace seqalg
