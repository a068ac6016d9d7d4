#pragma once

#include <string>
#include <string_view>

#include "fplab/poly.hpp"

namespace fplab {

/// Parses
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := '(' expr ')' | variable | uint
/// Integer literals are reduced mod p. Errors report a 1-based column,
/// offset by `column_offset` when the text is a slice of a longer line.
Polynomial parse_poly(std::string_view text, const Ring& ring, std::size_t line = 0, std::size_t column_offset = 0);

/// Canonical text form, e.g. "x^2*y + 3*z + 1"; parses back to the same polynomial.
std::string format_poly(const Polynomial& f);
std::string format_monomial(const Monomial& m, const RingCtx& ring);

}  // namespace fplab
