#ifndef HERMDEG_PARSER_HPP
#define HERMDEG_PARSER_HPP

#include <string>

#include "hermdeg/poly.hpp"

namespace hermdeg::poly {

// Polynomial expression grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*      ('/' needs a constant divisor)
//   factor := atom ('^' uint)?
//   atom   := uint | 'i' | variable | '(' expr ')'
// Errors carry 1-based line/column.
PolyQ parse_poly(const std::string& text, const RingPtr& ring, int line_offset = 0);

// Parse a single coefficient (no ring variables allowed).
coeff::GaussianRational parse_coefficient(const std::string& text);

std::string to_string(const PolyQ& f);
std::string to_string(const PolyP& f);

} // namespace hermdeg::poly

#endif
