#ifndef BIHARM_POLY_IO_HPP
#define BIHARM_POLY_IO_HPP

#include <string>
#include <vector>

#include "biharm/multipoly.hpp"

namespace biharm {

// Grammar (whitespace-insensitive):
//   expr     := ['+'|'-']? term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' natural)?
//   base     := rational | variable | '(' expr ')'
//   rational := integer ('/' positive-integer)?
//   variable := [a-zA-Z][a-zA-Z0-9_]*
// Unknown variables and malformed input raise ParseError with the byte
// offset of the offending character.
Poly parse_polynomial(const std::string& text, const VarTablePtr& table);

// Deterministic rendering in descending grlex order; output re-parses to
// the same polynomial.  The zero polynomial prints as "0".
std::string format_polynomial(const Poly& p);

// Rendering for quadratic-extension coefficients (coefficients are
// parenthesised); display only, not covered by the parse grammar.
std::string format_polynomial(const PolyQE& p);

// Names appearing in the text in order of first occurrence; convenience
// for building a VarTable from a user-supplied expression.
std::vector<std::string> scan_variable_names(const std::string& text);

}  // namespace biharm

#endif
