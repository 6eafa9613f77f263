#pragma once

#include <string>

#include "hopfbundle/moebius.hpp"

namespace hopfbundle {

// Exact expression mini-grammar for command-line points and scalars:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := rational | 'zeta' '(' integer (',' integer)? ')' | '(' expr ')' | '-' atom
//   rational := integer ('/' integer)?
//
// zeta(n) is a primitive n-th root of unity, zeta(n, k) its k-th power.
// Whitespace is skipped everywhere. Throws ParseError with a position on
// malformed input.
CycloNum parse_cyclo(const std::string& text);

// Accepts everything parse_cyclo does, plus the literal "inf".
ProjPoint parse_point(const std::string& text);

}  // namespace hopfbundle
