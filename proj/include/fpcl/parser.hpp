#ifndef FPCL_PARSER_HPP
#define FPCL_PARSER_HPP

#include <string>

#include "fpcl/formula.hpp"

namespace fpcl {

// Concrete grammar shared by both logics. Atoms are `true`, `false` and port
// identifiers; prefix operators are `!` (fuzzy negation), `neg` and `cl`;
// infix operators in decreasing binding strength:
//
//   {!, neg, cl}  >  &  >  |  >  *  >  #  >  +
//
// All infix operators are left-associative; parentheses group freely. The
// operands of `!`, `&` and `|` must be interaction-logic formulas; everything
// else accepts both layers. Derived forms (`false`, `&`, `*`, `cl`) are
// desugared while parsing. Errors carry a 1-based character position.

PilPtr parse_pil(const std::string& text);
PclPtr parse_pcl(const std::string& text);

}  // namespace fpcl

#endif
