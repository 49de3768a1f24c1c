#ifndef FPCL_PRINTER_HPP
#define FPCL_PRINTER_HPP

#include <string>

#include "fpcl/formula.hpp"

namespace fpcl {

// Prints a formula with minimal parentheses. The output reparses to a
// structurally identical tree. At the interaction level the derived forms
// `false` and `&` are recognized and printed as such; configuration-level
// trees print with the primitive connectives (`neg`, `+`, `#`) only.
std::string print_formula(const PilFormula& f);
std::string print_formula(const PclFormula& z);

inline std::string print_formula(const PilPtr& f) { return print_formula(*f); }
inline std::string print_formula(const PclPtr& z) { return print_formula(*z); }

}  // namespace fpcl

#endif
