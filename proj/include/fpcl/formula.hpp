#ifndef FPCL_FORMULA_HPP
#define FPCL_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

#include "fpcl/error.hpp"

namespace fpcl {

// ── Interaction-logic formulas ──────────────────────────────────────────────
//
// Primitive connectives only: true, ports, fuzzy negation (!) and fuzzy
// disjunction (|). The derived forms are eliminated at construction:
//
//   a & b   ==  !(!a | !b)
//   false   ==  !true
//
// Trees are immutable and shared; helpers below are the only constructors.

struct PilFormula;
using PilPtr = std::shared_ptr<const PilFormula>;

struct PilFormula {
    enum class Kind { True, Atom, Not, Or };

    Kind kind;
    std::string port;  // Atom
    PilPtr lhs, rhs;   // Not: lhs only
};

PilPtr pil_true();
PilPtr pil_false();  // !true
PilPtr pil_atom(std::string port);
PilPtr pil_not(PilPtr f);
PilPtr pil_or(PilPtr a, PilPtr b);
PilPtr pil_and(PilPtr a, PilPtr b);  // desugars

// Left folds; a singleton list returns its element, an empty list is an error.
PilPtr big_or(const std::vector<PilPtr>& fs);
PilPtr big_and(const std::vector<PilPtr>& fs);

bool is_pil_false(const PilFormula& f);  // matches !true
// Matches the desugared a & b pattern; fills the operands on success.
bool match_pil_and(const PilFormula& f, PilPtr* a, PilPtr* b);

bool equal(const PilFormula& a, const PilFormula& b);
inline bool equal(const PilPtr& a, const PilPtr& b) { return equal(*a, *b); }

std::vector<std::string> collect_ports(const PilFormula& f);  // sorted, unique

// ── Configuration-logic formulas ────────────────────────────────────────────
//
// zeta ::= phi | neg zeta | zeta + zeta | zeta # zeta
//
// with derived forms eliminated at construction:
//
//   a * b  ==  neg(neg a + neg b)
//   cl a   ==  a # true

struct PclFormula;
using PclPtr = std::shared_ptr<const PclFormula>;

struct PclFormula {
    enum class Kind { Pil, Neg, Plus, Coalesce };

    Kind kind;
    PilPtr pil;        // Pil
    PclPtr lhs, rhs;   // Neg: lhs only
};

PclPtr pcl_pil(PilPtr f);
PclPtr pcl_neg(PclPtr z);
PclPtr pcl_plus(PclPtr a, PclPtr b);
PclPtr pcl_coalesce(PclPtr a, PclPtr b);
PclPtr pcl_times(PclPtr a, PclPtr b);  // desugars
PclPtr pcl_closure(PclPtr z);          // desugars

PclPtr big_plus(const std::vector<PclPtr>& zs);
PclPtr big_coalesce(const std::vector<PclPtr>& zs);
PclPtr big_times(const std::vector<PclPtr>& zs);

// Matches the desugared a * b pattern.
bool match_pcl_times(const PclFormula& z, PclPtr* a, PclPtr* b);
// Matches z # true.
bool match_pcl_closure(const PclFormula& z, PclPtr* a);

bool equal(const PclFormula& a, const PclFormula& b);
inline bool equal(const PclPtr& a, const PclPtr& b) { return equal(*a, *b); }

std::vector<std::string> collect_ports(const PclFormula& z);

// Port names: [A-Za-z_][A-Za-z0-9_]* excluding the keywords
// {true, false, neg, cl}. Throws DomainError when invalid.
void validate_port_name(const std::string& name);
bool is_keyword(const std::string& word);

}  // namespace fpcl

#endif
