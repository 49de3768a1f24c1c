#ifndef FPCL_NORMAL_FORM_HPP
#define FPCL_NORMAL_FORM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpcl/formula.hpp"

namespace fpcl {

// ── Normal-form data ────────────────────────────────────────────────────────
//
// An f-monomial is a fuzzy conjunction of ports and negated ports, stored as
// its positive and negative port sets. The two sets may intersect
// (contradictory ports); together they are nonempty.
struct Monomial {
    std::vector<std::string> pos;  // sorted, unique
    std::vector<std::string> neg;  // sorted, unique

    bool contradictory() const;  // pos and neg intersect

    // Literal tokens ("p" / "!p") in canonical order: by port, positive
    // literal before negative.
    std::vector<std::string> literals() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.pos == b.pos && a.neg == b.neg;
    }
    friend bool operator<(const Monomial& a, const Monomial& b);
};

// Does every literal of `a` occur in `b`?
bool literal_subset(const Monomial& a, const Monomial& b);

// An interaction-level formula in fpil-normal form: true, false, or a
// disjunction of pairwise distinct monomials with no monomial whose literal
// set strictly contains another's.
struct FpilNF {
    enum class Kind { True, False, Monomials };

    Kind kind = Kind::False;
    std::vector<Monomial> monomials;  // sorted, unique (Monomials only)

    static FpilNF make_true() { return FpilNF{Kind::True, {}}; }
    static FpilNF make_false() { return FpilNF{Kind::False, {}}; }

    friend bool operator==(const FpilNF& a, const FpilNF& b) {
        return a.kind == b.kind && a.monomials == b.monomials;
    }
    friend bool operator<(const FpilNF& a, const FpilNF& b);
};

// One coalescing group: a nonempty set of pairwise distinct members, none of
// them false. A `true` member arises from closures.
struct Group {
    std::vector<FpilNF> members;  // sorted, unique

    friend bool operator==(const Group& a, const Group& b) {
        return a.members == b.members;
    }
    friend bool operator<(const Group& a, const Group& b) {
        return a.members < b.members;
    }
};

// A configuration-level formula in normal form: true, false, or a sum of
// pairwise distinct groups. No group in a sum is exactly {true} (that sum
// would have collapsed to true).
struct PclNF {
    enum class Kind { True, False, Sum };

    Kind kind = Kind::False;
    std::vector<Group> groups;  // sorted, unique (Sum only)

    static PclNF make_true() { return PclNF{Kind::True, {}}; }
    static PclNF make_false() { return PclNF{Kind::False, {}}; }

    friend bool operator==(const PclNF& a, const PclNF& b) {
        return a.kind == b.kind && a.groups == b.groups;
    }
};

// Which extra laws the construction may use. Kleene mode is sound for Bool2,
// Kleene3 and the fuzzy algebra; Boolean mode only for Boolean algebras;
// DeMorgan mode for every De Morgan algebra.
enum class NormalizationMode { DeMorgan, Kleene, Boolean };

const char* mode_name(NormalizationMode mode);
std::optional<NormalizationMode> mode_from_name(std::string_view name);

// ── Construction ────────────────────────────────────────────────────────────

// Negation normal form: negations only on atoms (or true, forming `false`),
// connectives | and the derived &.
PilPtr pil_nnf(const PilPtr& f);

// NNF, distribute & over |, collect monomials, fold constants, dedupe and
// absorb, then the mode hook (Kleene expansion / Boolean minterms).
FpilNF pil_normal_form(const PilPtr& f, const std::vector<std::string>& ports,
                       NormalizationMode mode);

// Multiplies a contradictory monomial by (p | !p) for every port it does not
// mention and distributes; the result mentions every port. Sound over Kleene
// algebras. Calling it on a non-contradictory monomial is a contract
// violation (DomainError).
std::vector<Monomial> kleene_expand(const Monomial& m,
                                    const std::vector<std::string>& ports);

// Boolean-algebra canonicalization: drops contradictory monomials, expands
// the rest to full minterms; all minterms present -> true, none -> false.
FpilNF boolean_canonicalize(const std::vector<Monomial>& monomials,
                            const std::vector<std::string>& ports);

struct NormalizeStats {
    std::size_t pil_canonicalizations = 0;
    std::size_t monomials_built = 0;
    std::size_t group_pairs = 0;

    std::size_t total() const {
        return pil_canonicalizations + monomials_built + group_pairs;
    }
};

PclNF pcl_normal_form(const PclPtr& z, const std::vector<std::string>& ports,
                      NormalizationMode mode, NormalizeStats* stats = nullptr);

// ── Nested-set representation ───────────────────────────────────────────────
//
// Literal set of one monomial -> member -> group -> sum, each level a
// canonically sorted vector. true/false normal forms map to the singleton
// nestings {{{{true}}}} / {{{{false}}}}; a true member maps to {true}.
using LiteralSet = std::vector<std::string>;
using MemberRep = std::vector<LiteralSet>;
using GroupRep = std::vector<MemberRep>;
using SetRep = std::vector<GroupRep>;

SetRep to_set_rep(const PclNF& nf);
std::string set_rep_json(const SetRep& rep);  // nested arrays

// ── Utilities ───────────────────────────────────────────────────────────────

// Throws Error when a structural invariant is violated.
void validate(const PclNF& nf);

PilPtr fpilnf_to_pil(const FpilNF& nf);
PclPtr nf_to_formula(const PclNF& nf);
std::string print_normal_form(const PclNF& nf);

}  // namespace fpcl

#endif
