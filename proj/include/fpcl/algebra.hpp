#ifndef FPCL_ALGEBRA_HPP
#define FPCL_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpcl/error.hpp"
#include "fpcl/rational.hpp"

namespace fpcl {

// The four concrete De Morgan algebras supported by the library:
//
//   Bool2          {0, 1}          the two element Boolean algebra
//   Kleene3        {0, u, 1}       the three element Kleene algebra (u = u-bar)
//   Four           {0, u, w, 1}    the four element algebra (u, w self-complementary,
//                                  u v w = 1, u ^ w = 0)
//   FuzzyRational  [0, 1] ∩ Q      min/max with complement k -> 1 - k, restricted
//                                  to exact rationals so equality stays decidable
enum class AlgebraKind { Bool2, Kleene3, Four, FuzzyRational };

enum class AlgebraClass { DeMorgan, Kleene, Boolean };

const char* algebra_name(AlgebraKind kind);  // "bool2" | "kleene3" | "four" | "fuzzy"
std::optional<AlgebraKind> algebra_from_name(std::string_view name);
const char* class_name(AlgebraClass cls);    // "demorgan" | "kleene" | "boolean"

// One element of one of the four algebras. Elements carry their algebra and
// may only be combined with elements of the same algebra. Finite elements are
// stored as a code in the canonical positional order 0 < u < w < 1 (used for
// deterministic printing and enumeration; it is not the lattice order).
class Value {
public:
    Value() = default;

    static Value zero(AlgebraKind kind);
    static Value one(AlgebraKind kind);
    static Value u(AlgebraKind kind);  // Kleene3 or Four
    static Value w();                  // Four only
    static Value fuzzy(const Rational& q);  // requires 0 <= q <= 1
    static Value from_code(AlgebraKind kind, std::uint8_t code);

    // Parses "0"/"1" (any algebra), "u"/"w" (where they exist), and for the
    // fuzzy algebra any decimal or "a/b" rational string in [0, 1].
    static Value parse(AlgebraKind kind, const std::string& text);

    AlgebraKind kind() const { return kind_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_finite() const { return kind_ != AlgebraKind::FuzzyRational; }

    // Positional code of a finite element (0 -> 0, u -> 1, w -> 2, 1 -> 3).
    std::uint8_t code() const;
    const Rational& rational() const;

    std::string str() const;

    friend bool operator==(const Value& a, const Value& b);
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

    // Canonical positional order within one algebra (printing/enumeration).
    static bool canonical_less(const Value& a, const Value& b);

private:
    AlgebraKind kind_ = AlgebraKind::Bool2;
    std::uint8_t code_ = 0;  // finite algebras
    Rational q_;             // fuzzy algebra
};

// Lattice operations. Mixed-algebra operands raise DomainError.
Value join(const Value& a, const Value& b);
Value meet(const Value& a, const Value& b);
Value complement(const Value& a);
bool leq(const Value& a, const Value& b);  // join(a, b) == b

// Full carrier of a finite algebra in canonical order. FuzzyRational raises
// DomainError ("infinite carrier"); use sample_grid instead.
std::vector<Value> elements(AlgebraKind kind);

// Fuzzy grid {0, 1/d, ..., 1}; closed under the complement k -> 1 - k.
std::vector<Value> sample_grid(std::int64_t denominator);

struct LawResult {
    std::string name;
    bool holds = true;
    std::string counterexample;  // "(a, b)"-style witness when !holds
};

struct LawReport {
    std::vector<LawResult> laws;
    AlgebraClass classification = AlgebraClass::DeMorgan;

    bool all_de_morgan_laws_hold() const;
    const LawResult* find(std::string_view name) const;
};

// Exhaustive law check over a finite carrier (all pairs/triples).
LawReport check_laws(const std::vector<Value>& carrier);

// Convenience: finite algebras use their full carrier; the fuzzy algebra is
// checked on sample_grid(fuzzy_grid_denominator).
LawReport check_laws(AlgebraKind kind, std::int64_t fuzzy_grid_denominator = 4);

// Bool2 -> Boolean, Kleene3 -> Kleene, Four -> DeMorgan (all by exhaustive
// check). FuzzyRational is a Kleene algebra; the claim is spot-verified on a
// sample grid rather than proved.
AlgebraClass classify(AlgebraKind kind);

}  // namespace fpcl

#endif
