#ifndef FPCL_EQUIVALENCE_HPP
#define FPCL_EQUIVALENCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpcl/algebra.hpp"
#include "fpcl/formula.hpp"
#include "fpcl/interaction.hpp"
#include "fpcl/normal_form.hpp"

namespace fpcl {

// Equality of nested-set representations (equality as sets at every level).
// `nf_equal` sorts canonically and compares; `nf_equal_reference` is the
// direct cardinality-guarded nested-loop matching kept for differential
// testing. Both implement the same contract.
bool nf_equal(const SetRep& a, const SetRep& b);
bool nf_equal_reference(const SetRep& a, const SetRep& b);

// Normalizes both formulas in `mode` and compares the nested-set
// representations. A true answer is sound for every algebra the mode covers;
// callers interested in algebra-relative equivalence check DeMorgan mode
// first, then Kleene/Boolean.
bool decide_equiv(const PclPtr& z1, const PclPtr& z2,
                  const std::vector<std::string>& ports, NormalizationMode mode);

struct EquivVerdict {
    enum class Kind { Equivalent, NotEquivalent, NoCounterexampleFound };

    Kind kind = Kind::Equivalent;
    std::optional<Configuration> witness;             // NotEquivalent
    std::optional<std::pair<Value, Value>> values;    // NotEquivalent
    std::size_t samples_checked = 0;
};

// Exhaustive evaluation of both formulas on every configuration over a finite
// algebra (all sizes when max_config_size is absent, guarded by
// |K|^|P| <= 12). The first witness in canonical order (size, then
// lexicographic) is reported.
EquivVerdict oracle_equiv(const PclPtr& z1, const PclPtr& z2,
                          const std::vector<std::string>& ports, AlgebraKind algebra,
                          std::optional<std::size_t> max_config_size = std::nullopt);

// Grid sampling for the fuzzy algebra: never claims Equivalent, only
// NotEquivalent with a witness or NoCounterexampleFound.
EquivVerdict oracle_equiv_fuzzy(const PclPtr& z1, const PclPtr& z2,
                                const std::vector<std::string>& ports,
                                std::int64_t grid_denominator,
                                std::size_t max_config_size);

struct OracleRun {
    std::string domain;  // e.g. "kleene3", "four (size <= 2)", "fuzzy d=4 (size <= 2)"
    EquivVerdict verdict;
};

struct ConsistencyReport {
    NormalizationMode mode = NormalizationMode::DeMorgan;
    bool decide = false;
    std::vector<OracleRun> oracles;

    // decide_equiv said true but an oracle found a witness.
    bool soundness_discrepancy() const;
    // decide_equiv said false and no oracle could distinguish the formulas.
    bool completeness_discrepancy() const;
    const OracleRun* first_witness() const;
};

// Runs decide_equiv plus the oracles matching the mode: Bool2/Kleene3/Four
// for DeMorgan, Bool2/Kleene3 plus the fuzzy grid for Kleene, Bool2 for
// Boolean. Oracles whose full enumeration would exceed the guard run with
// configuration size capped at 2 (noted in the domain string).
ConsistencyReport cross_check(const PclPtr& z1, const PclPtr& z2,
                              const std::vector<std::string>& ports,
                              NormalizationMode mode);

}  // namespace fpcl

#endif
