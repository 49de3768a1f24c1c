#ifndef FPCL_EVAL_HPP
#define FPCL_EVAL_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fpcl/algebra.hpp"
#include "fpcl/formula.hpp"
#include "fpcl/interaction.hpp"
#include "fpcl/normal_form.hpp"

namespace fpcl {

// ── One-shot evaluation ─────────────────────────────────────────────────────

Value eval_pil(const PilPtr& f, const Interaction& a);
Value eval_pil_on_config(const PilPtr& f, const Configuration& g);
Value eval_pcl(const PclPtr& z, const Configuration& g);

// Join of eval_pcl(z, g') over every nonempty subset g' of g. Equal to
// eval_pcl(z # true, g), which goes through the cover machinery instead.
Value eval_closure(const PclPtr& z, const Configuration& g);

// All ordered pairs (g1, g2) of nonempty subsets with g1 ∪ g2 = g. There are
// exactly 3^|g| - 2 of them.
std::vector<std::pair<Configuration, Configuration>> enumerate_covers(
    const Configuration& g);

// ── Batch evaluation over subsets of a universe ─────────────────────────────
//
// Both evaluators fix a universe of interactions (all over one port set and
// algebra) and evaluate formulas on sub-configurations given as bitmasks
// (bit i = interactions()[i]).

using Mask = std::uint64_t;

// Memoized recursion; the coalescing clause enumerates covers directly.
// Works for every algebra. Intended for bounded configuration sizes.
class SparseEvaluator {
public:
    explicit SparseEvaluator(std::vector<Interaction> universe);

    const std::vector<Interaction>& interactions() const { return universe_; }
    Mask full_mask() const { return universe_.size() == 64 ? ~Mask{0} : (Mask{1} << universe_.size()) - 1; }

    Value eval(const PclPtr& z, Mask config);
    Value closure(const PclPtr& z, Mask config);
    Configuration config_for(Mask mask) const;

private:
    struct Key {
        const void* node;
        Mask mask;
        bool operator==(const Key& o) const { return node == o.node && mask == o.mask; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return std::hash<const void*>()(k.node) ^
                   std::hash<Mask>()(k.mask * 0x9e3779b97f4a7c15ULL);
        }
    };

    Value pil_value(const PilFormula* f, std::size_t index);
    Value eval_node(const PclFormula* z, Mask mask);

    std::vector<Interaction> universe_;
    AlgebraKind kind_;
    std::unordered_map<Key, Value, KeyHash> memo_;
    std::unordered_map<const PilFormula*, std::vector<Value>> pil_memo_;
};

// Full value tables over every subset of the universe, for finite algebras
// with at most 20 interactions. Values are stored as positional codes.
//
// The coalescing clause is computed per join-irreducible element k of the
// algebra: the value on a mask is >= k exactly when the mask splits into two
// nonempty parts with both operand values >= k, and the number of such
// ordered splits is a covering product of indicator tables, obtained with
// subset zeta/Moebius transforms over integer counts.
class DenseEvaluator {
public:
    explicit DenseEvaluator(std::vector<Interaction> universe);

    using Table = std::vector<std::uint8_t>;  // size 2^n, positional codes

    const std::vector<Interaction>& interactions() const { return universe_; }
    std::size_t size() const { return universe_.size(); }

    const Table& table(const PclPtr& z);
    Value value(const PclPtr& z, Mask mask);

    // Direct evaluation of a normal form, bypassing the cover recursion: a
    // group of interaction-level members reaches >= k exactly when every
    // member has a witness inside the mask and the witnesses cover the mask.
    Table nf_table(const PclNF& nf) const;

    Value decode(std::uint8_t code) const { return Value::from_code(kind_, code); }

private:
    const Table& node_table(const PclFormula* z);
    Table pil_table(const PilFormula* f) const;
    Table coalesce_tables(const Table& a, const Table& b) const;
    std::vector<std::uint8_t> member_codes(const FpilNF& member) const;

    std::vector<Interaction> universe_;
    AlgebraKind kind_;
    std::size_t n_ = 0;
    std::uint8_t join_[4][4] = {};
    std::uint8_t meet_[4][4] = {};
    std::uint8_t compl_[4] = {};
    std::uint8_t one_code_ = 0;
    std::vector<std::uint8_t> ji_;  // join-irreducible codes
    std::unordered_map<const PclFormula*, Table> tables_;
};

}  // namespace fpcl

#endif
