#include "fpcl/equivalence.hpp"

#include <algorithm>
#include <cmath>

#include "fpcl/eval.hpp"

namespace fpcl {

namespace {

template <typename Level>
void sort_level(std::vector<Level>& xs) {
    for (Level& x : xs) {
        if constexpr (!std::is_same_v<Level, LiteralSet>) sort_level(x);
    }
    std::sort(xs.begin(), xs.end());
}

}  // namespace

bool nf_equal(const SetRep& a, const SetRep& b) {
    SetRep ca = a;
    SetRep cb = b;
    sort_level(ca);
    sort_level(cb);
    return ca == cb;
}

namespace {

// Algorithm-style nested matching: cardinality guard, then count elements of
// A that match some element of B. On duplicate-free sets the count reaches
// card(A) exactly when the sets are equal.
bool set_eq3(const LiteralSet& a, const LiteralSet& b) {
    if (a.size() != b.size()) return false;
    std::size_t matched = 0;
    for (const auto& x : a)
        for (const auto& y : b)
            if (x == y) ++matched;
    return matched == a.size();
}

bool set_eq2(const MemberRep& a, const MemberRep& b) {
    if (a.size() != b.size()) return false;
    std::size_t matched = 0;
    for (const auto& x : a)
        for (const auto& y : b)
            if (set_eq3(x, y)) ++matched;
    return matched == a.size();
}

bool set_eq1(const GroupRep& a, const GroupRep& b) {
    if (a.size() != b.size()) return false;
    std::size_t matched = 0;
    for (const auto& x : a)
        for (const auto& y : b)
            if (set_eq2(x, y)) ++matched;
    return matched == a.size();
}

}  // namespace

bool nf_equal_reference(const SetRep& a, const SetRep& b) {
    if (a.size() != b.size()) return false;
    std::size_t matched = 0;
    for (const auto& x : a)
        for (const auto& y : b)
            if (set_eq1(x, y)) ++matched;
    return matched == a.size();
}

bool decide_equiv(const PclPtr& z1, const PclPtr& z2,
                  const std::vector<std::string>& ports, NormalizationMode mode) {
    const SetRep s1 = to_set_rep(pcl_normal_form(z1, ports, mode));
    const SetRep s2 = to_set_rep(pcl_normal_form(z2, ports, mode));
    return nf_equal(s1, s2);
}

namespace {

std::vector<std::string> sorted_ports(const std::vector<std::string>& ports) {
    std::vector<std::string> out = ports;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Masks over n elements in canonical (size, then lexicographic index tuple)
// order. The visitor returns false to stop.
void for_each_mask(std::size_t n, std::optional<std::size_t> max_size,
                   const std::function<bool(Mask)>& fn) {
    const std::size_t limit = std::min(max_size.value_or(n), n);
    std::vector<std::size_t> pick;
    for (std::size_t size = 1; size <= limit; ++size) {
        pick.clear();
        for (std::size_t i = 0; i < size; ++i) pick.push_back(i);
        for (;;) {
            Mask m = 0;
            for (std::size_t i : pick) m |= Mask{1} << i;
            if (!fn(m)) return;
            std::size_t i = size;
            while (i > 0) {
                --i;
                if (pick[i] + (size - i) < n) break;
                if (i == 0) {
                    i = size;
                    break;
                }
            }
            if (i == size) break;
            ++pick[i];
            for (std::size_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
}

// Shared driver: evaluates both formulas on every configuration drawn from
// `universe` in canonical order and reports the first mismatch.
EquivVerdict compare_on_universe(const PclPtr& z1, const PclPtr& z2,
                                 const std::vector<Interaction>& universe,
                                 std::optional<std::size_t> max_size,
                                 bool exhaustive) {
    EquivVerdict verdict;
    const std::size_t n = universe.size();
    const bool dense = universe.front().algebra() != AlgebraKind::FuzzyRational &&
                       n <= 14 && !max_size;

    std::optional<Mask> mismatch;
    SparseEvaluator sparse(universe);
    if (dense) {
        DenseEvaluator ev(universe);
        const auto& t1 = ev.table(z1);
        const auto& t2 = ev.table(z2);
        for_each_mask(n, max_size, [&](Mask m) {
            ++verdict.samples_checked;
            if (t1[m] == t2[m]) return true;
            mismatch = m;
            verdict.values = std::make_pair(ev.decode(t1[m]), ev.decode(t2[m]));
            return false;
        });
    } else {
        for_each_mask(n, max_size, [&](Mask m) {
            ++verdict.samples_checked;
            const Value v1 = sparse.eval(z1, m);
            const Value v2 = sparse.eval(z2, m);
            if (v1 == v2) return true;
            mismatch = m;
            verdict.values = std::make_pair(v1, v2);
            return false;
        });
    }
    if (mismatch) {
        verdict.kind = EquivVerdict::Kind::NotEquivalent;
        verdict.witness = sparse.config_for(*mismatch);
        return verdict;
    }
    verdict.kind = exhaustive ? EquivVerdict::Kind::Equivalent
                              : EquivVerdict::Kind::NoCounterexampleFound;
    return verdict;
}

}  // namespace

EquivVerdict oracle_equiv(const PclPtr& z1, const PclPtr& z2,
                          const std::vector<std::string>& ports, AlgebraKind algebra,
                          std::optional<std::size_t> max_config_size) {
    if (algebra == AlgebraKind::FuzzyRational)
        throw DomainError("oracle_equiv needs a finite algebra; use oracle_equiv_fuzzy");
    const auto sorted = sorted_ports(ports);
    const std::size_t carrier = elements(algebra).size();
    double space = 1;
    for (std::size_t i = 0; i < sorted.size(); ++i) space *= static_cast<double>(carrier);
    if (!max_config_size && space > 12)
        throw ResourceError("oracle guard: " + std::to_string(carrier) + "^" +
                            std::to_string(sorted.size()) + " = " +
                            std::to_string(static_cast<long long>(space)) +
                            " interaction maps exceed 12; set max_config_size");
    const auto universe = enumerate_interactions(sorted, algebra);
    // Equivalent means: no mismatch in the checked space (bounded by
    // max_config_size when given).
    return compare_on_universe(z1, z2, universe, max_config_size, /*exhaustive=*/true);
}

EquivVerdict oracle_equiv_fuzzy(const PclPtr& z1, const PclPtr& z2,
                                const std::vector<std::string>& ports,
                                std::int64_t grid_denominator,
                                std::size_t max_config_size) {
    if (grid_denominator < 1) throw DomainError("grid denominator must be >= 1");
    if (max_config_size < 1) throw DomainError("max_config_size must be >= 1");
    const auto sorted = sorted_ports(ports);
    const auto universe = enumerate_interactions(sorted, sample_grid(grid_denominator));
    if (universe.size() > 40)
        throw ResourceError("fuzzy oracle guard: " + std::to_string(universe.size()) +
                            " grid interactions exceed 40");
    // Sampling can refute equivalence but never establish it.
    EquivVerdict verdict =
        compare_on_universe(z1, z2, universe, max_config_size, /*exhaustive=*/false);
    return verdict;
}

bool ConsistencyReport::soundness_discrepancy() const {
    if (!decide) return false;
    for (const auto& run : oracles)
        if (run.verdict.kind == EquivVerdict::Kind::NotEquivalent) return true;
    return false;
}

bool ConsistencyReport::completeness_discrepancy() const {
    if (decide) return false;
    for (const auto& run : oracles)
        if (run.verdict.kind == EquivVerdict::Kind::NotEquivalent) return false;
    return true;
}

const OracleRun* ConsistencyReport::first_witness() const {
    for (const auto& run : oracles)
        if (run.verdict.kind == EquivVerdict::Kind::NotEquivalent) return &run;
    return nullptr;
}

ConsistencyReport cross_check(const PclPtr& z1, const PclPtr& z2,
                              const std::vector<std::string>& ports,
                              NormalizationMode mode) {
    ConsistencyReport report;
    report.mode = mode;
    report.decide = decide_equiv(z1, z2, ports, mode);

    const auto sorted = sorted_ports(ports);
    auto run_finite = [&](AlgebraKind kind) {
        const std::size_t carrier = elements(kind).size();
        double space = 1;
        for (std::size_t i = 0; i < sorted.size(); ++i)
            space *= static_cast<double>(carrier);
        std::optional<std::size_t> cap;
        std::string domain = algebra_name(kind);
        if (space > 12) {
            cap = 2;
            domain += " (size <= 2)";
        }
        report.oracles.push_back({domain, oracle_equiv(z1, z2, sorted, kind, cap)});
    };

    switch (mode) {
        case NormalizationMode::DeMorgan:
            run_finite(AlgebraKind::Bool2);
            run_finite(AlgebraKind::Kleene3);
            run_finite(AlgebraKind::Four);
            break;
        case NormalizationMode::Kleene:
            run_finite(AlgebraKind::Bool2);
            run_finite(AlgebraKind::Kleene3);
            report.oracles.push_back(
                {"fuzzy d=4 (size <= 2)", oracle_equiv_fuzzy(z1, z2, sorted, 4, 2)});
            break;
        case NormalizationMode::Boolean:
            run_finite(AlgebraKind::Bool2);
            break;
    }
    return report;
}

}  // namespace fpcl
