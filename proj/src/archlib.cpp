#include "fpcl/archlib.hpp"

#include "fpcl/eval.hpp"

namespace fpcl {

namespace {

// Nonempty subsets of {0, ..., n-1} ordered by size, then lexicographically.
std::vector<std::vector<int>> nonempty_subsets(const std::vector<int>& items) {
    std::vector<std::vector<int>> out;
    const std::size_t n = items.size();
    for (std::size_t size = 1; size <= n; ++size) {
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        for (;;) {
            std::vector<int> subset;
            subset.reserve(size);
            for (std::size_t i : pick) subset.push_back(items[i]);
            out.push_back(std::move(subset));
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
    return out;
}

std::string rp(int j) { return "r" + std::to_string(j); }
std::string sp(int j) { return "s" + std::to_string(j); }
std::string mp(int j) { return "m" + std::to_string(j); }

}  // namespace

ArchFormula p2p_formula(int components) {
    if (components < 2) throw DomainError("p2p needs at least 2 components");
    const int n = components;

    std::vector<int> all;
    for (int j = 1; j <= n; ++j) all.push_back(j);

    // phi_{j,j'}: j receives, j' sends, both reverse ports and every other
    // component's ports are negated.
    auto phi = [&](int j, int jp) {
        std::vector<PilPtr> factors{pil_atom(rp(j)), pil_atom(sp(jp)),
                                    pil_not(pil_atom(sp(j))), pil_not(pil_atom(rp(jp)))};
        for (int other : all) {
            if (other == j || other == jp) continue;
            factors.push_back(pil_not(pil_atom(rp(other))));
            factors.push_back(pil_not(pil_atom(sp(other))));
        }
        return big_and(factors);
    };

    // zeta_j: sum over nonempty partner sets of the coalescing of the pairs.
    auto zeta_j = [&](int j) {
        std::vector<int> partners;
        for (int other : all)
            if (other != j) partners.push_back(other);
        std::vector<PclPtr> summands;
        for (const auto& subset : nonempty_subsets(partners)) {
            std::vector<PclPtr> pairs;
            for (int jp : subset) pairs.push_back(pcl_pil(phi(j, jp)));
            summands.push_back(big_coalesce(pairs));
        }
        return big_plus(summands);
    };

    std::vector<PclPtr> top;
    for (const auto& subset : nonempty_subsets(all)) {
        std::vector<PclPtr> zetas;
        for (int j : subset) zetas.push_back(zeta_j(j));
        top.push_back(big_coalesce(zetas));
    }

    ArchFormula result;
    result.formula = big_plus(top);
    for (int j = 1; j <= n; ++j) result.ports.push_back(rp(j));
    for (int j = 1; j <= n; ++j) result.ports.push_back(sp(j));
    return result;
}

ArchFormula master_slave_formula(int masters, int slaves) {
    if (masters < 1 || slaves < 1)
        throw DomainError("master/slave needs at least one master and one slave");

    // phi_{s_k, m_i}: the pair's ports are on, every other slave then master
    // port is negated. Built with the fPIL conjunction (equivalent to the
    // configuration-level product on interaction formulas).
    auto phi = [&](int k, int i) {
        std::vector<PilPtr> factors{pil_atom(sp(k)), pil_atom(mp(i))};
        for (int other = 1; other <= slaves; ++other)
            if (other != k) factors.push_back(pil_not(pil_atom(sp(other))));
        for (int other = 1; other <= masters; ++other)
            if (other != i) factors.push_back(pil_not(pil_atom(mp(other))));
        return big_and(factors);
    };

    std::vector<PclPtr> per_master;
    for (int i = 1; i <= masters; ++i) {
        std::vector<PclPtr> choices;
        for (int k = 1; k <= slaves; ++k) choices.push_back(pcl_pil(phi(k, i)));
        per_master.push_back(big_plus(choices));
    }

    ArchFormula result;
    result.formula = big_coalesce(per_master);
    for (int i = 1; i <= masters; ++i) result.ports.push_back(mp(i));
    for (int k = 1; k <= slaves; ++k) result.ports.push_back(sp(k));
    return result;
}

Value uncertainty(const PclPtr& z, const Configuration& g) {
    return eval_closure(z, g);
}

}  // namespace fpcl
