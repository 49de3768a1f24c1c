#include "fpcl/eval.hpp"

#include <algorithm>
#include <bit>

namespace fpcl {

namespace {

void require_ports_covered(const std::vector<std::string>& formula_ports,
                           const std::vector<std::string>& declared) {
    for (const auto& p : formula_ports) {
        if (!std::binary_search(declared.begin(), declared.end(), p))
            throw DomainError("formula uses undeclared port '" + p + "'");
    }
}

Value eval_pil_node(const PilFormula& f, const Interaction& a) {
    switch (f.kind) {
        case PilFormula::Kind::True: return Value::one(a.algebra());
        case PilFormula::Kind::Atom: return a.at(f.port);
        case PilFormula::Kind::Not: return complement(eval_pil_node(*f.lhs, a));
        case PilFormula::Kind::Or:
            return join(eval_pil_node(*f.lhs, a), eval_pil_node(*f.rhs, a));
    }
    throw Error("unreachable");
}

}  // namespace

Value eval_pil(const PilPtr& f, const Interaction& a) {
    require_ports_covered(collect_ports(*f), a.ports());
    return eval_pil_node(*f, a);
}

Value eval_pil_on_config(const PilPtr& f, const Configuration& g) {
    require_ports_covered(collect_ports(*f), g.ports());
    Value acc = eval_pil_node(*f, g.members().front());
    for (std::size_t i = 1; i < g.size(); ++i)
        acc = meet(acc, eval_pil_node(*f, g.members()[i]));
    return acc;
}

Value eval_pcl(const PclPtr& z, const Configuration& g) {
    require_ports_covered(collect_ports(*z), g.ports());
    SparseEvaluator ev(g.members());
    return ev.eval(z, ev.full_mask());
}

Value eval_closure(const PclPtr& z, const Configuration& g) {
    require_ports_covered(collect_ports(*z), g.ports());
    SparseEvaluator ev(g.members());
    return ev.closure(z, ev.full_mask());
}

std::vector<std::pair<Configuration, Configuration>> enumerate_covers(
    const Configuration& g) {
    const std::size_t n = g.size();
    if (n > 12)
        throw ResourceError("cover enumeration over " + std::to_string(n) +
                            " interactions (3^n pairs) exceeds the guard of 12");
    const Mask full = (Mask{1} << n) - 1;
    auto pick = [&](Mask mask) {
        std::vector<Interaction> members;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) members.push_back(g.members()[i]);
        return Configuration::make(std::move(members));
    };

    std::vector<std::pair<Configuration, Configuration>> covers;
    for (Mask left = full;; left = (left - 1) & full) {
        if (left != 0) {
            const Mask rest = full & ~left;
            for (Mask extra = left;; extra = (extra - 1) & left) {
                const Mask right = rest | extra;
                if (right != 0) covers.emplace_back(pick(left), pick(right));
                if (extra == 0) break;
            }
        }
        if (left == 0) break;
    }
    return covers;
}

// ── SparseEvaluator ─────────────────────────────────────────────────────────

SparseEvaluator::SparseEvaluator(std::vector<Interaction> universe)
    : universe_(std::move(universe)) {
    if (universe_.empty()) throw DomainError("evaluator needs a nonempty universe");
    if (universe_.size() > 62)
        throw ResourceError("universe of " + std::to_string(universe_.size()) +
                            " interactions exceeds the mask width");
    kind_ = universe_.front().algebra();
    for (const auto& m : universe_) {
        if (m.ports() != universe_.front().ports() || m.algebra() != kind_)
            throw DomainError("universe members must share one port set and algebra");
    }
}

Configuration SparseEvaluator::config_for(Mask mask) const {
    std::vector<Interaction> members;
    for (std::size_t i = 0; i < universe_.size(); ++i)
        if (mask >> i & 1) members.push_back(universe_[i]);
    return Configuration::make(std::move(members));
}

Value SparseEvaluator::pil_value(const PilFormula* f, std::size_t index) {
    auto [it, inserted] = pil_memo_.try_emplace(f);
    if (inserted) {
        it->second.reserve(universe_.size());
        for (const auto& a : universe_) it->second.push_back(eval_pil_node(*f, a));
    }
    return it->second[index];
}

Value SparseEvaluator::eval(const PclPtr& z, Mask config) {
    if (config == 0) throw DomainError("empty configuration mask");
    return eval_node(z.get(), config);
}

Value SparseEvaluator::closure(const PclPtr& z, Mask config) {
    if (config == 0) throw DomainError("empty configuration mask");
    Value acc = Value::zero(kind_);
    const Value top = Value::one(kind_);
    for (Mask sub = config;; sub = (sub - 1) & config) {
        if (sub != 0) {
            acc = join(acc, eval_node(z.get(), sub));
            if (acc == top) break;
        }
        if (sub == 0) break;
    }
    return acc;
}

Value SparseEvaluator::eval_node(const PclFormula* z, Mask mask) {
    const Key key{z, mask};
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

    Value result = Value::zero(kind_);
    switch (z->kind) {
        case PclFormula::Kind::Pil: {
            const PilFormula* f = z->pil.get();
            Mask rest = mask;
            bool first = true;
            while (rest) {
                const auto index = static_cast<std::size_t>(std::countr_zero(rest));
                rest &= rest - 1;
                const Value v = pil_value(f, index);
                result = first ? v : meet(result, v);
                first = false;
            }
            break;
        }
        case PclFormula::Kind::Neg:
            result = complement(eval_node(z->lhs.get(), mask));
            break;
        case PclFormula::Kind::Plus:
            result = join(eval_node(z->lhs.get(), mask),
                          eval_node(z->rhs.get(), mask));
            break;
        case PclFormula::Kind::Coalesce: {
            // Join over all ordered pairs of nonempty submasks whose union is
            // `mask`; right side = (mask \ left) plus any subset of left.
            const Value top = Value::one(kind_);
            bool saturated = false;
            for (Mask left = mask; !saturated; left = (left - 1) & mask) {
                if (left != 0) {
                    const Mask rest = mask & ~left;
                    const Value lv = eval_node(z->lhs.get(), left);
                    for (Mask extra = left;; extra = (extra - 1) & left) {
                        const Mask right = rest | extra;
                        if (right != 0) {
                            result = join(result, meet(lv, eval_node(z->rhs.get(), right)));
                            if (result == top) {
                                saturated = true;
                                break;
                            }
                        }
                        if (extra == 0) break;
                    }
                }
                if (left == 0) break;
            }
            break;
        }
    }
    memo_.emplace(key, result);
    return result;
}

// ── DenseEvaluator ──────────────────────────────────────────────────────────

DenseEvaluator::DenseEvaluator(std::vector<Interaction> universe)
    : universe_(std::move(universe)) {
    if (universe_.empty()) throw DomainError("evaluator needs a nonempty universe");
    if (universe_.size() > 20)
        throw ResourceError("dense evaluation over " + std::to_string(universe_.size()) +
                            " interactions exceeds the guard of 20");
    kind_ = universe_.front().algebra();
    if (kind_ == AlgebraKind::FuzzyRational)
        throw DomainError("dense evaluation requires a finite algebra");
    for (const auto& m : universe_) {
        if (m.ports() != universe_.front().ports() || m.algebra() != kind_)
            throw DomainError("universe members must share one port set and algebra");
    }
    n_ = universe_.size();

    const auto carrier = elements(kind_);
    one_code_ = Value::one(kind_).code();
    for (const Value& a : carrier) {
        compl_[a.code()] = complement(a).code();
        for (const Value& b : carrier) {
            join_[a.code()][b.code()] = join(a, b).code();
            meet_[a.code()][b.code()] = meet(a, b).code();
        }
    }
    // Join-irreducible elements: nonzero and not the join of two strictly
    // smaller elements. Every value is recovered as the join of the
    // irreducibles below it.
    for (const Value& k : carrier) {
        if (k.is_zero()) continue;
        bool reducible = false;
        for (const Value& a : carrier)
            for (const Value& b : carrier) {
                if (a == k || b == k) continue;
                if (join(a, b) == k) reducible = true;
            }
        if (!reducible) ji_.push_back(k.code());
    }
}

DenseEvaluator::Table DenseEvaluator::pil_table(const PilFormula* f) const {
    std::vector<std::uint8_t> per_interaction(n_);
    for (std::size_t i = 0; i < n_; ++i)
        per_interaction[i] = eval_pil_node(*f, universe_[i]).code();

    Table t(std::size_t{1} << n_);
    t[0] = one_code_;  // meet over the empty set; masks of interest are nonempty
    for (Mask m = 1; m < t.size(); ++m) {
        const auto low = static_cast<std::size_t>(std::countr_zero(m));
        t[m] = meet_[t[m & (m - 1)]][per_interaction[low]];
    }
    return t;
}

DenseEvaluator::Table DenseEvaluator::coalesce_tables(const Table& a,
                                                      const Table& b) const {
    const std::size_t size = std::size_t{1} << n_;
    Table out(size, Value::zero(kind_).code());
    std::vector<std::int64_t> fa(size), fb(size);

    for (const std::uint8_t k : ji_) {
        auto at_least = [&](std::uint8_t code) { return join_[k][code] == code; };
        fa[0] = fb[0] = 0;  // empty parts are not covers
        for (std::size_t m = 1; m < size; ++m) {
            fa[m] = at_least(a[m]) ? 1 : 0;
            fb[m] = at_least(b[m]) ? 1 : 0;
        }
        // Subset zeta transform, pointwise product, Moebius inversion: the
        // result counts ordered cover pairs whose parts both reach k.
        for (std::size_t bit = 0; bit < n_; ++bit)
            for (std::size_t m = 0; m < size; ++m)
                if (m >> bit & 1) {
                    fa[m] += fa[m ^ (std::size_t{1} << bit)];
                    fb[m] += fb[m ^ (std::size_t{1} << bit)];
                }
        for (std::size_t m = 0; m < size; ++m) fa[m] *= fb[m];
        for (std::size_t bit = 0; bit < n_; ++bit)
            for (std::size_t m = 0; m < size; ++m)
                if (m >> bit & 1) fa[m] -= fa[m ^ (std::size_t{1} << bit)];
        for (std::size_t m = 1; m < size; ++m)
            if (fa[m] > 0) out[m] = join_[out[m]][k];
    }
    return out;
}

const DenseEvaluator::Table& DenseEvaluator::node_table(const PclFormula* z) {
    if (const auto it = tables_.find(z); it != tables_.end()) return it->second;

    Table t;
    switch (z->kind) {
        case PclFormula::Kind::Pil:
            t = pil_table(z->pil.get());
            break;
        case PclFormula::Kind::Neg: {
            const Table& inner = node_table(z->lhs.get());
            t.resize(inner.size());
            for (std::size_t m = 0; m < inner.size(); ++m) t[m] = compl_[inner[m]];
            break;
        }
        case PclFormula::Kind::Plus: {
            const Table& lhs = node_table(z->lhs.get());
            const Table& rhs = node_table(z->rhs.get());
            t.resize(lhs.size());
            for (std::size_t m = 0; m < lhs.size(); ++m) t[m] = join_[lhs[m]][rhs[m]];
            break;
        }
        case PclFormula::Kind::Coalesce:
            t = coalesce_tables(node_table(z->lhs.get()), node_table(z->rhs.get()));
            break;
    }
    return tables_.emplace(z, std::move(t)).first->second;
}

const DenseEvaluator::Table& DenseEvaluator::table(const PclPtr& z) {
    require_ports_covered(collect_ports(*z), universe_.front().ports());
    return node_table(z.get());
}

Value DenseEvaluator::value(const PclPtr& z, Mask mask) {
    if (mask == 0) throw DomainError("empty configuration mask");
    return decode(table(z)[mask]);
}

std::vector<std::uint8_t> DenseEvaluator::member_codes(const FpilNF& member) const {
    std::vector<std::uint8_t> codes(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        const Interaction& a = universe_[i];
        if (member.kind == FpilNF::Kind::True) {
            codes[i] = one_code_;
            continue;
        }
        std::uint8_t acc = 0;  // join over monomials
        for (const Monomial& mono : member.monomials) {
            std::uint8_t v = one_code_;
            for (const auto& p : mono.pos) v = meet_[v][a.at(p).code()];
            for (const auto& p : mono.neg) v = meet_[v][compl_[a.at(p).code()]];
            acc = join_[acc][v];
        }
        codes[i] = acc;
    }
    return codes;
}

DenseEvaluator::Table DenseEvaluator::nf_table(const PclNF& nf) const {
    const std::size_t size = std::size_t{1} << n_;
    const std::uint8_t zero = Value::zero(kind_).code();
    if (nf.kind == PclNF::Kind::True) return Table(size, one_code_);
    if (nf.kind == PclNF::Kind::False) return Table(size, zero);

    Table out(size, zero);
    for (const Group& group : nf.groups) {
        std::vector<std::vector<std::uint8_t>> codes;
        codes.reserve(group.members.size());
        for (const FpilNF& member : group.members) codes.push_back(member_codes(member));

        for (const std::uint8_t k : ji_) {
            // Witness masks: interactions where a member's value reaches k.
            std::vector<Mask> witness(group.members.size(), 0);
            for (std::size_t j = 0; j < codes.size(); ++j)
                for (std::size_t i = 0; i < n_; ++i)
                    if (join_[k][codes[j][i]] == codes[j][i]) witness[j] |= Mask{1} << i;

            for (Mask m = 1; m < size; ++m) {
                Mask covered = 0;
                bool ok = true;
                for (const Mask wj : witness) {
                    const Mask inside = wj & m;
                    if (inside == 0) {
                        ok = false;
                        break;
                    }
                    covered |= inside;
                }
                if (ok && covered == m) out[m] = join_[out[m]][k];
            }
        }
    }
    return out;
}

}  // namespace fpcl
