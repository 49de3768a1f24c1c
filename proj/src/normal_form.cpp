#include "fpcl/normal_form.hpp"

#include <algorithm>
#include <set>

#include "fpcl/printer.hpp"
#include "json.hpp"

namespace fpcl {

// ── Monomials and fpil-normal forms ─────────────────────────────────────────

bool Monomial::contradictory() const {
    std::size_t i = 0, j = 0;
    while (i < pos.size() && j < neg.size()) {
        if (pos[i] == neg[j]) return true;
        if (pos[i] < neg[j]) ++i;
        else ++j;
    }
    return false;
}

std::vector<std::string> Monomial::literals() const {
    std::vector<std::string> out;
    out.reserve(pos.size() + neg.size());
    std::size_t i = 0, j = 0;
    while (i < pos.size() || j < neg.size()) {
        if (j == neg.size() || (i < pos.size() && pos[i] <= neg[j]))
            out.push_back(pos[i++]);
        else
            out.push_back("!" + neg[j++]);
    }
    return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
    // Lexicographic on the canonical literal sequence (port, then sign).
    std::size_t ai = 0, aj = 0, bi = 0, bj = 0;
    auto next = [](const Monomial& m, std::size_t& i, std::size_t& j,
                   const std::string*& port, bool& negated) {
        if (i < m.pos.size() && (j == m.neg.size() || m.pos[i] <= m.neg[j])) {
            port = &m.pos[i++];
            negated = false;
        } else {
            port = &m.neg[j++];
            negated = true;
        }
    };
    while (true) {
        const bool a_done = ai == a.pos.size() && aj == a.neg.size();
        const bool b_done = bi == b.pos.size() && bj == b.neg.size();
        if (a_done || b_done) return !a_done ? false : !b_done;
        const std::string* ap;
        const std::string* bp;
        bool an, bn;
        next(a, ai, aj, ap, an);
        next(b, bi, bj, bp, bn);
        if (*ap != *bp) return *ap < *bp;
        if (an != bn) return bn;  // positive literal first
    }
}

bool literal_subset(const Monomial& a, const Monomial& b) {
    return std::includes(b.pos.begin(), b.pos.end(), a.pos.begin(), a.pos.end()) &&
           std::includes(b.neg.begin(), b.neg.end(), a.neg.begin(), a.neg.end());
}

bool operator<(const FpilNF& a, const FpilNF& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.monomials < b.monomials;
}

const char* mode_name(NormalizationMode mode) {
    switch (mode) {
        case NormalizationMode::DeMorgan: return "demorgan";
        case NormalizationMode::Kleene: return "kleene";
        case NormalizationMode::Boolean: return "boolean";
    }
    return "?";
}

std::optional<NormalizationMode> mode_from_name(std::string_view name) {
    if (name == "demorgan") return NormalizationMode::DeMorgan;
    if (name == "kleene") return NormalizationMode::Kleene;
    if (name == "boolean") return NormalizationMode::Boolean;
    return std::nullopt;
}

// ── Negation normal form ────────────────────────────────────────────────────

namespace {

PilPtr nnf_pos(const PilFormula& f);
PilPtr nnf_neg(const PilFormula& f);

PilPtr nnf_pos(const PilFormula& f) {
    switch (f.kind) {
        case PilFormula::Kind::True: return pil_true();
        case PilFormula::Kind::Atom: return pil_atom(f.port);
        case PilFormula::Kind::Not: return nnf_neg(*f.lhs);
        case PilFormula::Kind::Or: return pil_or(nnf_pos(*f.lhs), nnf_pos(*f.rhs));
    }
    throw Error("unreachable");
}

PilPtr nnf_neg(const PilFormula& f) {
    switch (f.kind) {
        case PilFormula::Kind::True: return pil_false();
        case PilFormula::Kind::Atom: return pil_not(pil_atom(f.port));
        case PilFormula::Kind::Not: return nnf_pos(*f.lhs);
        case PilFormula::Kind::Or: return pil_and(nnf_neg(*f.lhs), nnf_neg(*f.rhs));
    }
    throw Error("unreachable");
}

}  // namespace

PilPtr pil_nnf(const PilPtr& f) { return nnf_pos(*f); }

// ── Monomial collection ─────────────────────────────────────────────────────

namespace {

// Intermediate disjunctive form: constants fold eagerly, monomial lists stay
// unsorted and may contain duplicates until canonicalized.
struct Dnf {
    FpilNF::Kind kind = FpilNF::Kind::False;
    std::vector<Monomial> monomials;
};

Dnf dnf_true() { return {FpilNF::Kind::True, {}}; }
Dnf dnf_false() { return {FpilNF::Kind::False, {}}; }

Dnf dnf_or(Dnf a, Dnf b) {
    if (a.kind == FpilNF::Kind::True || b.kind == FpilNF::Kind::True) return dnf_true();
    if (a.kind == FpilNF::Kind::False) return b;
    if (b.kind == FpilNF::Kind::False) return a;
    a.monomials.insert(a.monomials.end(), std::make_move_iterator(b.monomials.begin()),
                       std::make_move_iterator(b.monomials.end()));
    return a;
}

std::vector<std::string> union_sorted(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Dnf dnf_and(const Dnf& a, const Dnf& b) {
    if (a.kind == FpilNF::Kind::False || b.kind == FpilNF::Kind::False)
        return dnf_false();
    if (a.kind == FpilNF::Kind::True) return b;
    if (b.kind == FpilNF::Kind::True) return a;
    Dnf out{FpilNF::Kind::Monomials, {}};
    out.monomials.reserve(a.monomials.size() * b.monomials.size());
    for (const Monomial& ma : a.monomials)
        for (const Monomial& mb : b.monomials)
            out.monomials.push_back(
                Monomial{union_sorted(ma.pos, mb.pos), union_sorted(ma.neg, mb.neg)});
    return out;
}

Dnf dnf_not(const Dnf& a) {
    if (a.kind == FpilNF::Kind::True) return dnf_false();
    if (a.kind == FpilNF::Kind::False) return dnf_true();
    Dnf out = dnf_true();
    for (const Monomial& m : a.monomials) {
        Dnf flipped{FpilNF::Kind::Monomials, {}};
        for (const auto& p : m.pos) flipped.monomials.push_back(Monomial{{}, {p}});
        for (const auto& p : m.neg) flipped.monomials.push_back(Monomial{{p}, {}});
        out = dnf_and(out, flipped);
    }
    return out;
}

Dnf dnf_of_nnf(const PilFormula& f) {
    if (f.kind == PilFormula::Kind::True) return dnf_true();
    if (f.kind == PilFormula::Kind::Atom)
        return {FpilNF::Kind::Monomials, {Monomial{{f.port}, {}}}};
    if (is_pil_false(f)) return dnf_false();
    PilPtr a, b;
    if (match_pil_and(f, &a, &b)) return dnf_and(dnf_of_nnf(*a), dnf_of_nnf(*b));
    if (f.kind == PilFormula::Kind::Not) {
        if (f.lhs->kind == PilFormula::Kind::Atom)
            return {FpilNF::Kind::Monomials, {Monomial{{}, {f.lhs->port}}}};
        throw Error("formula is not in negation normal form");
    }
    return dnf_or(dnf_of_nnf(*f.lhs), dnf_of_nnf(*f.rhs));
}

void sort_unique(std::vector<Monomial>& ms) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
}

// Drops every monomial whose literal set strictly contains another's
// (phi | (phi & psi) is phi).
void absorb(std::vector<Monomial>& ms) {
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        bool absorbed = false;
        for (std::size_t j = 0; j < ms.size() && !absorbed; ++j) {
            if (i == j) continue;
            if (literal_subset(ms[j], ms[i]) && !(ms[i] == ms[j])) absorbed = true;
        }
        if (!absorbed) kept.push_back(ms[i]);
    }
    ms = std::move(kept);
}

}  // namespace

std::vector<Monomial> kleene_expand(const Monomial& m,
                                    const std::vector<std::string>& ports) {
    if (!m.contradictory())
        throw DomainError("kleene_expand requires a contradictory monomial");
    std::vector<std::string> missing;
    for (const auto& p : ports) {
        if (!std::binary_search(m.pos.begin(), m.pos.end(), p) &&
            !std::binary_search(m.neg.begin(), m.neg.end(), p))
            missing.push_back(p);
    }
    if (missing.size() > 20)
        throw ResourceError("kleene expansion over " + std::to_string(missing.size()) +
                            " missing ports");

    std::vector<Monomial> out;
    out.reserve(std::size_t{1} << missing.size());
    for (std::size_t bits = 0; bits < (std::size_t{1} << missing.size()); ++bits) {
        Monomial e = m;
        for (std::size_t i = 0; i < missing.size(); ++i) {
            if (bits >> i & 1) e.pos.push_back(missing[i]);
            else e.neg.push_back(missing[i]);
        }
        std::sort(e.pos.begin(), e.pos.end());
        std::sort(e.neg.begin(), e.neg.end());
        out.push_back(std::move(e));
    }
    sort_unique(out);
    return out;
}

FpilNF boolean_canonicalize(const std::vector<Monomial>& monomials,
                            const std::vector<std::string>& ports) {
    if (ports.size() > 20)
        throw ResourceError("boolean canonicalization over " +
                            std::to_string(ports.size()) + " ports");
    std::vector<Monomial> minterms;
    for (const Monomial& m : monomials) {
        if (m.contradictory()) continue;  // false over a Boolean algebra
        std::vector<std::string> missing;
        for (const auto& p : ports) {
            if (!std::binary_search(m.pos.begin(), m.pos.end(), p) &&
                !std::binary_search(m.neg.begin(), m.neg.end(), p))
                missing.push_back(p);
        }
        for (std::size_t bits = 0; bits < (std::size_t{1} << missing.size()); ++bits) {
            Monomial e = m;
            for (std::size_t i = 0; i < missing.size(); ++i) {
                if (bits >> i & 1) e.pos.push_back(missing[i]);
                else e.neg.push_back(missing[i]);
            }
            std::sort(e.pos.begin(), e.pos.end());
            std::sort(e.neg.begin(), e.neg.end());
            minterms.push_back(std::move(e));
        }
    }
    sort_unique(minterms);
    if (minterms.empty()) return FpilNF::make_false();
    if (minterms.size() == (std::size_t{1} << ports.size())) return FpilNF::make_true();
    return FpilNF{FpilNF::Kind::Monomials, std::move(minterms)};
}

namespace {

void bump(NormalizeStats* stats, std::size_t NormalizeStats::* field,
          std::size_t amount = 1) {
    if (stats) stats->*field += amount;
}

FpilNF canonicalize(Dnf dnf, const std::vector<std::string>& ports,
                    NormalizationMode mode, NormalizeStats* stats) {
    bump(stats, &NormalizeStats::pil_canonicalizations);
    if (dnf.kind == FpilNF::Kind::True) return FpilNF::make_true();
    if (dnf.kind == FpilNF::Kind::False) return FpilNF::make_false();

    sort_unique(dnf.monomials);
    absorb(dnf.monomials);

    if (mode == NormalizationMode::Boolean)
        return boolean_canonicalize(dnf.monomials, ports);

    if (mode == NormalizationMode::Kleene) {
        std::vector<Monomial> expanded;
        for (const Monomial& m : dnf.monomials) {
            if (m.contradictory()) {
                auto ms = kleene_expand(m, ports);
                expanded.insert(expanded.end(), std::make_move_iterator(ms.begin()),
                                std::make_move_iterator(ms.end()));
            } else {
                expanded.push_back(m);
            }
        }
        sort_unique(expanded);
        absorb(expanded);
        dnf.monomials = std::move(expanded);
    }
    bump(stats, &NormalizeStats::monomials_built, dnf.monomials.size());
    return FpilNF{FpilNF::Kind::Monomials, std::move(dnf.monomials)};
}

Dnf as_dnf(const FpilNF& nf) {
    return Dnf{nf.kind, nf.monomials};
}

}  // namespace

FpilNF pil_normal_form(const PilPtr& f, const std::vector<std::string>& ports,
                       NormalizationMode mode) {
    std::vector<std::string> sorted = ports;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& p : collect_ports(*f)) {
        if (!std::binary_search(sorted.begin(), sorted.end(), p))
            throw DomainError("formula uses undeclared port '" + p + "'");
    }
    return canonicalize(dnf_of_nnf(*pil_nnf(f)), sorted, mode, nullptr);
}

// ── Configuration-level construction ────────────────────────────────────────

namespace {

class NfBuilder {
public:
    NfBuilder(std::vector<std::string> ports, NormalizationMode mode,
              NormalizeStats* stats)
        : ports_(std::move(ports)), mode_(mode), stats_(stats) {}

    PclNF norm(const PclFormula& z) {
        PclPtr a, b;
        if (match_pcl_times(z, &a, &b)) return times(norm(*a), norm(*b));
        switch (z.kind) {
            case PclFormula::Kind::Pil:
                return base(canonicalize(dnf_of_nnf(*pil_nnf(z.pil)), ports_, mode_,
                                         stats_));
            case PclFormula::Kind::Neg:
                return negate(norm(*z.lhs));
            case PclFormula::Kind::Plus:
                return plus(norm(*z.lhs), norm(*z.rhs));
            case PclFormula::Kind::Coalesce:
                return coalesce(norm(*z.lhs), norm(*z.rhs));
        }
        throw Error("unreachable");
    }

private:
    static PclNF base(const FpilNF& nf) {
        if (nf.kind == FpilNF::Kind::True) return PclNF::make_true();
        if (nf.kind == FpilNF::Kind::False) return PclNF::make_false();
        return PclNF{PclNF::Kind::Sum, {Group{{nf}}}};
    }

    // A sum view of a non-false normal form; true becomes the single group
    // {true}.
    static std::vector<Group> as_groups(const PclNF& nf) {
        if (nf.kind == PclNF::Kind::True) return {Group{{FpilNF::make_true()}}};
        return nf.groups;
    }

    static PclNF finalize(std::vector<Group> groups) {
        for (Group& g : groups) {
            std::sort(g.members.begin(), g.members.end());
            g.members.erase(std::unique(g.members.begin(), g.members.end()),
                            g.members.end());
            // A group that is exactly {true} makes the whole sum true.
            if (g.members.size() == 1 && g.members.front().kind == FpilNF::Kind::True)
                return PclNF::make_true();
        }
        std::sort(groups.begin(), groups.end());
        groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
        if (groups.empty()) return PclNF::make_false();
        return PclNF{PclNF::Kind::Sum, std::move(groups)};
    }

    PclNF plus(const PclNF& a, const PclNF& b) {
        if (a.kind == PclNF::Kind::True || b.kind == PclNF::Kind::True)
            return PclNF::make_true();
        if (a.kind == PclNF::Kind::False) return b;
        if (b.kind == PclNF::Kind::False) return a;
        std::vector<Group> groups = a.groups;
        groups.insert(groups.end(), b.groups.begin(), b.groups.end());
        return finalize(std::move(groups));
    }

    PclNF coalesce(const PclNF& a, const PclNF& b) {
        if (a.kind == PclNF::Kind::False || b.kind == PclNF::Kind::False)
            return PclNF::make_false();
        std::vector<Group> out;
        for (const Group& ga : as_groups(a))
            for (const Group& gb : as_groups(b)) {
                bump(stats_, &NormalizeStats::group_pairs);
                Group merged = ga;
                merged.members.insert(merged.members.end(), gb.members.begin(),
                                      gb.members.end());
                out.push_back(std::move(merged));
            }
        return finalize(std::move(out));
    }

    // fPIL-level connectives on canonical forms.
    FpilNF fand(const FpilNF& a, const FpilNF& b) {
        return canonicalize(dnf_and(as_dnf(a), as_dnf(b)), ports_, mode_, stats_);
    }
    FpilNF fnot(const FpilNF& a) {
        return canonicalize(dnf_not(as_dnf(a)), ports_, mode_, stats_);
    }

    PclNF times(const PclNF& a, const PclNF& b) {
        if (a.kind == PclNF::Kind::False || b.kind == PclNF::Kind::False)
            return PclNF::make_false();
        if (a.kind == PclNF::Kind::True) return b;
        if (b.kind == PclNF::Kind::True) return a;

        std::vector<Group> out;
        for (const Group& ga : a.groups)
            for (const Group& gb : b.groups) {
                bump(stats_, &NormalizeStats::group_pairs);
                // Phi = disjunction of all pairwise member conjunctions.
                Dnf phi = dnf_false();
                for (const FpilNF& ma : ga.members)
                    for (const FpilNF& mb : gb.members)
                        phi = dnf_or(std::move(phi), dnf_and(as_dnf(ma), as_dnf(mb)));
                const FpilNF phi_nf = canonicalize(std::move(phi), ports_, mode_, stats_);
                if (phi_nf.kind == FpilNF::Kind::False) continue;  // group is false

                Group merged;
                bool dead = false;
                auto add_member = [&](const FpilNF& member) {
                    if (member.kind == FpilNF::Kind::False) dead = true;
                    else merged.members.push_back(member);
                };
                for (const FpilNF& ma : ga.members) add_member(fand(ma, phi_nf));
                for (const FpilNF& mb : gb.members) add_member(fand(mb, phi_nf));
                add_member(phi_nf);
                if (!dead) out.push_back(std::move(merged));
            }
        return finalize(std::move(out));
    }

    // neg of one group {phi_1, ..., phi_m}: sum of the singleton groups
    // {!phi_j} plus the closure group {!phi_1 & ... & !phi_m, true}.
    PclNF negate_group(const Group& g) {
        std::vector<Group> out;
        FpilNF all = FpilNF::make_true();
        for (const FpilNF& member : g.members) {
            const FpilNF negated = fnot(member);
            all = fand(all, negated);
            if (negated.kind == FpilNF::Kind::False) continue;
            if (negated.kind == FpilNF::Kind::True) return PclNF::make_true();
            out.push_back(Group{{negated}});
        }
        if (all.kind == FpilNF::Kind::True) return PclNF::make_true();
        if (all.kind != FpilNF::Kind::False)
            out.push_back(Group{{all, FpilNF::make_true()}});
        return finalize(std::move(out));
    }

    PclNF negate(const PclNF& a) {
        if (a.kind == PclNF::Kind::True) return PclNF::make_false();
        if (a.kind == PclNF::Kind::False) return PclNF::make_true();
        PclNF acc = PclNF::make_true();
        for (const Group& g : a.groups) {
            acc = times(acc, negate_group(g));
            if (acc.kind == PclNF::Kind::False) break;
        }
        return acc;
    }

    std::vector<std::string> ports_;
    NormalizationMode mode_;
    NormalizeStats* stats_;
};

}  // namespace

PclNF pcl_normal_form(const PclPtr& z, const std::vector<std::string>& ports,
                      NormalizationMode mode, NormalizeStats* stats) {
    std::vector<std::string> sorted = ports;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& p : sorted) validate_port_name(p);
    for (const auto& p : collect_ports(*z)) {
        if (!std::binary_search(sorted.begin(), sorted.end(), p))
            throw DomainError("formula uses undeclared port '" + p + "'");
    }
    NfBuilder builder(std::move(sorted), mode, stats);
    return builder.norm(*z);
}

// ── Nested-set representation ───────────────────────────────────────────────

SetRep to_set_rep(const PclNF& nf) {
    if (nf.kind == PclNF::Kind::True) return {{{{"true"}}}};
    if (nf.kind == PclNF::Kind::False) return {{{{"false"}}}};

    SetRep rep;
    for (const Group& g : nf.groups) {
        GroupRep group_rep;
        for (const FpilNF& member : g.members) {
            MemberRep member_rep;
            if (member.kind == FpilNF::Kind::True) {
                member_rep.push_back({"true"});
            } else {
                for (const Monomial& m : member.monomials)
                    member_rep.push_back(m.literals());
            }
            group_rep.push_back(std::move(member_rep));
        }
        rep.push_back(std::move(group_rep));
    }
    return rep;
}

std::string set_rep_json(const SetRep& rep) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& group : rep) {
        nlohmann::json jg = nlohmann::json::array();
        for (const auto& member : group) {
            nlohmann::json jm = nlohmann::json::array();
            for (const auto& literal_set : member) jm.push_back(literal_set);
            jg.push_back(std::move(jm));
        }
        doc.push_back(std::move(jg));
    }
    return doc.dump();
}

// ── Validation, rebuilding, printing ────────────────────────────────────────

namespace {

void fail(const std::string& what) { throw Error("invalid normal form: " + what); }

void validate_member(const FpilNF& member) {
    if (member.kind == FpilNF::Kind::False) fail("false member in a group");
    if (member.kind == FpilNF::Kind::True) {
        if (!member.monomials.empty()) fail("true member with monomials");
        return;
    }
    if (member.monomials.empty()) fail("member with no monomials");
    for (const Monomial& m : member.monomials) {
        if (m.pos.empty() && m.neg.empty()) fail("empty monomial");
        if (!std::is_sorted(m.pos.begin(), m.pos.end()) ||
            std::adjacent_find(m.pos.begin(), m.pos.end()) != m.pos.end())
            fail("positive ports not sorted/unique");
        if (!std::is_sorted(m.neg.begin(), m.neg.end()) ||
            std::adjacent_find(m.neg.begin(), m.neg.end()) != m.neg.end())
            fail("negative ports not sorted/unique");
    }
    if (!std::is_sorted(member.monomials.begin(), member.monomials.end()))
        fail("monomials not sorted");
    if (std::adjacent_find(member.monomials.begin(), member.monomials.end()) !=
        member.monomials.end())
        fail("duplicate monomials");
    for (const Monomial& a : member.monomials)
        for (const Monomial& b : member.monomials)
            if (!(a == b) && literal_subset(a, b)) fail("absorption not applied");
}

}  // namespace

void validate(const PclNF& nf) {
    if (nf.kind != PclNF::Kind::Sum) {
        if (!nf.groups.empty()) fail("constant with groups");
        return;
    }
    if (nf.groups.empty()) fail("empty sum");
    if (!std::is_sorted(nf.groups.begin(), nf.groups.end())) fail("groups not sorted");
    if (std::adjacent_find(nf.groups.begin(), nf.groups.end()) != nf.groups.end())
        fail("duplicate groups");
    for (const Group& g : nf.groups) {
        if (g.members.empty()) fail("empty group");
        if (g.members.size() == 1 && g.members.front().kind == FpilNF::Kind::True)
            fail("group {true} should have collapsed the sum");
        if (!std::is_sorted(g.members.begin(), g.members.end()))
            fail("members not sorted");
        if (std::adjacent_find(g.members.begin(), g.members.end()) != g.members.end())
            fail("duplicate members");
        for (const FpilNF& member : g.members) validate_member(member);
    }
}

PilPtr fpilnf_to_pil(const FpilNF& nf) {
    if (nf.kind == FpilNF::Kind::True) return pil_true();
    if (nf.kind == FpilNF::Kind::False) return pil_false();
    std::vector<PilPtr> disjuncts;
    for (const Monomial& m : nf.monomials) {
        std::vector<PilPtr> literals;
        std::size_t i = 0, j = 0;
        while (i < m.pos.size() || j < m.neg.size()) {
            if (i < m.pos.size() && (j == m.neg.size() || m.pos[i] <= m.neg[j]))
                literals.push_back(pil_atom(m.pos[i++]));
            else
                literals.push_back(pil_not(pil_atom(m.neg[j++])));
        }
        disjuncts.push_back(big_and(literals));
    }
    return big_or(disjuncts);
}

PclPtr nf_to_formula(const PclNF& nf) {
    if (nf.kind == PclNF::Kind::True) return pcl_pil(pil_true());
    if (nf.kind == PclNF::Kind::False) return pcl_pil(pil_false());
    std::vector<PclPtr> groups;
    for (const Group& g : nf.groups) {
        std::vector<PclPtr> members;
        for (const FpilNF& member : g.members)
            members.push_back(pcl_pil(fpilnf_to_pil(member)));
        groups.push_back(big_coalesce(members));
    }
    return big_plus(groups);
}

std::string print_normal_form(const PclNF& nf) {
    return print_formula(nf_to_formula(nf));
}

}  // namespace fpcl
