#include "fpcl/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace fpcl {

namespace {

PilPtr make_pil(PilFormula::Kind kind, std::string port, PilPtr lhs, PilPtr rhs) {
    auto node = std::make_shared<PilFormula>();
    node->kind = kind;
    node->port = std::move(port);
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
}

PclPtr make_pcl(PclFormula::Kind kind, PilPtr pil, PclPtr lhs, PclPtr rhs) {
    auto node = std::make_shared<PclFormula>();
    node->kind = kind;
    node->pil = std::move(pil);
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
}

template <typename Ptr, typename Fold>
Ptr left_fold(const std::vector<Ptr>& items, const char* what, Fold fold) {
    if (items.empty()) throw DomainError(std::string(what) + " requires a nonempty list");
    Ptr acc = items.front();
    for (std::size_t i = 1; i < items.size(); ++i) acc = fold(acc, items[i]);
    return acc;
}

void collect_pil_ports(const PilFormula& f, std::set<std::string>& out) {
    switch (f.kind) {
        case PilFormula::Kind::True: return;
        case PilFormula::Kind::Atom: out.insert(f.port); return;
        case PilFormula::Kind::Not: collect_pil_ports(*f.lhs, out); return;
        case PilFormula::Kind::Or:
            collect_pil_ports(*f.lhs, out);
            collect_pil_ports(*f.rhs, out);
            return;
    }
}

void collect_pcl_ports(const PclFormula& z, std::set<std::string>& out) {
    switch (z.kind) {
        case PclFormula::Kind::Pil: collect_pil_ports(*z.pil, out); return;
        case PclFormula::Kind::Neg: collect_pcl_ports(*z.lhs, out); return;
        case PclFormula::Kind::Plus:
        case PclFormula::Kind::Coalesce:
            collect_pcl_ports(*z.lhs, out);
            collect_pcl_ports(*z.rhs, out);
            return;
    }
}

}  // namespace

PilPtr pil_true() {
    static const PilPtr node = make_pil(PilFormula::Kind::True, "", nullptr, nullptr);
    return node;
}

PilPtr pil_false() {
    static const PilPtr node = pil_not(pil_true());
    return node;
}

PilPtr pil_atom(std::string port) {
    validate_port_name(port);
    return make_pil(PilFormula::Kind::Atom, std::move(port), nullptr, nullptr);
}

PilPtr pil_not(PilPtr f) {
    return make_pil(PilFormula::Kind::Not, "", std::move(f), nullptr);
}

PilPtr pil_or(PilPtr a, PilPtr b) {
    return make_pil(PilFormula::Kind::Or, "", std::move(a), std::move(b));
}

PilPtr pil_and(PilPtr a, PilPtr b) {
    return pil_not(pil_or(pil_not(std::move(a)), pil_not(std::move(b))));
}

PilPtr big_or(const std::vector<PilPtr>& fs) {
    return left_fold(fs, "big_or", [](PilPtr a, PilPtr b) { return pil_or(a, b); });
}

PilPtr big_and(const std::vector<PilPtr>& fs) {
    return left_fold(fs, "big_and", [](PilPtr a, PilPtr b) { return pil_and(a, b); });
}

bool is_pil_false(const PilFormula& f) {
    return f.kind == PilFormula::Kind::Not && f.lhs->kind == PilFormula::Kind::True;
}

bool match_pil_and(const PilFormula& f, PilPtr* a, PilPtr* b) {
    if (f.kind != PilFormula::Kind::Not) return false;
    const PilFormula& inner = *f.lhs;
    if (inner.kind != PilFormula::Kind::Or) return false;
    if (inner.lhs->kind != PilFormula::Kind::Not) return false;
    if (inner.rhs->kind != PilFormula::Kind::Not) return false;
    if (a) *a = inner.lhs->lhs;
    if (b) *b = inner.rhs->lhs;
    return true;
}

bool equal(const PilFormula& a, const PilFormula& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case PilFormula::Kind::True: return true;
        case PilFormula::Kind::Atom: return a.port == b.port;
        case PilFormula::Kind::Not: return equal(*a.lhs, *b.lhs);
        case PilFormula::Kind::Or: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
    }
    return false;
}

std::vector<std::string> collect_ports(const PilFormula& f) {
    std::set<std::string> ports;
    collect_pil_ports(f, ports);
    return {ports.begin(), ports.end()};
}

PclPtr pcl_pil(PilPtr f) {
    return make_pcl(PclFormula::Kind::Pil, std::move(f), nullptr, nullptr);
}

PclPtr pcl_neg(PclPtr z) {
    return make_pcl(PclFormula::Kind::Neg, nullptr, std::move(z), nullptr);
}

PclPtr pcl_plus(PclPtr a, PclPtr b) {
    return make_pcl(PclFormula::Kind::Plus, nullptr, std::move(a), std::move(b));
}

PclPtr pcl_coalesce(PclPtr a, PclPtr b) {
    return make_pcl(PclFormula::Kind::Coalesce, nullptr, std::move(a), std::move(b));
}

PclPtr pcl_times(PclPtr a, PclPtr b) {
    return pcl_neg(pcl_plus(pcl_neg(std::move(a)), pcl_neg(std::move(b))));
}

PclPtr pcl_closure(PclPtr z) {
    return pcl_coalesce(std::move(z), pcl_pil(pil_true()));
}

PclPtr big_plus(const std::vector<PclPtr>& zs) {
    return left_fold(zs, "big_plus", [](PclPtr a, PclPtr b) { return pcl_plus(a, b); });
}

PclPtr big_coalesce(const std::vector<PclPtr>& zs) {
    return left_fold(zs, "big_coalesce",
                     [](PclPtr a, PclPtr b) { return pcl_coalesce(a, b); });
}

PclPtr big_times(const std::vector<PclPtr>& zs) {
    return left_fold(zs, "big_times", [](PclPtr a, PclPtr b) { return pcl_times(a, b); });
}

bool match_pcl_times(const PclFormula& z, PclPtr* a, PclPtr* b) {
    if (z.kind != PclFormula::Kind::Neg) return false;
    const PclFormula& inner = *z.lhs;
    if (inner.kind != PclFormula::Kind::Plus) return false;
    if (inner.lhs->kind != PclFormula::Kind::Neg) return false;
    if (inner.rhs->kind != PclFormula::Kind::Neg) return false;
    if (a) *a = inner.lhs->lhs;
    if (b) *b = inner.rhs->lhs;
    return true;
}

bool match_pcl_closure(const PclFormula& z, PclPtr* a) {
    if (z.kind != PclFormula::Kind::Coalesce) return false;
    if (z.rhs->kind != PclFormula::Kind::Pil) return false;
    if (z.rhs->pil->kind != PilFormula::Kind::True) return false;
    if (a) *a = z.lhs;
    return true;
}

bool equal(const PclFormula& a, const PclFormula& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case PclFormula::Kind::Pil: return equal(*a.pil, *b.pil);
        case PclFormula::Kind::Neg: return equal(*a.lhs, *b.lhs);
        case PclFormula::Kind::Plus:
        case PclFormula::Kind::Coalesce:
            return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
    }
    return false;
}

std::vector<std::string> collect_ports(const PclFormula& z) {
    std::set<std::string> ports;
    collect_pcl_ports(z, ports);
    return {ports.begin(), ports.end()};
}

bool is_keyword(const std::string& word) {
    return word == "true" || word == "false" || word == "neg" || word == "cl";
}

void validate_port_name(const std::string& name) {
    if (name.empty()) throw DomainError("empty port name");
    if (is_keyword(name)) throw DomainError("keyword '" + name + "' cannot be a port");
    const auto head = static_cast<unsigned char>(name[0]);
    if (!std::isalpha(head) && name[0] != '_')
        throw DomainError("invalid port name '" + name + "'");
    for (char c : name) {
        const auto uc = static_cast<unsigned char>(c);
        if (!std::isalnum(uc) && c != '_')
            throw DomainError("invalid port name '" + name + "'");
    }
}

}  // namespace fpcl
