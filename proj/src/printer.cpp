#include "fpcl/printer.hpp"

namespace fpcl {

namespace {

// Binding strength, matching the parser: atoms 7, unary 6, & 5, | 4, * 3,
// # 2, + 1. A subexpression is parenthesized when its operator binds less
// tightly than the context requires.
constexpr int kAtom = 7;
constexpr int kUnary = 6;
constexpr int kAnd = 5;
constexpr int kOr = 4;
constexpr int kCoalesce = 2;
constexpr int kPlus = 1;

void print_pil(const PilFormula& f, int min_prec, std::string& out);

void print_pil_binary(const PilFormula& lhs, const PilFormula& rhs, int prec,
                      const char* op, int min_prec, std::string& out) {
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    print_pil(lhs, prec, out);
    out += op;
    print_pil(rhs, prec + 1, out);
    if (parens) out += ')';
}

void print_pil(const PilFormula& f, int min_prec, std::string& out) {
    if (f.kind == PilFormula::Kind::True) {
        out += "true";
        return;
    }
    if (f.kind == PilFormula::Kind::Atom) {
        out += f.port;
        return;
    }
    if (is_pil_false(f)) {
        out += "false";
        return;
    }
    PilPtr a, b;
    if (match_pil_and(f, &a, &b)) {
        print_pil_binary(*a, *b, kAnd, " & ", min_prec, out);
        return;
    }
    if (f.kind == PilFormula::Kind::Not) {
        const bool parens = kUnary < min_prec;
        if (parens) out += '(';
        out += '!';
        print_pil(*f.lhs, kUnary, out);
        if (parens) out += ')';
        return;
    }
    print_pil_binary(*f.lhs, *f.rhs, kOr, " | ", min_prec, out);
}

void print_pcl(const PclFormula& z, int min_prec, std::string& out) {
    switch (z.kind) {
        case PclFormula::Kind::Pil:
            // All pil operators bind tighter than any pcl operator.
            print_pil(*z.pil, min_prec > kOr ? min_prec : 0, out);
            return;
        case PclFormula::Kind::Neg: {
            const bool parens = kUnary < min_prec;
            if (parens) out += '(';
            out += "neg ";
            print_pcl(*z.lhs, kUnary, out);
            if (parens) out += ')';
            return;
        }
        case PclFormula::Kind::Plus: {
            const bool parens = kPlus < min_prec;
            if (parens) out += '(';
            print_pcl(*z.lhs, kPlus, out);
            out += " + ";
            print_pcl(*z.rhs, kPlus + 1, out);
            if (parens) out += ')';
            return;
        }
        case PclFormula::Kind::Coalesce: {
            const bool parens = kCoalesce < min_prec;
            if (parens) out += '(';
            print_pcl(*z.lhs, kCoalesce, out);
            out += " # ";
            print_pcl(*z.rhs, kCoalesce + 1, out);
            if (parens) out += ')';
            return;
        }
    }
}

}  // namespace

std::string print_formula(const PilFormula& f) {
    std::string out;
    print_pil(f, 0, out);
    return out;
}

std::string print_formula(const PclFormula& z) {
    std::string out;
    print_pcl(z, 0, out);
    return out;
}

}  // namespace fpcl
