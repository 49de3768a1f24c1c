#include "fpcl/parser.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace fpcl {

namespace {

enum class Tok {
    End, Ident, True, False, NegKw, ClKw,
    Bang, Amp, Pipe, Star, Hash, Plus, LParen, RParen,
};

struct Token {
    Tok type;
    std::string text;
    std::size_t pos;  // 1-based
};

const char* token_name(Tok t) {
    switch (t) {
        case Tok::End: return "end of input";
        case Tok::Ident: return "identifier";
        case Tok::True: return "'true'";
        case Tok::False: return "'false'";
        case Tok::NegKw: return "'neg'";
        case Tok::ClKw: return "'cl'";
        case Tok::Bang: return "'!'";
        case Tok::Amp: return "'&'";
        case Tok::Pipe: return "'|'";
        case Tok::Star: return "'*'";
        case Tok::Hash: return "'#'";
        case Tok::Plus: return "'+'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
    }
    return "?";
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const std::size_t pos = i + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i + 1;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            const std::string word = text.substr(i, j - i);
            Tok type = Tok::Ident;
            if (word == "true") type = Tok::True;
            else if (word == "false") type = Tok::False;
            else if (word == "neg") type = Tok::NegKw;
            else if (word == "cl") type = Tok::ClKw;
            tokens.push_back({type, word, pos});
            i = j;
            continue;
        }
        Tok type;
        switch (c) {
            case '!': type = Tok::Bang; break;
            case '&': type = Tok::Amp; break;
            case '|': type = Tok::Pipe; break;
            case '*': type = Tok::Star; break;
            case '#': type = Tok::Hash; break;
            case '+': type = Tok::Plus; break;
            case '(': type = Tok::LParen; break;
            case ')': type = Tok::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        tokens.push_back({type, std::string(1, c), pos});
        ++i;
    }
    tokens.push_back({Tok::End, "", text.size() + 1});
    return tokens;
}

// A parsed subexpression. Exactly one of pil/pcl is set; a pure
// interaction-logic region stays `pil` until a configuration-logic operator
// forces the promotion.
struct Operand {
    PilPtr pil;
    PclPtr pcl;
    std::size_t pos;

    PclPtr as_pcl() const { return pil ? pcl_pil(pil) : pcl; }
};

class Parser {
public:
    Parser(const std::string& text, bool pcl_allowed)
        : tokens_(lex(text)), pcl_allowed_(pcl_allowed) {}

    Operand parse_all() {
        Operand result = parse_plus();
        expect(Tok::End);
        return result;
    }

private:
    const Token& peek() const { return tokens_[index_]; }

    Token advance() { return tokens_[index_++]; }

    void expect(Tok type) {
        if (peek().type != type)
            throw ParseError(std::string("expected ") + token_name(type) + ", found " +
                                 token_name(peek().type),
                             peek().pos);
        advance();
    }

    void require_pcl(const Token& op) {
        if (!pcl_allowed_)
            throw ParseError(std::string(token_name(op.type)) +
                                 " is a configuration-logic operator; not allowed in an "
                                 "interaction-logic formula",
                             op.pos);
    }

    static PilPtr require_pil(const Operand& operand, const Token& op) {
        if (!operand.pil)
            throw ParseError(std::string(token_name(op.type)) +
                                 " expects interaction-logic operands",
                             operand.pos);
        return operand.pil;
    }

    Operand parse_plus() {
        Operand lhs = parse_coalesce();
        while (peek().type == Tok::Plus) {
            const Token op = advance();
            require_pcl(op);
            Operand rhs = parse_coalesce();
            lhs = Operand{nullptr, pcl_plus(lhs.as_pcl(), rhs.as_pcl()), lhs.pos};
        }
        return lhs;
    }

    Operand parse_coalesce() {
        Operand lhs = parse_times();
        while (peek().type == Tok::Hash) {
            const Token op = advance();
            require_pcl(op);
            Operand rhs = parse_times();
            lhs = Operand{nullptr, pcl_coalesce(lhs.as_pcl(), rhs.as_pcl()), lhs.pos};
        }
        return lhs;
    }

    Operand parse_times() {
        Operand lhs = parse_or();
        while (peek().type == Tok::Star) {
            const Token op = advance();
            require_pcl(op);
            Operand rhs = parse_or();
            lhs = Operand{nullptr, pcl_times(lhs.as_pcl(), rhs.as_pcl()), lhs.pos};
        }
        return lhs;
    }

    Operand parse_or() {
        Operand lhs = parse_and();
        while (peek().type == Tok::Pipe) {
            const Token op = advance();
            Operand rhs = parse_and();
            lhs = Operand{pil_or(require_pil(lhs, op), require_pil(rhs, op)), nullptr,
                          lhs.pos};
        }
        return lhs;
    }

    Operand parse_and() {
        Operand lhs = parse_unary();
        while (peek().type == Tok::Amp) {
            const Token op = advance();
            Operand rhs = parse_unary();
            lhs = Operand{pil_and(require_pil(lhs, op), require_pil(rhs, op)), nullptr,
                          lhs.pos};
        }
        return lhs;
    }

    Operand parse_unary() {
        const Token& tok = peek();
        switch (tok.type) {
            case Tok::Bang: {
                const Token op = advance();
                Operand operand = parse_unary();
                return Operand{pil_not(require_pil(operand, op)), nullptr, op.pos};
            }
            case Tok::NegKw: {
                const Token op = advance();
                require_pcl(op);
                Operand operand = parse_unary();
                return Operand{nullptr, pcl_neg(operand.as_pcl()), op.pos};
            }
            case Tok::ClKw: {
                const Token op = advance();
                require_pcl(op);
                Operand operand = parse_unary();
                return Operand{nullptr, pcl_closure(operand.as_pcl()), op.pos};
            }
            default:
                return parse_primary();
        }
    }

    Operand parse_primary() {
        const Token tok = advance();
        switch (tok.type) {
            case Tok::True:
                return Operand{pil_true(), nullptr, tok.pos};
            case Tok::False:
                return Operand{pil_false(), nullptr, tok.pos};
            case Tok::Ident:
                return Operand{pil_atom(tok.text), nullptr, tok.pos};
            case Tok::LParen: {
                Operand inner = parse_plus();
                expect(Tok::RParen);
                inner.pos = tok.pos;
                return inner;
            }
            default:
                throw ParseError(std::string("expected a formula, found ") +
                                     token_name(tok.type),
                                 tok.pos);
        }
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    bool pcl_allowed_;
};

}  // namespace

PilPtr parse_pil(const std::string& text) {
    Parser parser(text, /*pcl_allowed=*/false);
    Operand result = parser.parse_all();
    // With pcl operators rejected, the result is always an fPIL region.
    return result.pil;
}

PclPtr parse_pcl(const std::string& text) {
    Parser parser(text, /*pcl_allowed=*/true);
    return parser.parse_all().as_pcl();
}

}  // namespace fpcl
