#include "fpcl/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace fpcl {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::int64_t parse_int(const std::string& s, const std::string& context) {
    std::string body = s;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    if (!all_digits(body) || body.size() > 18)
        throw DomainError("invalid " + context + " in rational literal: '" + s + "'");
    const std::int64_t v = std::strtoll(body.c_str(), nullptr, 10);
    return negative ? -v : v;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw DomainError("empty rational literal");

    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::int64_t num = parse_int(text.substr(0, slash), "numerator");
        const std::int64_t den = parse_int(text.substr(slash + 1), "denominator");
        if (den <= 0)
            throw DomainError("rational denominator must be positive: '" + text + "'");
        return Rational(num, den);
    }

    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_int(text, "integer"), 1);

    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (!frac.empty() && !all_digits(frac))
        throw DomainError("invalid decimal literal: '" + text + "'");
    if (frac.size() > 18)
        throw DomainError("too many fractional digits (max 18): '" + text + "'");

    std::int64_t whole_part = 0;
    bool negative = false;
    if (!whole.empty()) {
        if (whole == "-") {
            negative = true;
        } else {
            whole_part = parse_int(whole, "integer part");
            negative = whole_part < 0;
            if (negative) whole_part = -whole_part;
        }
    }

    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t frac_part = frac.empty() ? 0 : parse_int(frac, "fraction part");
    const __int128 wide = static_cast<__int128>(whole_part) * den + frac_part;
    if (wide > INT64_MAX)
        throw DomainError("decimal literal out of range: '" + text + "'");
    std::int64_t num = static_cast<std::int64_t>(wide);
    if (negative) num = -num;
    return Rational(num, den);
}

}  // namespace fpcl
