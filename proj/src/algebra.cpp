#include "fpcl/algebra.hpp"

#include <array>
#include <cstdlib>

namespace fpcl {

namespace {

// Positional codes: 0 -> 0, u -> 1, w -> 2, 1 -> 3.
constexpr std::uint8_t kZero = 0;
constexpr std::uint8_t kU = 1;
constexpr std::uint8_t kW = 2;
constexpr std::uint8_t kOne = 3;

// Operator tables of the four element algebra, indexed by positional code.
constexpr std::uint8_t kJoin4[4][4] = {
    {kZero, kU, kW, kOne},
    {kU, kU, kOne, kOne},
    {kW, kOne, kW, kOne},
    {kOne, kOne, kOne, kOne},
};
constexpr std::uint8_t kMeet4[4][4] = {
    {kZero, kZero, kZero, kZero},
    {kZero, kU, kZero, kU},
    {kZero, kZero, kW, kW},
    {kZero, kU, kW, kOne},
};

void require_same(const Value& a, const Value& b) {
    if (a.kind() != b.kind())
        throw DomainError(std::string("mixed-algebra operands: ") +
                          algebra_name(a.kind()) + " vs " + algebra_name(b.kind()));
}

bool code_valid(AlgebraKind kind, std::uint8_t code) {
    switch (kind) {
        case AlgebraKind::Bool2: return code == kZero || code == kOne;
        case AlgebraKind::Kleene3: return code != kW && code <= kOne;
        case AlgebraKind::Four: return code <= kOne;
        case AlgebraKind::FuzzyRational: return false;
    }
    return false;
}

}  // namespace

const char* algebra_name(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::Bool2: return "bool2";
        case AlgebraKind::Kleene3: return "kleene3";
        case AlgebraKind::Four: return "four";
        case AlgebraKind::FuzzyRational: return "fuzzy";
    }
    return "?";
}

std::optional<AlgebraKind> algebra_from_name(std::string_view name) {
    if (name == "bool2") return AlgebraKind::Bool2;
    if (name == "kleene3") return AlgebraKind::Kleene3;
    if (name == "four") return AlgebraKind::Four;
    if (name == "fuzzy") return AlgebraKind::FuzzyRational;
    return std::nullopt;
}

const char* class_name(AlgebraClass cls) {
    switch (cls) {
        case AlgebraClass::DeMorgan: return "demorgan";
        case AlgebraClass::Kleene: return "kleene";
        case AlgebraClass::Boolean: return "boolean";
    }
    return "?";
}

Value Value::zero(AlgebraKind kind) {
    if (kind == AlgebraKind::FuzzyRational) return fuzzy(Rational(0, 1));
    return from_code(kind, kZero);
}

Value Value::one(AlgebraKind kind) {
    if (kind == AlgebraKind::FuzzyRational) return fuzzy(Rational(1, 1));
    return from_code(kind, kOne);
}

Value Value::u(AlgebraKind kind) {
    if (kind != AlgebraKind::Kleene3 && kind != AlgebraKind::Four)
        throw DomainError(std::string("no element 'u' in ") + algebra_name(kind));
    return from_code(kind, kU);
}

Value Value::w() { return from_code(AlgebraKind::Four, kW); }

Value Value::fuzzy(const Rational& q) {
    if (q < Rational(0, 1) || Rational(1, 1) < q)
        throw DomainError("fuzzy value out of [0, 1]: " + q.str());
    Value v;
    v.kind_ = AlgebraKind::FuzzyRational;
    v.q_ = q;
    return v;
}

Value Value::from_code(AlgebraKind kind, std::uint8_t code) {
    if (!code_valid(kind, code))
        throw DomainError(std::string("invalid element code for ") + algebra_name(kind));
    Value v;
    v.kind_ = kind;
    v.code_ = code;
    return v;
}

Value Value::parse(AlgebraKind kind, const std::string& text) {
    if (kind == AlgebraKind::FuzzyRational) return fuzzy(Rational::parse(text));
    if (text == "0") return zero(kind);
    if (text == "1") return one(kind);
    if (text == "u" && kind != AlgebraKind::Bool2) return u(kind);
    if (text == "w" && kind == AlgebraKind::Four) return w();
    throw DomainError("value '" + text + "' is not an element of " + algebra_name(kind));
}

bool Value::is_zero() const {
    if (kind_ == AlgebraKind::FuzzyRational) return q_ == Rational(0, 1);
    return code_ == kZero;
}

bool Value::is_one() const {
    if (kind_ == AlgebraKind::FuzzyRational) return q_ == Rational(1, 1);
    return code_ == kOne;
}

std::uint8_t Value::code() const {
    if (!is_finite()) throw DomainError("fuzzy values have no positional code");
    return code_;
}

const Rational& Value::rational() const {
    if (is_finite()) throw DomainError("finite element has no rational value");
    return q_;
}

std::string Value::str() const {
    if (kind_ == AlgebraKind::FuzzyRational) return q_.str();
    switch (code_) {
        case kZero: return "0";
        case kU: return "u";
        case kW: return "w";
        default: return "1";
    }
}

bool operator==(const Value& a, const Value& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == AlgebraKind::FuzzyRational) return a.q_ == b.q_;
    return a.code_ == b.code_;
}

bool Value::canonical_less(const Value& a, const Value& b) {
    require_same(a, b);
    if (a.kind_ == AlgebraKind::FuzzyRational) return a.q_ < b.q_;
    return a.code_ < b.code_;
}

Value join(const Value& a, const Value& b) {
    require_same(a, b);
    switch (a.kind()) {
        case AlgebraKind::FuzzyRational:
            return a.rational() < b.rational() ? b : a;
        case AlgebraKind::Four:
            return Value::from_code(a.kind(), kJoin4[a.code()][b.code()]);
        default:
            return a.code() < b.code() ? b : a;  // chain
    }
}

Value meet(const Value& a, const Value& b) {
    require_same(a, b);
    switch (a.kind()) {
        case AlgebraKind::FuzzyRational:
            return b.rational() < a.rational() ? b : a;
        case AlgebraKind::Four:
            return Value::from_code(a.kind(), kMeet4[a.code()][b.code()]);
        default:
            return b.code() < a.code() ? b : a;  // chain
    }
}

Value complement(const Value& a) {
    switch (a.kind()) {
        case AlgebraKind::FuzzyRational: {
            const Rational& q = a.rational();
            return Value::fuzzy(Rational(q.den() - q.num(), q.den()));
        }
        case AlgebraKind::Bool2:
            return Value::from_code(a.kind(), a.code() == kZero ? kOne : kZero);
        default:
            // Kleene3 and Four: 0 <-> 1, u and w are self-complementary.
            if (a.code() == kZero) return Value::from_code(a.kind(), kOne);
            if (a.code() == kOne) return Value::from_code(a.kind(), kZero);
            return a;
    }
}

bool leq(const Value& a, const Value& b) { return join(a, b) == b; }

std::vector<Value> elements(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::Bool2:
            return {Value::zero(kind), Value::one(kind)};
        case AlgebraKind::Kleene3:
            return {Value::zero(kind), Value::u(kind), Value::one(kind)};
        case AlgebraKind::Four:
            return {Value::zero(kind), Value::u(kind), Value::w(), Value::one(kind)};
        case AlgebraKind::FuzzyRational:
            throw DomainError("infinite carrier: fuzzy has no element list; use sample_grid");
    }
    return {};
}

std::vector<Value> sample_grid(std::int64_t denominator) {
    if (denominator < 1) throw DomainError("grid denominator must be >= 1");
    std::vector<Value> grid;
    grid.reserve(static_cast<std::size_t>(denominator) + 1);
    for (std::int64_t i = 0; i <= denominator; ++i)
        grid.push_back(Value::fuzzy(Rational(i, denominator)));
    return grid;
}

namespace {

std::string witness1(const Value& a) { return "(" + a.str() + ")"; }
std::string witness2(const Value& a, const Value& b) {
    return "(" + a.str() + ", " + b.str() + ")";
}
std::string witness3(const Value& a, const Value& b, const Value& c) {
    return "(" + a.str() + ", " + b.str() + ", " + c.str() + ")";
}

using Law = LawResult;

template <typename Check>
Law check_unary(std::string name, const std::vector<Value>& k, Check check) {
    Law law{std::move(name), true, ""};
    for (const Value& a : k) {
        if (!check(a)) {
            law.holds = false;
            law.counterexample = witness1(a);
            return law;
        }
    }
    return law;
}

template <typename Check>
Law check_binary(std::string name, const std::vector<Value>& k, Check check) {
    Law law{std::move(name), true, ""};
    for (const Value& a : k)
        for (const Value& b : k) {
            if (!check(a, b)) {
                law.holds = false;
                law.counterexample = witness2(a, b);
                return law;
            }
        }
    return law;
}

template <typename Check>
Law check_ternary(std::string name, const std::vector<Value>& k, Check check) {
    Law law{std::move(name), true, ""};
    for (const Value& a : k)
        for (const Value& b : k)
            for (const Value& c : k) {
                if (!check(a, b, c)) {
                    law.holds = false;
                    law.counterexample = witness3(a, b, c);
                    return law;
                }
            }
    return law;
}

}  // namespace

bool LawReport::all_de_morgan_laws_hold() const {
    for (const auto& l : laws) {
        if (l.name == "kleene-condition" || l.name == "boolean-complement-meet" ||
            l.name == "boolean-complement-join")
            continue;
        if (!l.holds) return false;
    }
    return true;
}

const LawResult* LawReport::find(std::string_view name) const {
    for (const auto& l : laws)
        if (l.name == name) return &l;
    return nullptr;
}

LawReport check_laws(const std::vector<Value>& k) {
    if (k.empty()) throw DomainError("empty carrier");
    const AlgebraKind kind = k.front().kind();
    const Value zero = Value::zero(kind);
    const Value one = Value::one(kind);

    LawReport report;
    auto& laws = report.laws;

    laws.push_back(check_binary("join-commutativity", k, [](const Value& a, const Value& b) {
        return join(a, b) == join(b, a);
    }));
    laws.push_back(check_binary("meet-commutativity", k, [](const Value& a, const Value& b) {
        return meet(a, b) == meet(b, a);
    }));
    laws.push_back(check_ternary("join-associativity", k,
                                 [](const Value& a, const Value& b, const Value& c) {
                                     return join(join(a, b), c) == join(a, join(b, c));
                                 }));
    laws.push_back(check_ternary("meet-associativity", k,
                                 [](const Value& a, const Value& b, const Value& c) {
                                     return meet(meet(a, b), c) == meet(a, meet(b, c));
                                 }));
    laws.push_back(check_unary("join-idempotency", k,
                               [](const Value& a) { return join(a, a) == a; }));
    laws.push_back(check_unary("meet-idempotency", k,
                               [](const Value& a) { return meet(a, a) == a; }));
    laws.push_back(check_binary("absorption-join-meet", k, [](const Value& a, const Value& b) {
        return join(a, meet(a, b)) == a;
    }));
    laws.push_back(check_binary("absorption-meet-join", k, [](const Value& a, const Value& b) {
        return meet(a, join(a, b)) == a;
    }));
    laws.push_back(check_ternary("distributivity-meet-over-join", k,
                                 [](const Value& a, const Value& b, const Value& c) {
                                     return meet(a, join(b, c)) ==
                                            join(meet(a, b), meet(a, c));
                                 }));
    laws.push_back(check_ternary("distributivity-join-over-meet", k,
                                 [](const Value& a, const Value& b, const Value& c) {
                                     return join(a, meet(b, c)) ==
                                            meet(join(a, b), join(a, c));
                                 }));
    laws.push_back(check_unary("boundedness", k, [&](const Value& a) {
        return join(zero, a) == a && meet(one, a) == a && leq(zero, a) && leq(a, one);
    }));
    laws.push_back(check_unary("involution", k, [](const Value& a) {
        return complement(complement(a)) == a;
    }));
    laws.push_back(check_binary("de-morgan-join", k, [](const Value& a, const Value& b) {
        return complement(join(a, b)) == meet(complement(a), complement(b));
    }));
    laws.push_back(check_binary("de-morgan-meet", k, [](const Value& a, const Value& b) {
        return complement(meet(a, b)) == join(complement(a), complement(b));
    }));
    laws.push_back(check_binary("kleene-condition", k, [](const Value& a, const Value& b) {
        const Value lhs = meet(meet(a, complement(a)), join(b, complement(b)));
        return lhs == meet(a, complement(a));
    }));
    laws.push_back(check_unary("boolean-complement-meet", k, [&](const Value& a) {
        return meet(a, complement(a)) == zero;
    }));
    laws.push_back(check_unary("boolean-complement-join", k, [&](const Value& a) {
        return join(a, complement(a)) == one;
    }));

    const bool kleene = report.find("kleene-condition")->holds;
    const bool boolean = kleene && report.find("boolean-complement-meet")->holds &&
                         report.find("boolean-complement-join")->holds;
    report.classification = boolean  ? AlgebraClass::Boolean
                            : kleene ? AlgebraClass::Kleene
                                     : AlgebraClass::DeMorgan;
    return report;
}

LawReport check_laws(AlgebraKind kind, std::int64_t fuzzy_grid_denominator) {
    if (kind == AlgebraKind::FuzzyRational)
        return check_laws(sample_grid(fuzzy_grid_denominator));
    return check_laws(elements(kind));
}

AlgebraClass classify(AlgebraKind kind) {
    if (kind == AlgebraKind::FuzzyRational) {
        // Kleene by construction (min/max on a chain); spot-verify on a grid.
        const LawReport report = check_laws(sample_grid(4));
        if (!report.all_de_morgan_laws_hold() ||
            report.classification == AlgebraClass::DeMorgan)
            throw Error("fuzzy grid failed the Kleene spot check");
        return AlgebraClass::Kleene;
    }
    return check_laws(elements(kind)).classification;
}

}  // namespace fpcl
