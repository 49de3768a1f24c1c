#include <map>

#include "doctest.h"
#include "fpcl/eval.hpp"
#include "fpcl/parser.hpp"
#include "support/fuzz.hpp"
#include "support/naive.hpp"

using namespace fpcl;

namespace {

Interaction weights(AlgebraKind kind,
                    const std::vector<std::pair<std::string, std::string>>& entries) {
    std::vector<std::pair<std::string, Value>> parsed;
    for (const auto& [port, text] : entries)
        parsed.emplace_back(port, Value::parse(kind, text));
    return Interaction::make(std::move(parsed));
}

Configuration config(std::vector<Interaction> members) {
    return Configuration::make(std::move(members));
}

}  // namespace

TEST_CASE("eval_pil base cases") {
    const auto a = weights(AlgebraKind::FuzzyRational, {{"p", "0.3"}, {"q", "1"}});
    CHECK(eval_pil(parse_pil("true"), a) == Value::one(AlgebraKind::FuzzyRational));
    CHECK(eval_pil(parse_pil("!p"), a) == Value::fuzzy(Rational(7, 10)));
    CHECK(eval_pil(parse_pil("p | q"), a) == Value::one(AlgebraKind::FuzzyRational));
    CHECK(eval_pil(parse_pil("false"), a) == Value::zero(AlgebraKind::FuzzyRational));

    // p & !p at a(p) = u over Kleene3: meet(u, u-bar) = u.
    const auto ak = weights(AlgebraKind::Kleene3, {{"p", "u"}});
    CHECK(eval_pil(parse_pil("p & !p"), ak) == Value::u(AlgebraKind::Kleene3));

    CHECK_THROWS_AS(eval_pil(parse_pil("r"), a), DomainError);
}

TEST_CASE("eval_pil_on_config meets over members") {
    const auto a1 = weights(AlgebraKind::Bool2, {{"p", "1"}, {"q", "0"}});
    const auto a2 = weights(AlgebraKind::Bool2, {{"p", "0"}, {"q", "1"}});
    const Configuration g = config({a1, a2});
    CHECK(eval_pil_on_config(parse_pil("true"), g) == Value::one(AlgebraKind::Bool2));
    // meet of complements: !p on {a1, a2} = 0 ^ 1 = 0.
    CHECK(eval_pil_on_config(parse_pil("!p"), g) == Value::zero(AlgebraKind::Bool2));
    // Singleton delegates to eval_pil.
    const Configuration g1 = config({a1});
    CHECK(eval_pil_on_config(parse_pil("p"), g1) == eval_pil(parse_pil("p"), a1));
}

TEST_CASE("negation differs across the layers: !p vs neg p") {
    const auto a1 = weights(AlgebraKind::Kleene3, {{"p", "1"}});
    const auto a2 = weights(AlgebraKind::Kleene3, {{"p", "0"}});
    const Configuration g = config({a1, a2});
    // ||!p||(g) = 0-bar ^ 1-bar = 0; ||neg p||(g) = join of complements = 1.
    CHECK(eval_pcl(parse_pcl("!p"), g) == Value::zero(AlgebraKind::Kleene3));
    CHECK(eval_pcl(parse_pcl("neg p"), g) == Value::one(AlgebraKind::Kleene3));
}

TEST_CASE("enumerate_covers counts 3^n - 2") {
    const auto a1 = weights(AlgebraKind::Bool2, {{"p", "1"}, {"q", "0"}});
    const auto a2 = weights(AlgebraKind::Bool2, {{"p", "0"}, {"q", "1"}});
    const auto a3 = weights(AlgebraKind::Bool2, {{"p", "1"}, {"q", "1"}});

    CHECK(enumerate_covers(config({a1})).size() == 1);
    CHECK(enumerate_covers(config({a1, a2})).size() == 7);
    CHECK(enumerate_covers(config({a1, a2, a3})).size() == 25);

    // Singleton: the only cover is ({a}, {a}).
    const auto covers = enumerate_covers(config({a1}));
    CHECK(covers[0].first == config({a1}));
    CHECK(covers[0].second == config({a1}));

    // Every pair unions to the whole configuration and both sides are nonempty.
    for (const auto& [left, right] : enumerate_covers(config({a1, a2, a3}))) {
        std::vector<Interaction> all = left.members();
        all.insert(all.end(), right.members().begin(), right.members().end());
        CHECK(config(std::move(all)) == config({a1, a2, a3}));
    }
}

TEST_CASE("eval_pcl against the independent naive evaluator") {
    testing::Fuzzer fuzz(0xcafe01, {"p", "q"});
    const auto universe = enumerate_interactions({"p", "q"}, AlgebraKind::Kleene3);
    for (int i = 0; i < 60; ++i) {
        const PclPtr z = fuzz.pcl(3);
        // Random small configuration.
        std::vector<Interaction> members;
        const std::size_t size = 1 + fuzz.pick(3);
        for (std::size_t j = 0; j < size; ++j) members.push_back(universe[fuzz.pick(universe.size())]);
        const Configuration g = config(std::move(members));
        CHECK(eval_pcl(z, g) == testing::naive_pcl(*z, g.members()));
    }
}

TEST_CASE("dense evaluator agrees with the sparse one") {
    testing::Fuzzer fuzz(0xdeadf00d, {"p", "q"});
    const auto universe = enumerate_interactions({"p", "q"}, AlgebraKind::Four);
    DenseEvaluator dense(universe);
    SparseEvaluator sparse(universe);
    for (int i = 0; i < 25; ++i) {
        const PclPtr z = fuzz.pcl(3);
        const auto& table = dense.table(z);
        for (Mask m = 1; m < (Mask{1} << universe.size()); m += 37)
            CHECK(dense.decode(table[m]) == sparse.eval(z, m));
    }
}

TEST_CASE("worked example: contradictory port over Four") {
    // gamma = {alpha}, alpha(p) = u, alpha(q) = w.
    const auto alpha = weights(AlgebraKind::Four, {{"p", "u"}, {"q", "w"}});
    const Configuration g = config({alpha});
    CHECK(eval_pcl(parse_pcl("p & !p"), g) == Value::u(AlgebraKind::Four));
    CHECK(eval_pcl(parse_pcl("(p & !p & q) | (p & !p & !q)"), g) ==
          Value::zero(AlgebraKind::Four));
}

TEST_CASE("closure equals the subset join and the # true form") {
    testing::Fuzzer fuzz(0xc105a7e, {"p", "q"});
    const auto universe = enumerate_interactions({"p", "q"}, AlgebraKind::Kleene3);
    for (int i = 0; i < 40; ++i) {
        const PclPtr z = fuzz.pcl(3);
        std::vector<Interaction> members;
        const std::size_t size = 1 + fuzz.pick(3);
        for (std::size_t j = 0; j < size; ++j)
            members.push_back(universe[fuzz.pick(universe.size())]);
        const Configuration g = config(std::move(members));
        const Value via_subsets = eval_closure(z, g);
        const Value via_coalesce = eval_pcl(pcl_closure(z), g);
        const Value via_naive = testing::naive_closure(*z, g.members());
        CHECK(via_subsets == via_coalesce);
        CHECK(via_subsets == via_naive);
    }

    // Singleton: closure equals plain evaluation; false stays 0.
    const auto a = weights(AlgebraKind::Kleene3, {{"p", "u"}, {"q", "1"}});
    const Configuration g1 = config({a});
    const PclPtr z = parse_pcl("p # q + neg p");
    CHECK(eval_closure(z, g1) == eval_pcl(z, g1));
    CHECK(eval_closure(parse_pcl("false"), g1) == Value::zero(AlgebraKind::Kleene3));
}

TEST_CASE("enumerate_interactions counts and canonical order") {
    CHECK(enumerate_interactions({"p"}, AlgebraKind::Bool2).size() == 1);
    CHECK(enumerate_interactions({"p", "q"}, AlgebraKind::Bool2).size() == 3);
    CHECK(enumerate_interactions({"p", "q"}, AlgebraKind::Kleene3).size() == 8);
    CHECK(enumerate_interactions({"p", "q"}, AlgebraKind::Four).size() == 15);

    const auto only = enumerate_interactions({"p"}, AlgebraKind::Bool2);
    CHECK(only[0].at("p") == Value::one(AlgebraKind::Bool2));

    CHECK_THROWS_AS(enumerate_interactions({"p"}, AlgebraKind::FuzzyRational),
                    DomainError);
    CHECK(enumerate_interactions({"p"}, sample_grid(4)).size() == 4);
}

TEST_CASE("enumerate_configurations counts") {
    CHECK(enumerate_configurations({"p"}, AlgebraKind::Bool2).size() == 1);
    CHECK(enumerate_configurations({"p", "q"}, AlgebraKind::Bool2).size() == 7);
    CHECK(enumerate_configurations({"p", "q"}, AlgebraKind::Kleene3).size() == 255);
    CHECK(enumerate_configurations({"p", "q"}, AlgebraKind::Four, 2).size() ==
          15 + 15 * 14 / 2);
}

TEST_CASE("configuration JSON") {
    const std::string text = R"({"algebra":"fuzzy","ports":["p","q"],
        "interactions":[{"p":"0.3","q":"1"},{"p":"1","q":"0"}]})";
    const Configuration g = parse_configuration_json(text);
    CHECK(g.size() == 2);
    CHECK(g.algebra() == AlgebraKind::FuzzyRational);

    // Round trip through the serialized form.
    CHECK(parse_configuration_json(configuration_json(g)) == g);

    // Rejections.
    CHECK_THROWS_AS(parse_configuration_json(
                        R"({"algebra":"fuzzy","ports":["p"],"interactions":[]})"),
                    DomainError);
    CHECK_THROWS_AS(parse_configuration_json(
                        R"({"algebra":"fuzzy","ports":["p"],"interactions":[{"p":"0"}]})"),
                    DomainError);  // all-zero
    CHECK_THROWS_AS(
        parse_configuration_json(
            R"({"algebra":"fuzzy","ports":["p"],"interactions":[{"p":"1","x":"1"}]})"),
        DomainError);  // unknown port
    CHECK_THROWS_AS(
        parse_configuration_json(
            R"({"algebra":"fuzzy","ports":["p","q"],"interactions":[{"p":"1"}]})"),
        DomainError);  // missing port
    CHECK_THROWS_AS(
        parse_configuration_json(
            R"({"algebra":"kleene3","ports":["p"],"interactions":[{"p":"w"}]})"),
        DomainError);  // value outside the algebra
    CHECK_THROWS_AS(
        parse_configuration_json(
            R"({"algebra":"fuzzy","ports":["p"],"interactions":[{"p":1}]})"),
        DomainError);  // weights must be strings
    CHECK_THROWS_AS(parse_configuration_json("{"), ParseError);

    // Duplicates merge: configurations are sets.
    const Configuration dup = parse_configuration_json(
        R"({"algebra":"bool2","ports":["p"],"interactions":[{"p":"1"},{"p":"1"}]})");
    CHECK(dup.size() == 1);
}

// Quantified proposition checks (the acceptance suite runs the full corpus;
// these are smoke-sized).
namespace {

struct Domain {
    std::string name;
    std::vector<Interaction> universe;
    std::optional<std::size_t> max_size;
};

std::vector<Domain> small_domains() {
    return {
        {"bool2", enumerate_interactions({"p", "q"}, AlgebraKind::Bool2), std::nullopt},
        {"kleene3", enumerate_interactions({"p", "q"}, AlgebraKind::Kleene3),
         std::nullopt},
        {"four<=2", enumerate_interactions({"p", "q"}, AlgebraKind::Four), 2},
        {"fuzzy<=2", enumerate_interactions({"p", "q"}, sample_grid(4)), 2},
    };
}

void check_pcl_equiv(const PclPtr& lhs, const PclPtr& rhs) {
    for (const auto& domain : small_domains()) {
        SparseEvaluator ev(domain.universe);
        const std::size_t n = domain.universe.size();
        const std::size_t limit = domain.max_size.value_or(n);
        for (Mask m = 1; m < (Mask{1} << n); ++m) {
            if (static_cast<std::size_t>(__builtin_popcountll(m)) > limit) continue;
            CHECK(ev.eval(lhs, m) == ev.eval(rhs, m));
        }
    }
}

}  // namespace

TEST_CASE("pcl operator laws on fuzzed formulas") {
    testing::Fuzzer fuzz(0x5eed, {"p", "q"});
    for (int i = 0; i < 10; ++i) {
        const PclPtr x = fuzz.pcl(2);
        const PclPtr y = fuzz.pcl(2);
        const PclPtr z = fuzz.pcl(2);
        // Associativity/commutativity of + and #.
        check_pcl_equiv(pcl_plus(x, y), pcl_plus(y, x));
        check_pcl_equiv(pcl_plus(pcl_plus(x, y), z), pcl_plus(x, pcl_plus(y, z)));
        check_pcl_equiv(pcl_coalesce(x, y), pcl_coalesce(y, x));
        check_pcl_equiv(pcl_coalesce(pcl_coalesce(x, y), z),
                        pcl_coalesce(x, pcl_coalesce(y, z)));
        // Distribution of # over +.
        check_pcl_equiv(pcl_coalesce(x, pcl_plus(y, z)),
                        pcl_plus(pcl_coalesce(x, y), pcl_coalesce(x, z)));
        // Double negation and idempotency.
        check_pcl_equiv(pcl_neg(pcl_neg(x)), x);
        check_pcl_equiv(pcl_plus(x, x), x);
        check_pcl_equiv(pcl_times(x, x), x);
    }
}
