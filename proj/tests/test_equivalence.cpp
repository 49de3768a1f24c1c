#include "doctest.h"
#include "fpcl/equivalence.hpp"
#include "fpcl/eval.hpp"
#include "fpcl/parser.hpp"
#include "support/fuzz.hpp"

using namespace fpcl;

namespace {

const std::vector<std::string> PQ = {"p", "q"};

// Appendix worked sets over {p, q, r}.
const SetRep kSet1 = {
    {{{"p", "q"}, {"r"}}, {{"p", "!r"}}},
    {{{"!p", "!r"}, {"p", "r"}}, {{"p"}}, {{"true"}}},
};
const SetRep kSet2 = {
    {{{"p", "q"}, {"!r"}}, {{"p"}}},
    {{{"!q"}}, {{"!p"}}, {{"r"}}},
};

}  // namespace

TEST_CASE("nf_equal basics") {
    CHECK(nf_equal(kSet1, kSet1));
    CHECK_FALSE(nf_equal(kSet1, kSet2));
    CHECK(nf_equal_reference(kSet1, kSet1));
    CHECK_FALSE(nf_equal_reference(kSet1, kSet2));

    // Set semantics ignores order at every level.
    testing::Fuzzer fuzz(0x9e57ed);
    SetRep shuffled = kSet1;
    fuzz.shuffle_deep(shuffled);
    CHECK(nf_equal(kSet1, shuffled));
    CHECK(nf_equal_reference(kSet1, shuffled));
}

TEST_CASE("nf_equal agrees with the nested-loop reference on fuzzed pairs") {
    testing::Fuzzer fuzz(0xa1900, {"p", "q", "r"});
    int equal_count = 0;
    for (int i = 0; i < 300; ++i) {
        const SetRep a = fuzz.set_rep();
        SetRep b;
        switch (fuzz.pick(3)) {
            case 0: b = fuzz.set_rep(); break;
            case 1:
                b = a;
                fuzz.shuffle_deep(b);
                break;
            default:
                b = a;
                // Mutate one literal set.
                b[fuzz.pick(b.size())][0][0].push_back("x");
                break;
        }
        const bool sorted_eq = nf_equal(a, b);
        const bool reference_eq = nf_equal_reference(a, b);
        CHECK(sorted_eq == reference_eq);
        if (sorted_eq) ++equal_count;
    }
    CHECK(equal_count > 50);  // the corpus exercises both outcomes
}

TEST_CASE("nf_equal is an equivalence relation on fuzzed triples") {
    testing::Fuzzer fuzz(0x791ad, {"p", "q", "r"});
    for (int i = 0; i < 100; ++i) {
        SetRep a = fuzz.set_rep();
        SetRep b = a;
        fuzz.shuffle_deep(b);
        SetRep c = b;
        fuzz.shuffle_deep(c);
        CHECK(nf_equal(a, a));
        CHECK(nf_equal(a, b) == nf_equal(b, a));
        if (nf_equal(a, b) && nf_equal(b, c)) CHECK(nf_equal(a, c));
    }
}

TEST_CASE("decide_equiv on the worked pair, all three modes") {
    const PclPtr z1 = parse_pcl("p & !p");
    const PclPtr z2 = parse_pcl("(p & !p & q) | (p & !p & !q)");
    CHECK_FALSE(decide_equiv(z1, z2, PQ, NormalizationMode::DeMorgan));
    CHECK(decide_equiv(z1, z2, PQ, NormalizationMode::Kleene));
    CHECK(decide_equiv(z1, z2, PQ, NormalizationMode::Boolean));
}

TEST_CASE("oracle_equiv over Four finds the witness") {
    const PclPtr z1 = parse_pcl("p & !p");
    const PclPtr z2 = parse_pcl("(p & !p & q) | (p & !p & !q)");
    const EquivVerdict verdict = oracle_equiv(z1, z2, PQ, AlgebraKind::Four, 2);
    REQUIRE(verdict.kind == EquivVerdict::Kind::NotEquivalent);
    REQUIRE(verdict.witness.has_value());
    CHECK(eval_pcl(z1, *verdict.witness) != eval_pcl(z2, *verdict.witness));

    // The specific witness alpha(p) = u, alpha(q) = w yields (u, 0).
    const Configuration gamma = Configuration::make({Interaction::make(
        {{"p", Value::u(AlgebraKind::Four)}, {"q", Value::w()}})});
    CHECK(eval_pcl(z1, gamma) == Value::u(AlgebraKind::Four));
    CHECK(eval_pcl(z2, gamma) == Value::zero(AlgebraKind::Four));
}

TEST_CASE("oracle_equiv over Kleene3 is exhaustive on |P| = 2") {
    const PclPtr z1 = parse_pcl("p & !p");
    const PclPtr z2 = parse_pcl("(p & !p & q) | (p & !p & !q)");
    const EquivVerdict verdict = oracle_equiv(z1, z2, PQ, AlgebraKind::Kleene3);
    CHECK(verdict.kind == EquivVerdict::Kind::Equivalent);
    CHECK(verdict.samples_checked == 255);

    CHECK(oracle_equiv(z1, z1, PQ, AlgebraKind::Four, 2).kind ==
          EquivVerdict::Kind::Equivalent);
}

TEST_CASE("oracle guard") {
    const PclPtr z = parse_pcl("p");
    CHECK_THROWS_AS(oracle_equiv(z, z, PQ, AlgebraKind::Four), ResourceError);
    CHECK_THROWS_AS(oracle_equiv(z, z, PQ, AlgebraKind::FuzzyRational), DomainError);
}

TEST_CASE("fuzzy oracle samples without claiming equivalence") {
    const PclPtr z1 = parse_pcl("p & !p");
    const PclPtr z2 = parse_pcl("(p & !p & q) | (p & !p & !q)");
    const EquivVerdict same = oracle_equiv_fuzzy(z1, z2, PQ, 2, 2);
    CHECK(same.kind == EquivVerdict::Kind::NoCounterexampleFound);
    CHECK(same.samples_checked > 0);

    const EquivVerdict diff = oracle_equiv_fuzzy(parse_pcl("p"), parse_pcl("q"), PQ, 1, 2);
    REQUIRE(diff.kind == EquivVerdict::Kind::NotEquivalent);
    REQUIRE(diff.witness.has_value());
    CHECK(eval_pcl(parse_pcl("p"), *diff.witness) !=
          eval_pcl(parse_pcl("q"), *diff.witness));

    CHECK(oracle_equiv_fuzzy(z1, z1, PQ, 2, 2).kind ==
          EquivVerdict::Kind::NoCounterexampleFound);
}

TEST_CASE("cross_check agreement cases") {
    // Worked pair in Kleene mode: decide true, oracles cannot refute.
    const PclPtr z1 = parse_pcl("p & !p");
    const PclPtr z2 = parse_pcl("(p & !p & q) | (p & !p & !q)");
    const ConsistencyReport kleene = cross_check(z1, z2, PQ, NormalizationMode::Kleene);
    CHECK(kleene.decide);
    CHECK_FALSE(kleene.soundness_discrepancy());

    // p vs p | p in every mode.
    for (const auto mode : {NormalizationMode::DeMorgan, NormalizationMode::Kleene,
                            NormalizationMode::Boolean}) {
        const ConsistencyReport r =
            cross_check(parse_pcl("p"), parse_pcl("p | p"), PQ, mode);
        CHECK(r.decide);
        CHECK_FALSE(r.soundness_discrepancy());
    }

    // DeMorgan-mode disagreement of the worked pair is explained by Four.
    const ConsistencyReport dm = cross_check(z1, z2, PQ, NormalizationMode::DeMorgan);
    CHECK_FALSE(dm.decide);
    REQUIRE(dm.first_witness() != nullptr);
    CHECK(dm.first_witness()->domain == "four (size <= 2)");
}

TEST_CASE("mode monotonicity on fuzzed pairs") {
    testing::Fuzzer fuzz(0x3010, {"p", "q"});
    for (int i = 0; i < 60; ++i) {
        const PclPtr a = fuzz.pcl(3);
        const PclPtr b = fuzz.pcl(3);
        const bool dm = decide_equiv(a, b, PQ, NormalizationMode::DeMorgan);
        const bool kl = decide_equiv(a, b, PQ, NormalizationMode::Kleene);
        const bool bo = decide_equiv(a, b, PQ, NormalizationMode::Boolean);
        if (dm) CHECK(kl);
        if (kl) CHECK(bo);
    }
}

TEST_CASE("soundness: decide true implies no finite witness (fuzzed)") {
    testing::Fuzzer fuzz(0x50d4, {"p", "q"});
    for (int i = 0; i < 40; ++i) {
        const PclPtr a = fuzz.pcl(3);
        // Rewrites that preserve equivalence in every mode.
        PclPtr b;
        switch (fuzz.pick(4)) {
            case 0: b = pcl_neg(pcl_neg(a)); break;
            case 1: b = pcl_plus(a, a); break;
            case 2: b = pcl_times(a, a); break;
            default: b = a; break;
        }
        for (const auto mode : {NormalizationMode::DeMorgan, NormalizationMode::Kleene,
                                NormalizationMode::Boolean}) {
            const ConsistencyReport r = cross_check(a, b, PQ, mode);
            CHECK_FALSE(r.soundness_discrepancy());
        }
    }
}
