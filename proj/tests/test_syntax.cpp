#include "doctest.h"
#include "fpcl/parser.hpp"
#include "fpcl/printer.hpp"
#include "support/fuzz.hpp"

using namespace fpcl;

TEST_CASE("pil parsing desugars derived forms") {
    // p & !p  ==  !(!p | !!p)
    const PilPtr parsed = parse_pil("p & !p");
    const PilPtr expected = pil_and(pil_atom("p"), pil_not(pil_atom("p")));
    CHECK(equal(parsed, expected));

    CHECK(equal(parse_pil("false"), pil_not(pil_true())));

    // Precedence: ! > & > |, left-associative.
    CHECK(equal(parse_pil("p | q & r"),
                pil_or(pil_atom("p"), pil_and(pil_atom("q"), pil_atom("r")))));
    CHECK(equal(parse_pil("p | q | r"),
                pil_or(pil_or(pil_atom("p"), pil_atom("q")), pil_atom("r"))));
    CHECK(equal(parse_pil("!p & q"), pil_and(pil_not(pil_atom("p")), pil_atom("q"))));
    CHECK(equal(parse_pil("(p | q) & r"),
                pil_and(pil_or(pil_atom("p"), pil_atom("q")), pil_atom("r"))));
}

TEST_CASE("pcl parsing precedence and desugaring") {
    // # binds tighter than +.
    const PclPtr a = pcl_pil(pil_atom("p"));
    const PclPtr b = pcl_pil(pil_atom("q"));
    const PclPtr c = pcl_pil(pil_atom("r"));
    CHECK(equal(parse_pcl("p # q + r"), pcl_plus(pcl_coalesce(a, b), c)));

    // cl p == p # true
    CHECK(equal(parse_pcl("cl p"), pcl_coalesce(a, pcl_pil(pil_true()))));

    // p * q == neg(neg p + neg q)
    CHECK(equal(parse_pcl("p * q"), pcl_neg(pcl_plus(pcl_neg(a), pcl_neg(b)))));

    // * binds tighter than #, | tighter than *.
    CHECK(equal(parse_pcl("p * q # r"), pcl_coalesce(pcl_times(a, b), c)));
    CHECK(equal(parse_pcl("p | q * r"),
                pcl_times(pcl_pil(pil_or(pil_atom("p"), pil_atom("q"))), c)));
    CHECK(equal(parse_pcl("neg p + q"), pcl_plus(pcl_neg(a), b)));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_pil("p |"), ParseError);
    CHECK_THROWS_AS(parse_pil("p & (q"), ParseError);
    CHECK_THROWS_AS(parse_pil("p ? q"), ParseError);
    CHECK_THROWS_AS(parse_pcl("# p"), ParseError);
    try {
        parse_pcl("p @ q");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
    }
}

TEST_CASE("layer mixing is rejected") {
    // ! / & / | need interaction-logic operands.
    CHECK_THROWS_AS(parse_pcl("(p # q) & r"), ParseError);
    CHECK_THROWS_AS(parse_pcl("! (p + q)"), ParseError);
    CHECK_THROWS_AS(parse_pcl("neg p | q"), ParseError);
    // pcl operators are rejected by the pil parser.
    CHECK_THROWS_AS(parse_pil("p + q"), ParseError);
    CHECK_THROWS_AS(parse_pil("neg p"), ParseError);
    CHECK_THROWS_AS(parse_pil("cl p"), ParseError);
}

TEST_CASE("printing uses minimal parentheses") {
    CHECK(print_formula(pil_or(pil_atom("p"), pil_atom("q"))) == "p | q");
    CHECK(print_formula(pcl_coalesce(pcl_pil(pil_atom("p")), pcl_pil(pil_true()))) ==
          "p # true");
    CHECK(print_formula(parse_pcl("(p + q) # r")) == "(p + q) # r");
    CHECK(print_formula(parse_pcl("p # (q + r)")) == "p # (q + r)");
    CHECK(print_formula(parse_pil("p & (q | r)")) == "p & (q | r)");
    CHECK(print_formula(parse_pil("!(p | q)")) == "!(p | q)");
    CHECK(print_formula(parse_pil("!!p")) == "!!p");
    CHECK(print_formula(parse_pcl("neg (p + q)")) == "neg (p + q)");
    CHECK(print_formula(parse_pcl("cl p")) == "p # true");
    CHECK(print_formula(parse_pcl("p * q")) == "neg (neg p + neg q)");
}

TEST_CASE("round trip: parse(print(f)) == f") {
    testing::Fuzzer fuzz(0xf01dab1e, {"p", "q", "r"});
    for (int i = 0; i < 500; ++i) {
        const PilPtr f = fuzz.pil(4);
        CHECK(equal(parse_pil(print_formula(f)), f));
    }
    for (int i = 0; i < 500; ++i) {
        const PclPtr z = fuzz.pcl(4);
        CHECK(equal(parse_pcl(print_formula(z)), z));
    }
}

TEST_CASE("build helpers") {
    const PclPtr z = pcl_pil(pil_atom("p"));
    CHECK(equal(big_plus({z}), z));
    CHECK_THROWS_AS(big_plus({}), DomainError);
    CHECK_THROWS_AS(big_or({}), DomainError);

    const PilPtr p = pil_atom("p");
    const PilPtr q = pil_atom("q");
    const PilPtr r = pil_atom("r");
    CHECK(equal(big_or({p, q, r}), pil_or(pil_or(p, q), r)));
    CHECK(equal(big_and({p, q}), pil_and(p, q)));

    const PclPtr zq = pcl_pil(q);
    CHECK(equal(pcl_times(z, zq), pcl_neg(pcl_plus(pcl_neg(z), pcl_neg(zq)))));
    CHECK(equal(pcl_closure(z), pcl_coalesce(z, pcl_pil(pil_true()))));
    CHECK(equal(big_coalesce({z, zq, pcl_pil(r)}),
                pcl_coalesce(pcl_coalesce(z, zq), pcl_pil(r))));
}

TEST_CASE("keywords cannot be ports") {
    CHECK_THROWS_AS(pil_atom("neg"), DomainError);
    CHECK_THROWS_AS(pil_atom("true"), DomainError);
    CHECK_THROWS_AS(validate_port_name("cl"), DomainError);
    CHECK_THROWS_AS(validate_port_name("0p"), DomainError);
    CHECK_NOTHROW(validate_port_name("p_1"));
    CHECK_NOTHROW(validate_port_name("_x"));
    // `negx` is an ordinary identifier.
    CHECK(equal(parse_pil("negx"), pil_atom("negx")));
}
