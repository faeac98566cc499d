#include <catch_amalgamated.hpp>

#include <random>

#include "ctverify/error.hpp"
#include "ctverify/ltl/lasso.hpp"
#include "ctverify/ltl/parser.hpp"
#include "ltl_generators.hpp"

using namespace ctverify::ltl;
using ctverify::testing::letters_of;

namespace {
LassoWord word(std::vector<bool> prefix, std::vector<bool> cycle) {
    return {letters_of(prefix), letters_of(cycle)};
}
}  // namespace

TEST_CASE("eval_lasso on hand-checked words", "[ltl][lasso]") {
    const Formula Gp = parse_formula("G p");
    const Formula FGp = parse_formula("F G p");
    const Formula GFp = parse_formula("G F p");

    CHECK(eval_lasso(Gp, word({}, {true})));
    CHECK_FALSE(eval_lasso(Gp, word({true}, {true, false})));
    CHECK(eval_lasso(FGp, word({false, false}, {true})));
    CHECK_FALSE(eval_lasso(FGp, word({true}, {true, false})));
    CHECK(eval_lasso(GFp, word({true}, {true, false})));
    CHECK_FALSE(eval_lasso(GFp, word({true, true}, {false})));
    CHECK(eval_lasso(parse_formula("X X p"), word({false, false}, {true})));
    CHECK_FALSE(eval_lasso(parse_formula("X p"), word({false, false}, {true})));
}

TEST_CASE("until and release fixpoints on the cycle", "[ltl][lasso]") {
    // p holds forever but q never: p U q is false (least fixpoint), q R p true.
    LassoWord w{{}, {{{"p", true}, {"q", false}}}};
    CHECK_FALSE(eval_lasso(parse_formula("p U q"), w));
    CHECK(eval_lasso(parse_formula("q R p"), w));
    // q arrives at the second cycle position.
    LassoWord w2{{{{"p", true}, {"q", false}}}, {{{"p", true}, {"q", false}}, {{"p", false}, {"q", true}}}};
    CHECK(eval_lasso(parse_formula("p U q"), w2));
    CHECK(eval_positions(parse_formula("p U q"), w2) == std::vector<bool>{true, true, true});
}

TEST_CASE("eval_lasso errors", "[ltl][lasso]") {
    CHECK_THROWS_AS(eval_lasso(parse_formula("p & q"), word({}, {true})), ctverify::SchemaError);
    CHECK_THROWS_AS(eval_lasso(parse_formula("p"), word({true}, {})), ctverify::SchemaError);
}

TEST_CASE("negation soundness and dualities", "[ltl][lasso][property]") {
    std::mt19937 rng(5);
    const std::vector<std::string> atoms{"p", "q", "r"};
    for (int i = 0; i < 400; ++i) {
        const Formula f = ctverify::testing::random_formula(rng, 5, atoms);
        const auto w = ctverify::testing::random_lasso(rng, atoms, 4, 3);
        REQUIRE(eval_lasso(f, w) != eval_lasso(neg(f), w));
    }
    const Formula p = atom("p"), q = atom("q");
    for (const auto& w : ctverify::testing::all_lassos({"p", "q"}, 3, 2)) {
        REQUIRE(eval_lasso(neg(eventually(neg(p))), w) == eval_lasso(globally(p), w));
        REQUIRE(eval_lasso(neg(until(p, q)), w) == eval_lasso(release(neg(p), neg(q)), w));
        REQUIRE(eval_lasso(eventually(p), w) == eval_lasso(until(tt(), p), w));
        REQUIRE(eval_lasso(globally(p), w) == eval_lasso(release(ff(), p), w));
    }
}
