#include <catch_amalgamated.hpp>

#include <random>

#include "ctverify/error.hpp"
#include "ctverify/ltl/check.hpp"
#include "ctverify/ltl/parser.hpp"

using namespace ctverify;
using namespace ctverify::ltl;

namespace {

Table column_table(const std::vector<double>& x) {
    Table t;
    t.columns = {"x"};
    for (double v : x) t.rows.push_back({v});
    return t;
}

const std::vector<AtomPredicate> kSs{parse_atom_binding("ss = abs(x - 1) <= 0.05")};

}  // namespace

TEST_CASE("check_trace on stutter-extended traces", "[ltl][check]") {
    const Formula fg = parse_formula("F G ss");

    auto v = check_trace(fg, column_table({1.0, 1.01, 0.96, 1.0}), kSs);
    CHECK(v.status == VerdictStatus::Holds);
    CHECK(v.witness_index == 0u);

    v = check_trace(fg, column_table({1.0, 1.0, 1.0, 1.2}), kSs);
    CHECK(v.status == VerdictStatus::Violated);
    CHECK(v.counterexample_index == 3u);
    CHECK_FALSE(v.witness_index);

    v = check_trace(fg, column_table({3.0, 1.06, 1.0, 0.97, 1.02}), kSs);
    CHECK(v.holds());
    CHECK(v.witness_index == 2u);

    v = check_trace(parse_formula("G ss"), column_table({1.0, 2.0, 1.0}), kSs);
    CHECK(v.status == VerdictStatus::Violated);
    CHECK(v.counterexample_index == 1u);

    v = check_trace(parse_formula("ss U G !ss"), column_table({1.0, 1.0, 5.0}), kSs);
    CHECK(v.holds());
}

TEST_CASE("check_trace input errors", "[ltl][check]") {
    CHECK_THROWS_AS(check_trace(parse_formula("F G ss"), column_table({}), kSs), SchemaError);
    CHECK_THROWS_AS(check_trace(parse_formula("F G other"), column_table({1.0}), kSs), SchemaError);
    const std::vector<AtomPredicate> bad{parse_atom_binding("ss = y <= 1")};
    CHECK_THROWS_AS(check_trace(parse_formula("F G ss"), column_table({1.0}), bad), SchemaError);
}

TEST_CASE("F G p holds iff p holds on a suffix reaching the last sample", "[ltl][check][property]") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> len(1, 40);
    std::bernoulli_distribution in_band(0.7);
    const Formula fg = parse_formula("F G ss");
    for (int i = 0; i < 500; ++i) {
        std::vector<double> xs(static_cast<std::size_t>(len(rng)));
        for (double& x : xs) x = in_band(rng) ? 1.0 : 2.0;
        const auto v = check_trace(fg, column_table(xs), kSs);
        REQUIRE(v.status != VerdictStatus::InternalError);
        const bool scan = xs.back() == 1.0;
        REQUIRE(v.holds() == scan);
        if (scan) {
            std::size_t start = xs.size();
            while (start > 0 && xs[start - 1] == 1.0) --start;
            REQUIRE(v.witness_index == start);
        }
    }
}
