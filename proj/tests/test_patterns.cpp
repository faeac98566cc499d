#include <catch_amalgamated.hpp>

#include <random>

#include "ctverify/harness.hpp"
#include "ctverify/ltl/parser.hpp"
#include "ctverify/patterns.hpp"

using namespace ctverify;
using namespace ctverify::patterns;
using namespace ctverify::ltl;

TEST_CASE("pattern instantiation under the Globally scope", "[patterns]") {
    const Formula ss = atom("ss"), p = atom("p"), q = atom("q");
    using K = PatternKind;
    CHECK(instantiate({Scope::globally(), {K::Existence, K::Universality}, {ss}}) ==
          eventually(globally(ss)));
    CHECK(instantiate({Scope::globally(), {K::Universality}, {p}}) == globally(p));
    CHECK(instantiate({Scope::globally(), {K::Universality, K::Existence}, {p}}) ==
          globally(eventually(p)));
    CHECK(instantiate({Scope::globally(), {K::Existence}, {p}}) == eventually(p));
    CHECK(instantiate({Scope::globally(), {K::Absence}, {p}}) == globally(neg(p)));
    CHECK(instantiate({Scope::globally(), {K::Response}, {p, q}}) ==
          globally(implies(p, eventually(q))));
    CHECK(instantiate({Scope::globally(), {K::Precedence}, {p, q}}) ==
          parse_formula("(!q U p) | G !q"));
}

TEST_CASE("pattern instantiation under the After scope", "[patterns]") {
    const Formula p = atom("p"), q = atom("q"), s = atom("s");
    using K = PatternKind;
    CHECK(instantiate({Scope::after(q), {K::Universality}, {p}}) == parse_formula("G(q -> G p)"));
    CHECK(instantiate({Scope::after(q), {K::Absence}, {p}}) == parse_formula("G(q -> G !p)"));
    CHECK(instantiate({Scope::after(q), {K::Response}, {p, s}}) ==
          parse_formula("G(q -> G(p -> F s))"));
    CHECK_THROWS_AS(instantiate({Scope::after(q), {K::Existence}, {p}}), UnsupportedPattern);
}

TEST_CASE("unsupported combinations are named errors", "[patterns]") {
    const Formula p = atom("p"), q = atom("q");
    using K = PatternKind;
    CHECK_THROWS_AS(instantiate({{ScopeKind::Between, {p, q}}, {K::Universality}, {p}}),
                    UnsupportedPattern);
    CHECK_THROWS_AS(instantiate({Scope::globally(), {K::Existence, K::Response}, {p, q}}),
                    UnsupportedPattern);
    CHECK_THROWS_AS(instantiate({Scope::globally(), {K::Response}, {p}}), UnsupportedPattern);
    CHECK_THROWS_AS(instantiate({Scope::globally(), {}, {p}}), UnsupportedPattern);
    try {
        instantiate({{ScopeKind::Before, {q}}, {K::Absence}, {p}});
        FAIL("expected UnsupportedPattern");
    } catch (const UnsupportedPattern& e) {
        CHECK(std::string(e.what()).find("Globally") != std::string::npos);
    }
}

TEST_CASE("catalog lists every supported template", "[patterns]") {
    const auto entries = catalog();
    CHECK(entries.size() == 8);
    CHECK(entries.front().template_text == "G P");
    for (const auto& e : entries) CHECK_NOTHROW(parse_formula(e.template_text));
}

TEST_CASE("steady-state predicate", "[patterns]") {
    const auto ss = build_ss(Expr::column("v"), Expr::literal(1.0), Expr::literal(0.05));
    const std::vector<std::string> cols{"v"};
    CHECK(ss.evaluate(cols, std::vector<double>{1.0}));
    CHECK_FALSE(ss.evaluate(cols, std::vector<double>{1.06}));
    CHECK(ss.evaluate(cols, std::vector<double>{0.96}));
    CHECK_THROWS_AS(build_ss(Expr::column("w"), Expr::literal(1.0), Expr::literal(0.05), cols),
                    SchemaError);
}

TEST_CASE("stability property", "[patterns]") {
    const auto ss = build_ss(Expr::column("x"), Expr::literal(1.0), Expr::literal(0.05));
    const PropertySpec spec = build_stability(ss);
    CHECK(spec.formula == eventually(globally(atom("ss"))));
    CHECK(spec.formula == instantiate({Scope::globally(),
                                       {PatternKind::Existence, PatternKind::Universality},
                                       {atom("ss")}}));
    CHECK(spec.formula == instantiate(spec.pattern));

    Table settled{{"x"}, {{1.0}, {1.0}}};
    Table drifted{{"x"}, {{1.0}, {1.5}}};
    CHECK(check_trace(spec.formula, settled, spec.atoms).holds());
    CHECK_FALSE(check_trace(spec.formula, drifted, spec.atoms).holds());
}

TEST_CASE("ACC stability atom", "[patterns]") {
    const PropertySpec spec = build_acc_stability();
    CHECK(spec.formula == parse_formula("F G ss"));
    REQUIRE(spec.atoms.size() == 1);
    const auto& atom_ss = spec.atoms.front();
    CHECK(to_string(atom_ss) == "ss = d_rel - d_safe > 0.05 * d_safe");
    const std::vector<std::string> cols{"d_rel", "d_safe"};
    CHECK(atom_ss.evaluate(cols, std::vector<double>{40.0, 13.9}));
    CHECK_FALSE(atom_ss.evaluate(cols, std::vector<double>{2.0, 17.8}));
    CHECK_FALSE(atom_ss.evaluate(cols, std::vector<double>{21.0, 20.0}));
    // One-sided: far beyond the band is still stable.
    CHECK(atom_ss.evaluate(cols, std::vector<double>{1000.0, 16.0}));
    CHECK(property_by_name("stability").has_value());
    CHECK_FALSE(property_by_name("overshoot").has_value());
}

TEST_CASE("ACC stability atom is scale invariant", "[patterns][property]") {
    const auto atom_ss = build_acc_stability().atoms.front();
    const std::vector<std::string> cols{"d_rel", "d_safe"};
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> d(1.0, 60.0);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    for (int i = 0; i < 2000; ++i) {
        const double rel = d(rng), safe = d(rng);
        // Keep away from the boundary where rounding could flip the comparison.
        if (std::abs(rel - 1.05 * safe) < 1e-6) continue;
        const double k = scale(rng);
        REQUIRE(atom_ss.evaluate(cols, std::vector<double>{rel, safe}) ==
                atom_ss.evaluate(cols, std::vector<double>{k * rel, k * safe}));
    }
}
