#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctverify/error.hpp"
#include "ctverify/ltl/formula.hpp"
#include "ctverify/ltl/predicate.hpp"

namespace ctverify::patterns {

enum class ScopeKind { Globally, Before, After, Between, AfterUntil };

struct Scope {
    ScopeKind kind = ScopeKind::Globally;
    std::vector<ltl::Formula> delimiters;  // q for After; unused for Globally

    static Scope globally() { return {}; }
    static Scope after(ltl::Formula q) { return {ScopeKind::After, {std::move(q)}}; }
};

enum class PatternKind { Universality, Existence, Absence, Response, Precedence };

std::string_view to_string(ScopeKind s);
std::string_view to_string(PatternKind k);
std::size_t pattern_arity(PatternKind k);

/// Raised for scope/pattern combinations outside the supported catalog.
class UnsupportedPattern : public Error {
public:
    using Error::Error;
};

/// `kinds` lists the nesting chain outermost first; the chain is applied to
/// `args` innermost first, so {Existence, Universality} over P reads F(G P).
struct PatternInstance {
    Scope scope;
    std::vector<PatternKind> kinds;
    std::vector<ltl::Formula> args;
};

ltl::Formula instantiate(const PatternInstance& p);

struct CatalogEntry {
    ScopeKind scope;
    PatternKind kind;
    std::string template_text;
};

/// Supported scope x pattern combinations with their templates over P, Q and
/// scope delimiter q.
std::vector<CatalogEntry> catalog();

struct PropertySpec {
    std::string name;
    PatternInstance pattern;
    std::vector<ltl::AtomPredicate> atoms;
    ltl::Formula formula;
};

/// SS := |v_x - v_eq| <= alpha
ltl::AtomPredicate build_ss(ltl::Expr v_x, ltl::Expr v_eq, ltl::Expr alpha,
                            std::string name = "ss");

/// Same, with the expressions checked against the available columns.
ltl::AtomPredicate build_ss(ltl::Expr v_x, ltl::Expr v_eq, ltl::Expr alpha,
                            std::span<const std::string> columns, std::string name = "ss");

/// Globally eventually always `ss`.
PropertySpec build_stability(ltl::AtomPredicate ss);

/// Stability of the following gap: F G (d_rel - d_safe > 0.05 * d_safe).
PropertySpec build_acc_stability();

/// Look up a named control-theoretic property ("stability").
std::optional<PropertySpec> property_by_name(std::string_view name);

}  // namespace ctverify::patterns
