#include "ctverify/patterns.hpp"

#include <fmt/format.h>

namespace ctverify::patterns {

using namespace ltl;

std::string_view to_string(ScopeKind s) {
    switch (s) {
        case ScopeKind::Globally: return "Globally";
        case ScopeKind::Before: return "Before";
        case ScopeKind::After: return "After";
        case ScopeKind::Between: return "Between";
        case ScopeKind::AfterUntil: return "AfterUntil";
    }
    return "?";
}

std::string_view to_string(PatternKind k) {
    switch (k) {
        case PatternKind::Universality: return "Universality";
        case PatternKind::Existence: return "Existence";
        case PatternKind::Absence: return "Absence";
        case PatternKind::Response: return "Response";
        case PatternKind::Precedence: return "Precedence";
    }
    return "?";
}

std::size_t pattern_arity(PatternKind k) {
    return k == PatternKind::Response || k == PatternKind::Precedence ? 2 : 1;
}

namespace {

constexpr const char* kSupported =
    "Globally x {Universality, Existence, Absence, Response, Precedence}; "
    "After x {Universality, Absence, Response}";

Formula apply_unary(PatternKind k, Formula p) {
    switch (k) {
        case PatternKind::Universality: return globally(std::move(p));
        case PatternKind::Existence: return eventually(std::move(p));
        case PatternKind::Absence: return globally(neg(std::move(p)));
        default: break;
    }
    throw UnsupportedPattern(fmt::format("{} takes two arguments", to_string(k)));
}

Formula globally_template(const PatternInstance& p) {
    if (p.kinds.empty()) throw UnsupportedPattern("pattern nesting chain is empty");
    const PatternKind outer = p.kinds.front();
    if (p.kinds.size() > 1) {
        for (PatternKind k : p.kinds) {
            if (pattern_arity(k) == 2) {
                throw UnsupportedPattern(
                    fmt::format("{} cannot be part of a nesting chain", to_string(k)));
            }
        }
    }
    if (pattern_arity(outer) == 2) {
        if (p.args.size() != 2) {
            throw UnsupportedPattern(fmt::format("{} expects 2 arguments, got {}",
                                                 to_string(outer), p.args.size()));
        }
        const Formula& a = p.args[0];
        const Formula& b = p.args[1];
        if (outer == PatternKind::Response) return globally(implies(a, eventually(b)));
        // !b W a, written with the weak until unfolded
        return disj(until(neg(b), a), globally(neg(b)));
    }
    if (p.args.size() != 1) {
        throw UnsupportedPattern(
            fmt::format("nesting chain expects 1 argument, got {}", p.args.size()));
    }
    Formula f = p.args[0];
    for (auto it = p.kinds.rbegin(); it != p.kinds.rend(); ++it) f = apply_unary(*it, f);
    return f;
}

}  // namespace

Formula instantiate(const PatternInstance& p) {
    switch (p.scope.kind) {
        case ScopeKind::Globally: return globally_template(p);
        case ScopeKind::After: {
            if (p.scope.delimiters.size() != 1) {
                throw UnsupportedPattern("After scope needs exactly one delimiter q");
            }
            const PatternKind outer = p.kinds.empty() ? PatternKind::Existence : p.kinds.front();
            if (outer != PatternKind::Universality && outer != PatternKind::Absence &&
                outer != PatternKind::Response) {
                throw UnsupportedPattern(fmt::format("After x {} is not supported; supported: {}",
                                                     to_string(outer), kSupported));
            }
            return globally(implies(p.scope.delimiters.front(), globally_template(p)));
        }
        default:
            throw UnsupportedPattern(fmt::format("scope {} is not supported; supported: {}",
                                                 to_string(p.scope.kind), kSupported));
    }
}

std::vector<CatalogEntry> catalog() {
    const Formula P = atom("P");
    const Formula Q = atom("Q");
    const Formula q = atom("q");
    std::vector<CatalogEntry> out;
    auto add = [&](Scope scope, PatternKind k) {
        PatternInstance inst{scope, {k}, {}};
        inst.args = pattern_arity(k) == 2 ? std::vector{P, Q} : std::vector{P};
        out.push_back({scope.kind, k, to_string(instantiate(inst))});
    };
    for (PatternKind k : {PatternKind::Universality, PatternKind::Existence, PatternKind::Absence,
                          PatternKind::Response, PatternKind::Precedence}) {
        add(Scope::globally(), k);
    }
    for (PatternKind k : {PatternKind::Universality, PatternKind::Absence, PatternKind::Response}) {
        add(Scope::after(q), k);
    }
    return out;
}

AtomPredicate build_ss(Expr v_x, Expr v_eq, Expr alpha, std::string name) {
    AtomPredicate p;
    p.name = std::move(name);
    p.lhs = abs(std::move(v_x) - std::move(v_eq));
    p.cmp = Cmp::Le;
    p.rhs = std::move(alpha);
    return p;
}

AtomPredicate build_ss(Expr v_x, Expr v_eq, Expr alpha, std::span<const std::string> columns,
                       std::string name) {
    AtomPredicate p = build_ss(std::move(v_x), std::move(v_eq), std::move(alpha), std::move(name));
    p.validate(columns);
    return p;
}

PropertySpec build_stability(AtomPredicate ss) {
    PropertySpec spec;
    spec.name = "stability";
    spec.pattern = PatternInstance{Scope::globally(),
                                   {PatternKind::Existence, PatternKind::Universality},
                                   {atom(ss.name)}};
    spec.formula = instantiate(spec.pattern);
    spec.atoms.push_back(std::move(ss));
    return spec;
}

PropertySpec build_acc_stability() {
    // alpha = 0.05 * d_safe, one-sided: the gap must settle beyond the band.
    AtomPredicate ss;
    ss.name = "ss";
    ss.lhs = Expr::column("d_rel") - Expr::column("d_safe");
    ss.cmp = Cmp::Gt;
    ss.rhs = Expr::literal(0.05) * Expr::column("d_safe");
    return build_stability(std::move(ss));
}

std::optional<PropertySpec> property_by_name(std::string_view name) {
    if (name == "stability") return build_acc_stability();
    return std::nullopt;
}

}  // namespace ctverify::patterns
