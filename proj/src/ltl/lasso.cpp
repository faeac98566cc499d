#include "ctverify/ltl/lasso.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "ctverify/error.hpp"

namespace ctverify::ltl {

namespace {

using Values = std::vector<bool>;

// Solves x[i] = b[i] | (a[i] & x[succ(i)]) when `least`, or
// x[i] = b[i] & (a[i] | x[succ(i)]) otherwise, on the cycle by fixpoint
// iteration from false (least) or true (greatest), then back through the prefix.
Values solve_binary(const LassoWord& w, const Values& a, const Values& b, bool least) {
    const std::size_t n = w.length();
    const std::size_t start = w.prefix.size();
    Values x(n, !least);
    auto update = [&](std::size_t i) {
        const bool succ = x[w.successor(i)];
        return least ? (b[i] || (a[i] && succ)) : (b[i] && (a[i] || succ));
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = n; i-- > start;) {
            const bool v = update(i);
            if (v != x[i]) {
                x[i] = v;
                changed = true;
            }
        }
    }
    for (std::size_t i = start; i-- > 0;) x[i] = update(i);
    return x;
}

Values eval(const Formula& f, const LassoWord& w) {
    const std::size_t n = w.length();
    switch (f.op()) {
        case Op::True: return Values(n, true);
        case Op::False: return Values(n, false);
        case Op::Atom: {
            Values out(n);
            for (std::size_t i = 0; i < n; ++i) {
                const Letter& letter = w.at(i);
                auto it = letter.find(f.name());
                if (it == letter.end()) {
                    throw SchemaError(
                        fmt::format("atom '{}' unassigned at lasso position {}", f.name(), i));
                }
                out[i] = it->second;
            }
            return out;
        }
        case Op::Not: {
            Values v = eval(f.child(0), w);
            v.flip();
            return v;
        }
        case Op::And:
        case Op::Or:
        case Op::Implies: {
            const Values l = eval(f.lhs(), w);
            const Values r = eval(f.rhs(), w);
            Values out(n);
            for (std::size_t i = 0; i < n; ++i) {
                out[i] = f.op() == Op::And ? (l[i] && r[i])
                         : f.op() == Op::Or ? (l[i] || r[i])
                                            : (!l[i] || r[i]);
            }
            return out;
        }
        case Op::Next: {
            const Values v = eval(f.child(0), w);
            Values out(n);
            for (std::size_t i = 0; i < n; ++i) out[i] = v[w.successor(i)];
            return out;
        }
        case Op::Until: return solve_binary(w, eval(f.lhs(), w), eval(f.rhs(), w), true);
        case Op::Release: return solve_binary(w, eval(f.lhs(), w), eval(f.rhs(), w), false);
        case Op::Eventually: return solve_binary(w, Values(n, true), eval(f.child(0), w), true);
        case Op::Globally: return solve_binary(w, Values(n, false), eval(f.child(0), w), false);
    }
    throw std::logic_error("unhandled operator in lasso evaluation");
}

}  // namespace

std::vector<bool> eval_positions(const Formula& f, const LassoWord& w) {
    if (w.cycle.empty()) throw SchemaError("lasso cycle must not be empty");
    return eval(f, w);
}

bool eval_lasso(const Formula& f, const LassoWord& w) { return eval_positions(f, w).front(); }

}  // namespace ctverify::ltl
