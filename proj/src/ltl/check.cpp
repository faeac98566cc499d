#include "ctverify/ltl/check.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "ctverify/error.hpp"
#include "ctverify/ltl/buchi.hpp"
#include "ctverify/ltl/lasso.hpp"

namespace ctverify::ltl {

std::string_view to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Holds: return "holds";
        case VerdictStatus::Violated: return "violated";
        case VerdictStatus::InternalError: return "internal-error";
    }
    return "?";
}

namespace {

LassoWord stutter_word(const Formula& f, const Table& trace,
                       std::span<const AtomPredicate> atoms) {
    std::vector<const AtomPredicate*> bound;
    for (const auto& name : atoms_of(f)) {
        auto it = std::find_if(atoms.begin(), atoms.end(),
                               [&](const AtomPredicate& p) { return p.name == name; });
        if (it == atoms.end()) throw SchemaError(fmt::format("atom '{}' has no binding", name));
        it->validate(trace.columns);
        bound.push_back(&*it);
    }

    LassoWord w;
    w.prefix.reserve(trace.rows.size() - 1);
    for (std::size_t i = 0; i < trace.rows.size(); ++i) {
        if (trace.rows[i].size() != trace.columns.size()) {
            throw SchemaError(fmt::format("trace row {} has {} values for {} columns", i,
                                          trace.rows[i].size(), trace.columns.size()));
        }
        Letter letter;
        for (const AtomPredicate* p : bound) {
            letter[p->name] = p->evaluate(trace.columns, trace.rows[i]);
        }
        if (i + 1 < trace.rows.size()) {
            w.prefix.push_back(std::move(letter));
        } else {
            w.cycle.push_back(std::move(letter));
        }
    }
    return w;
}

}  // namespace

Verdict check_trace(const Formula& f, const Table& trace, std::span<const AtomPredicate> atoms) {
    if (trace.rows.empty()) throw SchemaError("cannot check an empty trace");
    const LassoWord w = stutter_word(f, trace, atoms);

    const bool automaton_holds = !accepts(to_buchi(neg(f)), w);
    const bool oracle_holds = eval_lasso(f, w);

    Verdict v;
    if (automaton_holds != oracle_holds) {
        v.status = VerdictStatus::InternalError;
        v.message = fmt::format("automaton says {}, direct evaluation says {}",
                                automaton_holds ? "holds" : "violated",
                                oracle_holds ? "holds" : "violated");
        return v;
    }
    v.status = automaton_holds ? VerdictStatus::Holds : VerdictStatus::Violated;

    // Positions of the stutter lasso coincide with trace indices.
    const std::size_t n = trace.rows.size();
    if (f.op() == Op::Eventually && f.child(0).op() == Op::Globally) {
        const auto inner = eval_positions(f.child(0).child(0), w);
        std::size_t start = n;
        while (start > 0 && inner[start - 1]) --start;
        if (start < n) {
            v.witness_index = start;
        } else {
            // The final sample fails and is repeated forever.
            v.counterexample_index = n - 1;
        }
    } else if (!v.holds()) {
        if (f.op() == Op::Globally) {
            const auto inner = eval_positions(f.child(0), w);
            auto it = std::find(inner.begin(), inner.end(), false);
            v.counterexample_index = static_cast<std::size_t>(it - inner.begin());
        } else {
            v.counterexample_index = 0;
        }
    }
    return v;
}

}  // namespace ctverify::ltl
