#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "ctverify/ltl/formula.hpp"
#include "ctverify/ltl/predicate.hpp"

namespace ctverify::ltl {

enum class VerdictStatus { Holds, Violated, InternalError };

std::string_view to_string(VerdictStatus s);

struct Verdict {
    VerdictStatus status = VerdictStatus::InternalError;
    /// For F G p shaped formulas: first sample of the trailing run where p holds.
    std::optional<std::size_t> witness_index;
    /// Sample index that exhibits the violation.
    std::optional<std::size_t> counterexample_index;

    // Filled in by the scenario harness.
    std::optional<double> convergence_time;
    std::optional<double> hold_duration;
    bool collision = false;
    std::string message;

    bool holds() const { return status == VerdictStatus::Holds; }
};

/// Checks `f` on the stutter extension of `trace` (its last row repeated
/// forever). The automaton route decides violation as acceptance of the
/// negated formula; the result is cross-checked against direct lasso
/// evaluation and any disagreement yields an InternalError verdict.
/// Throws SchemaError on an empty trace, an unbound atom, or an atom that
/// references a column the trace does not have.
Verdict check_trace(const Formula& f, const Table& trace, std::span<const AtomPredicate> atoms);

}  // namespace ctverify::ltl
