#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ctverify/ltl/formula.hpp"
#include "ctverify/ltl/lasso.hpp"

namespace ctverify::ltl {

struct Literal {
    std::string atom;
    bool positive = true;

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Conjunction of literals; the empty conjunction is `true`.
struct Guard {
    std::vector<Literal> literals;

    bool holds(const Letter& letter) const;
    friend bool operator==(const Guard&, const Guard&) = default;
};

std::string to_string(const Guard& g);

/// State-accepting Buchi automaton with guard-labeled transitions.
struct BuchiAutomaton {
    struct Transition {
        std::size_t target = 0;
        Guard guard;
    };

    std::vector<std::string> state_names;
    std::vector<std::vector<Transition>> transitions;  // indexed by source state
    std::vector<std::size_t> initial;
    std::vector<bool> accepting;

    std::size_t size() const { return state_names.size(); }
    std::size_t transition_count() const;
    std::size_t add_state(std::string name, bool is_accepting);
};

/// Tableau translation (node expansion over the negation normal form) to a
/// generalized Buchi automaton with one acceptance set per Until subformula,
/// followed by counter degeneralization.
BuchiAutomaton to_buchi(const Formula& f);

/// Whether some run of `a` over `w` visits an accepting state infinitely often.
/// Decided by nested depth-first search on the product with the lasso graph.
bool accepts(const BuchiAutomaton& a, const LassoWord& w);

/// Promela never-claim rendering. Accepting states carry the `accept_`
/// prefix and the initial state the `_init` suffix.
std::string to_never_claim(const BuchiAutomaton& a, const std::string& comment = {});

}  // namespace ctverify::ltl
