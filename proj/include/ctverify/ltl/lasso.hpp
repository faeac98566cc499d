#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ctverify/ltl/formula.hpp"

namespace ctverify::ltl {

/// Truth assignment of atoms at one position.
using Letter = std::map<std::string, bool, std::less<>>;

/// The ultimately periodic word prefix . cycle^omega.
struct LassoWord {
    std::vector<Letter> prefix;
    std::vector<Letter> cycle;

    std::size_t length() const { return prefix.size() + cycle.size(); }
    /// Successor position in the lasso graph; the last position loops back to
    /// the start of the cycle.
    std::size_t successor(std::size_t pos) const {
        return pos + 1 < length() ? pos + 1 : prefix.size();
    }
    const Letter& at(std::size_t pos) const {
        return pos < prefix.size() ? prefix[pos] : cycle[pos - prefix.size()];
    }
};

/// Truth of `f` at each of the length() distinct positions of `w`.
/// Throws SchemaError if `w` is malformed (empty cycle) or an atom is unbound.
std::vector<bool> eval_positions(const Formula& f, const LassoWord& w);

/// Truth of `f` at position 0, by direct fixpoint evaluation on the lasso.
bool eval_lasso(const Formula& f, const LassoWord& w);

}  // namespace ctverify::ltl
