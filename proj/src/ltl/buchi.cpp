#include "ctverify/ltl/buchi.hpp"

#include <fmt/format.h>

#include "ctverify/error.hpp"

namespace ctverify::ltl {

bool Guard::holds(const Letter& letter) const {
    for (const auto& lit : literals) {
        auto it = letter.find(lit.atom);
        if (it == letter.end()) {
            throw SchemaError(fmt::format("guard atom '{}' is not assigned", lit.atom));
        }
        if (it->second != lit.positive) return false;
    }
    return true;
}

std::string to_string(const Guard& g) {
    if (g.literals.empty()) return "(1)";
    std::string out = "(";
    for (std::size_t i = 0; i < g.literals.size(); ++i) {
        if (i > 0) out += " && ";
        if (!g.literals[i].positive) out += '!';
        out += g.literals[i].atom;
    }
    out += ')';
    return out;
}

std::size_t BuchiAutomaton::transition_count() const {
    std::size_t n = 0;
    for (const auto& out : transitions) n += out.size();
    return n;
}

std::size_t BuchiAutomaton::add_state(std::string name, bool is_accepting) {
    state_names.push_back(std::move(name));
    transitions.emplace_back();
    accepting.push_back(is_accepting);
    return state_names.size() - 1;
}

namespace {

/// Product of an automaton with the lasso graph of a word. Product state
/// (q, pos) means: in state q, about to read the letter at pos.
class LassoProduct {
public:
    LassoProduct(const BuchiAutomaton& a, const LassoWord& w) : a_(a), w_(w), n_(w.length()) {
        succ_.resize(a.size() * n_);
        ready_.resize(a.size() * n_, false);
    }

    std::size_t size() const { return a_.size() * n_; }
    std::size_t id(std::size_t q, std::size_t pos) const { return q * n_ + pos; }
    bool accepting(std::size_t s) const { return a_.accepting[s / n_]; }

    const std::vector<std::size_t>& successors(std::size_t s) {
        if (!ready_[s]) {
            const std::size_t q = s / n_;
            const std::size_t pos = s % n_;
            const Letter& letter = w_.at(pos);
            const std::size_t next_pos = w_.successor(pos);
            for (const auto& t : a_.transitions[q]) {
                if (t.guard.holds(letter)) succ_[s].push_back(id(t.target, next_pos));
            }
            ready_[s] = true;
        }
        return succ_[s];
    }

private:
    const BuchiAutomaton& a_;
    const LassoWord& w_;
    std::size_t n_;
    std::vector<std::vector<std::size_t>> succ_;
    std::vector<bool> ready_;
};

struct Frame {
    std::size_t state;
    std::size_t next_child;
};

class NestedDfs {
public:
    explicit NestedDfs(LassoProduct& g) : g_(g), outer_(g.size()), inner_(g.size()) {}

    bool run_from(std::size_t root) {
        if (outer_[root]) return false;
        std::vector<Frame> stack{{root, 0}};
        outer_[root] = true;
        while (!stack.empty()) {
            Frame& top = stack.back();
            const auto& succ = g_.successors(top.state);
            if (top.next_child < succ.size()) {
                const std::size_t child = succ[top.next_child++];
                if (!outer_[child]) {
                    outer_[child] = true;
                    stack.push_back({child, 0});
                }
                continue;
            }
            // Post-order: look for a cycle through an accepting seed.
            const std::size_t done = top.state;
            stack.pop_back();
            if (g_.accepting(done) && inner_search(done)) return true;
        }
        return false;
    }

private:
    bool inner_search(std::size_t seed) {
        std::vector<Frame> stack{{seed, 0}};
        while (!stack.empty()) {
            Frame& top = stack.back();
            const auto& succ = g_.successors(top.state);
            if (top.next_child < succ.size()) {
                const std::size_t child = succ[top.next_child++];
                if (child == seed) return true;
                if (!inner_[child]) {
                    inner_[child] = true;
                    stack.push_back({child, 0});
                }
                continue;
            }
            stack.pop_back();
        }
        return false;
    }

    LassoProduct& g_;
    std::vector<bool> outer_;
    std::vector<bool> inner_;
};

}  // namespace

bool accepts(const BuchiAutomaton& a, const LassoWord& w) {
    if (w.cycle.empty()) throw SchemaError("lasso cycle must not be empty");
    LassoProduct product(a, w);
    NestedDfs search(product);
    for (std::size_t q : a.initial) {
        if (search.run_from(product.id(q, 0))) return true;
    }
    return false;
}

std::string to_never_claim(const BuchiAutomaton& a, const std::string& comment) {
    std::vector<std::string> labels(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) {
        labels[s] = fmt::format("{}_{}", a.accepting[s] ? "accept" : "T0", a.state_names[s]);
    }

    std::string out = "never {";
    if (!comment.empty()) out += fmt::format(" /* {} */", comment);
    out += '\n';

    auto emit_body = [&out, &labels](const std::vector<BuchiAutomaton::Transition>& ts) {
        if (ts.empty()) {
            out += "\tfalse;\n";
            return;
        }
        out += "\tif\n";
        for (const auto& t : ts) {
            out += fmt::format("\t:: {} -> goto {}\n", to_string(t.guard), labels[t.target]);
        }
        out += "\tfi;\n";
    };

    if (a.initial.size() == 1) {
        const std::size_t init = a.initial.front();
        labels[init] = a.accepting[init] ? "accept_init" : "T0_init";
        out += labels[init] + ":\n";
        emit_body(a.transitions[init]);
    } else {
        // Several initial states: a fresh entry state offering all their
        // first moves. It is visited once, so it is never accepting.
        std::vector<BuchiAutomaton::Transition> entry;
        for (std::size_t q : a.initial) {
            entry.insert(entry.end(), a.transitions[q].begin(), a.transitions[q].end());
        }
        out += "T0_init:\n";
        emit_body(entry);
    }
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (a.initial.size() == 1 && s == a.initial.front()) continue;
        out += labels[s] + ":\n";
        emit_body(a.transitions[s]);
    }
    out += "}\n";
    return out;
}

}  // namespace ctverify::ltl
