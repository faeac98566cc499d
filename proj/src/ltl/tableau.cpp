#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "ctverify/ltl/buchi.hpp"

namespace ctverify::ltl {

namespace {

using FormulaSet = std::set<std::size_t>;

/// Subformulas of the NNF input, interned by their printed form (printing is
/// injective on trees, see to_string).
class Closure {
public:
    std::size_t intern(const Formula& f) {
        auto key = to_string(f);
        auto [it, inserted] = ids_.emplace(std::move(key), formulas_.size());
        if (inserted) {
            formulas_.push_back(f);
            if (f.op() == Op::Until) untils_.push_back(it->second);
            for (std::size_t i = 0; i < f.arity(); ++i) intern(f.child(i));
        }
        return it->second;
    }

    std::optional<std::size_t> find(const Formula& f) const {
        auto it = ids_.find(to_string(f));
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }

    const Formula& at(std::size_t id) const { return formulas_[id]; }
    const std::vector<std::size_t>& untils() const { return untils_; }

private:
    std::map<std::string, std::size_t> ids_;
    std::vector<Formula> formulas_;
    std::vector<std::size_t> untils_;
};

constexpr std::size_t kInit = static_cast<std::size_t>(-1);

struct Node {
    std::set<std::size_t> incoming;  // node ids; kInit marks an initial node
    FormulaSet pending;
    FormulaSet old;
    FormulaSet next;
};

class Tableau {
public:
    explicit Tableau(Closure& closure) : closure_(closure) {}

    void expand(Node node) {
        for (;;) {
            if (node.pending.empty()) {
                for (std::size_t i = 0; i < nodes_.size(); ++i) {
                    if (nodes_[i].old == node.old && nodes_[i].next == node.next) {
                        nodes_[i].incoming.insert(node.incoming.begin(), node.incoming.end());
                        return;
                    }
                }
                const std::size_t id = nodes_.size();
                nodes_.push_back(node);
                Node succ;
                succ.incoming = {id};
                succ.pending = node.next;
                node = std::move(succ);
                continue;
            }

            const std::size_t eta = *node.pending.begin();
            node.pending.erase(node.pending.begin());
            if (node.old.contains(eta)) continue;

            const Formula& f = closure_.at(eta);
            switch (f.op()) {
                case Op::False: return;
                case Op::True:
                    node.old.insert(eta);
                    continue;
                case Op::Atom:
                case Op::Not: {
                    const Formula complement = f.op() == Op::Atom ? neg(f) : f.child(0);
                    if (auto c = closure_.find(complement); c && node.old.contains(*c)) return;
                    node.old.insert(eta);
                    continue;
                }
                case Op::And:
                    add_pending(node, closure_.find(f.lhs()).value());
                    add_pending(node, closure_.find(f.rhs()).value());
                    node.old.insert(eta);
                    continue;
                case Op::Next:
                    node.next.insert(closure_.find(f.child(0)).value());
                    node.old.insert(eta);
                    continue;
                case Op::Or:
                case Op::Until:
                case Op::Release: {
                    const std::size_t lhs = closure_.find(f.lhs()).value();
                    const std::size_t rhs = closure_.find(f.rhs()).value();
                    Node first = node;
                    Node second = std::move(node);
                    first.old.insert(eta);
                    second.old.insert(eta);
                    if (f.op() == Op::Or) {
                        add_pending(first, lhs);
                        add_pending(second, rhs);
                    } else if (f.op() == Op::Until) {
                        // a U b  ==  b | (a & X(a U b))
                        add_pending(first, lhs);
                        first.next.insert(eta);
                        add_pending(second, rhs);
                    } else {
                        // a R b  ==  (a & b) | (b & X(a R b))
                        add_pending(first, rhs);
                        first.next.insert(eta);
                        add_pending(second, lhs);
                        add_pending(second, rhs);
                    }
                    expand(std::move(first));
                    node = std::move(second);
                    continue;
                }
                default:
                    throw std::logic_error("tableau expects negation normal form");
            }
        }
    }

    const std::vector<Node>& nodes() const { return nodes_; }

private:
    static void add_pending(Node& node, std::size_t id) {
        if (!node.old.contains(id)) node.pending.insert(id);
    }

    Closure& closure_;
    std::vector<Node> nodes_;
};

Guard label_of(const Node& node, const Closure& closure) {
    Guard g;
    for (std::size_t id : node.old) {
        const Formula& f = closure.at(id);
        if (f.op() == Op::Atom) g.literals.push_back({f.name(), true});
        if (f.op() == Op::Not) g.literals.push_back({f.child(0).name(), false});
    }
    std::sort(g.literals.begin(), g.literals.end());
    return g;
}

}  // namespace

BuchiAutomaton to_buchi(const Formula& f) {
    const Formula normal = nnf(f);
    Closure closure;
    const std::size_t root = closure.intern(normal);

    Tableau tableau(closure);
    Node start;
    start.incoming = {kInit};
    start.pending = {root};
    tableau.expand(std::move(start));
    const auto& nodes = tableau.nodes();

    // Generalized acceptance: one set per Until subformula a U b, holding the
    // nodes where b is established or the obligation is absent.
    const auto& untils = closure.untils();
    const std::size_t k = untils.size();
    std::vector<std::vector<bool>> in_set(k, std::vector<bool>(nodes.size()));
    for (std::size_t s = 0; s < k; ++s) {
        const std::size_t u = untils[s];
        const std::size_t rhs = closure.find(closure.at(u).rhs()).value();
        for (std::size_t n = 0; n < nodes.size(); ++n) {
            in_set[s][n] = !nodes[n].old.contains(u) || nodes[n].old.contains(rhs);
        }
    }

    std::vector<std::vector<std::size_t>> successors(nodes.size());
    std::vector<std::size_t> initial_nodes;
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        for (std::size_t from : nodes[n].incoming) {
            if (from == kInit) {
                initial_nodes.push_back(n);
            } else {
                successors[from].push_back(n);
            }
        }
    }

    // Counter degeneralization over reachable (node, counter) pairs. Leaving a
    // node that belongs to the set the counter waits for advances the counter;
    // (node, 0) with node in the first set is accepting.
    const std::size_t copies = std::max<std::size_t>(k, 1);
    auto accepting_pair = [&](std::size_t n, std::size_t c) {
        return k == 0 || (c == 0 && in_set[0][n]);
    };
    auto advance = [&](std::size_t n, std::size_t c) {
        return (k != 0 && in_set[c][n]) ? (c + 1) % k : c;
    };

    BuchiAutomaton out;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    std::vector<std::pair<std::size_t, std::size_t>> work;
    auto state_for = [&](std::size_t n, std::size_t c) {
        auto [it, inserted] = index.emplace(std::pair{n, c}, out.size());
        if (inserted) {
            std::string name =
                copies == 1 ? fmt::format("S{}", n) : fmt::format("S{}_{}", n, c);
            out.add_state(std::move(name), accepting_pair(n, c));
            work.emplace_back(n, c);
        }
        return it->second;
    };

    for (std::size_t n : initial_nodes) out.initial.push_back(state_for(n, 0));
    while (!work.empty()) {
        auto [n, c] = work.back();
        work.pop_back();
        const std::size_t from = index.at({n, c});
        const Guard guard = label_of(nodes[n], closure);
        const std::size_t c_next = advance(n, c);
        for (std::size_t m : successors[n]) {
            const std::size_t to = state_for(m, c_next);
            out.transitions[from].push_back({to, guard});
        }
    }
    return out;
}

}  // namespace ctverify::ltl
