#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ctverify::ltl {

enum class Op {
    True,
    False,
    Atom,
    Not,
    And,
    Or,
    Implies,
    Next,
    Until,
    Release,
    Eventually,
    Globally,
};

/// Immutable LTL syntax tree. Copies share structure; equality is structural.
class Formula {
public:
    Formula();  // true

    Op op() const { return node_->op; }
    /// Atom name; empty for every other node kind.
    const std::string& name() const { return node_->name; }
    std::size_t arity() const { return node_->children.size(); }
    const Formula& child(std::size_t i) const { return node_->children.at(i); }
    const Formula& lhs() const { return child(0); }
    const Formula& rhs() const { return child(1); }

    bool is_atom() const { return op() == Op::Atom; }
    bool is_constant() const { return op() == Op::True || op() == Op::False; }

    friend bool operator==(const Formula& a, const Formula& b);

    friend Formula make(Op op, std::vector<Formula> children);
    friend Formula atom(std::string name);

private:
    struct Node {
        Op op;
        std::string name;
        std::vector<Formula> children;
    };
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Generic constructor; throws std::invalid_argument on an arity mismatch.
Formula make(Op op, std::vector<Formula> children);
Formula atom(std::string name);
Formula tt();
Formula ff();
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula next(Formula f);
Formula until(Formula a, Formula b);
Formula release(Formula a, Formula b);
Formula eventually(Formula f);
Formula globally(Formula f);

/// [A-Za-z_][A-Za-z0-9_]*
bool is_identifier(std::string_view text);
/// Operator letters and boolean constants, which cannot name atoms.
bool is_reserved_word(std::string_view text);

std::size_t op_arity(Op op);
std::string_view op_symbol(Op op);

/// Renders the formula in the textual grammar with the fewest parentheses
/// needed for parse_formula to rebuild the same tree.
std::string to_string(const Formula& f);

std::set<std::string> atoms_of(const Formula& f);
std::size_t depth(const Formula& f);
std::size_t size(const Formula& f);

/// Negation normal form over {true, false, atoms, !atom, &, |, X, U, R}:
/// implications are expanded, F/G become U/R, negations sit on atoms only.
Formula nnf(const Formula& f);

}  // namespace ctverify::ltl
