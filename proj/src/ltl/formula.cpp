#include "ctverify/ltl/formula.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace ctverify::ltl {

Formula::Formula() : Formula(tt()) {}

bool is_identifier(std::string_view text) {
    if (text.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(text.front())) return false;
    return std::all_of(text.begin(), text.end(), [&](char c) { return alpha(c) || digit(c); });
}

bool is_reserved_word(std::string_view text) {
    return text == "X" || text == "F" || text == "G" || text == "U" || text == "R" ||
           text == "true" || text == "false";
}

std::size_t op_arity(Op op) {
    switch (op) {
        case Op::True:
        case Op::False:
        case Op::Atom: return 0;
        case Op::Not:
        case Op::Next:
        case Op::Eventually:
        case Op::Globally: return 1;
        case Op::And:
        case Op::Or:
        case Op::Implies:
        case Op::Until:
        case Op::Release: return 2;
    }
    return 0;
}

std::string_view op_symbol(Op op) {
    switch (op) {
        case Op::True: return "true";
        case Op::False: return "false";
        case Op::Atom: return "";
        case Op::Not: return "!";
        case Op::And: return "&";
        case Op::Or: return "|";
        case Op::Implies: return "->";
        case Op::Next: return "X";
        case Op::Until: return "U";
        case Op::Release: return "R";
        case Op::Eventually: return "F";
        case Op::Globally: return "G";
    }
    return "?";
}

Formula make(Op op, std::vector<Formula> children) {
    if (op == Op::Atom) throw std::invalid_argument("use atom() to build atoms");
    if (children.size() != op_arity(op)) {
        throw std::invalid_argument(fmt::format("operator '{}' takes {} operands, got {}",
                                                op_symbol(op), op_arity(op), children.size()));
    }
    return Formula(std::make_shared<const Formula::Node>(
        Formula::Node{op, std::string{}, std::move(children)}));
}

Formula atom(std::string name) {
    if (!is_identifier(name) || is_reserved_word(name)) {
        throw std::invalid_argument(fmt::format("'{}' is not a valid atom name", name));
    }
    return Formula(
        std::make_shared<const Formula::Node>(Formula::Node{Op::Atom, std::move(name), {}}));
}

Formula tt() {
    static const Formula t = make(Op::True, {});
    return t;
}
Formula ff() {
    static const Formula f = make(Op::False, {});
    return f;
}
Formula neg(Formula f) { return make(Op::Not, {std::move(f)}); }
Formula conj(Formula a, Formula b) { return make(Op::And, {std::move(a), std::move(b)}); }
Formula disj(Formula a, Formula b) { return make(Op::Or, {std::move(a), std::move(b)}); }
Formula implies(Formula a, Formula b) { return make(Op::Implies, {std::move(a), std::move(b)}); }
Formula next(Formula f) { return make(Op::Next, {std::move(f)}); }
Formula until(Formula a, Formula b) { return make(Op::Until, {std::move(a), std::move(b)}); }
Formula release(Formula a, Formula b) { return make(Op::Release, {std::move(a), std::move(b)}); }
Formula eventually(Formula f) { return make(Op::Eventually, {std::move(f)}); }
Formula globally(Formula f) { return make(Op::Globally, {std::move(f)}); }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    return a.op() == b.op() && a.name() == b.name() &&
           a.node_->children == b.node_->children;
}

namespace {

// Binding strength, loosest first. Must agree with the parser.
int precedence(Op op) {
    switch (op) {
        case Op::Implies: return 1;
        case Op::Or: return 2;
        case Op::And: return 3;
        case Op::Until:
        case Op::Release: return 4;
        case Op::Not:
        case Op::Next:
        case Op::Eventually:
        case Op::Globally: return 5;
        default: return 6;
    }
}

bool right_assoc(Op op) { return op == Op::Implies || op == Op::Until || op == Op::Release; }

void print(const Formula& f, std::string& out);

void print_operand(const Formula& f, bool parens, std::string& out) {
    if (parens) out += '(';
    print(f, out);
    if (parens) out += ')';
}

void print(const Formula& f, std::string& out) {
    const Op op = f.op();
    const int prec = precedence(op);
    switch (op_arity(op)) {
        case 0:
            out += op == Op::Atom ? std::string_view{f.name()} : op_symbol(op);
            return;
        case 1:
            out += op_symbol(op);
            if (op != Op::Not) out += ' ';
            print_operand(f.child(0), precedence(f.child(0).op()) < prec, out);
            return;
        default: {
            const int lp = precedence(f.lhs().op());
            const int rp = precedence(f.rhs().op());
            print_operand(f.lhs(), lp < prec || (lp == prec && right_assoc(op)), out);
            out += ' ';
            out += op_symbol(op);
            out += ' ';
            print_operand(f.rhs(), rp < prec || (rp == prec && !right_assoc(op)), out);
            return;
        }
    }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
    if (f.is_atom()) out.insert(f.name());
    for (std::size_t i = 0; i < f.arity(); ++i) collect_atoms(f.child(i), out);
}

Formula nnf_impl(const Formula& f, bool negated) {
    switch (f.op()) {
        case Op::True: return negated ? ff() : tt();
        case Op::False: return negated ? tt() : ff();
        case Op::Atom: return negated ? neg(f) : f;
        case Op::Not: return nnf_impl(f.child(0), !negated);
        case Op::And:
            return negated ? disj(nnf_impl(f.lhs(), true), nnf_impl(f.rhs(), true))
                           : conj(nnf_impl(f.lhs(), false), nnf_impl(f.rhs(), false));
        case Op::Or:
            return negated ? conj(nnf_impl(f.lhs(), true), nnf_impl(f.rhs(), true))
                           : disj(nnf_impl(f.lhs(), false), nnf_impl(f.rhs(), false));
        case Op::Implies:
            // a -> b == !a | b
            return negated ? conj(nnf_impl(f.lhs(), false), nnf_impl(f.rhs(), true))
                           : disj(nnf_impl(f.lhs(), true), nnf_impl(f.rhs(), false));
        case Op::Next: return next(nnf_impl(f.child(0), negated));
        case Op::Until:
            return negated ? release(nnf_impl(f.lhs(), true), nnf_impl(f.rhs(), true))
                           : until(nnf_impl(f.lhs(), false), nnf_impl(f.rhs(), false));
        case Op::Release:
            return negated ? until(nnf_impl(f.lhs(), true), nnf_impl(f.rhs(), true))
                           : release(nnf_impl(f.lhs(), false), nnf_impl(f.rhs(), false));
        case Op::Eventually:
            // F a == true U a;  !F a == false R !a
            return negated ? release(ff(), nnf_impl(f.child(0), true))
                           : until(tt(), nnf_impl(f.child(0), false));
        case Op::Globally:
            // G a == false R a;  !G a == true U !a
            return negated ? until(tt(), nnf_impl(f.child(0), true))
                           : release(ff(), nnf_impl(f.child(0), false));
    }
    throw std::logic_error("unhandled operator in nnf");
}

}  // namespace

std::string to_string(const Formula& f) {
    std::string out;
    print(f, out);
    return out;
}

std::set<std::string> atoms_of(const Formula& f) {
    std::set<std::string> out;
    collect_atoms(f, out);
    return out;
}

std::size_t depth(const Formula& f) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < f.arity(); ++i) d = std::max(d, depth(f.child(i)));
    return d + 1;
}

std::size_t size(const Formula& f) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < f.arity(); ++i) n += size(f.child(i));
    return n;
}

Formula nnf(const Formula& f) { return nnf_impl(f, false); }

}  // namespace ctverify::ltl
