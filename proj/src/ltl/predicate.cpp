#include "ctverify/ltl/predicate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "ctverify/error.hpp"
#include "ctverify/ltl/formula.hpp"
#include "lexer.hpp"

namespace ctverify::ltl {

std::optional<std::size_t> Table::column_index(std::string_view name) const {
    auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) return std::nullopt;
    return static_cast<std::size_t>(it - columns.begin());
}

Expr::Expr() : Expr(literal(0.0)) {}

Expr Expr::literal(double value) {
    return Expr(std::make_shared<const Node>(Node{ExprOp::Literal, value, {}, {}}));
}

Expr Expr::column(std::string name) {
    return Expr(std::make_shared<const Node>(Node{ExprOp::Column, 0.0, std::move(name), {}}));
}

Expr Expr::unary(ExprOp op, Expr operand) {
    if (op != ExprOp::Neg && op != ExprOp::Abs) throw std::invalid_argument("not a unary operator");
    return Expr(std::make_shared<const Node>(Node{op, 0.0, {}, {std::move(operand)}}));
}

Expr Expr::binary(ExprOp op, Expr lhs, Expr rhs) {
    if (op != ExprOp::Add && op != ExprOp::Sub && op != ExprOp::Mul && op != ExprOp::Div) {
        throw std::invalid_argument("not a binary operator");
    }
    return Expr(
        std::make_shared<const Node>(Node{op, 0.0, {}, {std::move(lhs), std::move(rhs)}}));
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    return a.op() == b.op() && a.value() == b.value() && a.name() == b.name() &&
           a.node_->children == b.node_->children;
}

Expr operator+(Expr a, Expr b) { return Expr::binary(ExprOp::Add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::binary(ExprOp::Sub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::binary(ExprOp::Mul, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::binary(ExprOp::Div, std::move(a), std::move(b)); }
Expr operator-(Expr a) { return Expr::unary(ExprOp::Neg, std::move(a)); }
Expr abs(Expr a) { return Expr::unary(ExprOp::Abs, std::move(a)); }

namespace {

int precedence(ExprOp op) {
    switch (op) {
        case ExprOp::Add:
        case ExprOp::Sub: return 1;
        case ExprOp::Mul:
        case ExprOp::Div: return 2;
        case ExprOp::Neg: return 3;
        default: return 4;
    }
}

void print(const Expr& e, std::string& out) {
    auto operand = [&out](const Expr& c, bool parens) {
        if (parens) out += '(';
        print(c, out);
        if (parens) out += ')';
    };
    switch (e.op()) {
        case ExprOp::Literal: out += fmt::format("{}", e.value()); return;
        case ExprOp::Column: out += e.name(); return;
        case ExprOp::Neg:
            out += '-';
            operand(e.child(0), precedence(e.child(0).op()) < 3 ||
                                    e.child(0).op() == ExprOp::Neg ||
                                    (e.child(0).op() == ExprOp::Literal && e.child(0).value() < 0));
            return;
        case ExprOp::Abs:
            out += "abs(";
            print(e.child(0), out);
            out += ')';
            return;
        default: {
            const int p = precedence(e.op());
            const char* sym = e.op() == ExprOp::Add   ? " + "
                              : e.op() == ExprOp::Sub ? " - "
                              : e.op() == ExprOp::Mul ? " * "
                                                      : " / ";
            operand(e.child(0), precedence(e.child(0).op()) < p);
            out += sym;
            operand(e.child(1), precedence(e.child(1).op()) <= p);
            return;
        }
    }
}

void collect_columns(const Expr& e, std::vector<std::string>& out) {
    if (e.op() == ExprOp::Column &&
        std::find(out.begin(), out.end(), e.name()) == out.end()) {
        out.push_back(e.name());
    }
    for (std::size_t i = 0; i < e.arity(); ++i) collect_columns(e.child(i), out);
}

using detail::Cursor;
using detail::TokenKind;

class ExprParser {
public:
    explicit ExprParser(Cursor& cur) : cur_(cur) {}

    Expr expr() {
        Expr lhs = term();
        for (;;) {
            if (cur_.accept_symbol("+")) {
                lhs = std::move(lhs) + term();
            } else if (cur_.accept_symbol("-")) {
                lhs = std::move(lhs) - term();
            } else {
                return lhs;
            }
        }
    }

private:
    Expr term() {
        Expr lhs = factor();
        for (;;) {
            if (cur_.accept_symbol("*")) {
                lhs = std::move(lhs) * factor();
            } else if (cur_.at_symbol("/")) {
                cur_.advance();
                const detail::Token divisor_tok = cur_.peek();
                Expr rhs = factor();
                if (rhs.op() == ExprOp::Literal && rhs.value() == 0.0) {
                    throw ParseError(divisor_tok.line, divisor_tok.column, {"non-zero divisor"},
                                     "division by literal zero");
                }
                lhs = std::move(lhs) / std::move(rhs);
            } else {
                return lhs;
            }
        }
    }

    Expr factor() {
        if (cur_.accept_symbol("-")) return -factor();
        if (cur_.accept_symbol("(")) {
            Expr inner = expr();
            cur_.expect_symbol(")");
            return inner;
        }
        const detail::Token tok = cur_.peek();
        if (tok.kind == TokenKind::Number) {
            cur_.advance();
            return Expr::literal(tok.number);
        }
        if (tok.kind == TokenKind::Identifier) {
            cur_.advance();
            if (tok.text == "abs" && cur_.at_symbol("(")) {
                cur_.advance();
                Expr inner = expr();
                cur_.expect_symbol(")");
                return abs(std::move(inner));
            }
            return Expr::column(tok.text);
        }
        cur_.fail({"number", "identifier", "abs", "(", "-"});
    }

    Cursor& cur_;
};

}  // namespace

std::string to_string(const Expr& e) {
    std::string out;
    print(e, out);
    return out;
}

std::vector<std::string> columns_of(const Expr& e) {
    std::vector<std::string> out;
    collect_columns(e, out);
    return out;
}

double evaluate(const Expr& e, std::span<const std::string> columns, std::span<const double> row) {
    switch (e.op()) {
        case ExprOp::Literal: return e.value();
        case ExprOp::Column: {
            auto it = std::find(columns.begin(), columns.end(), e.name());
            if (it == columns.end()) {
                throw SchemaError(fmt::format("unknown column '{}'", e.name()));
            }
            return row[static_cast<std::size_t>(it - columns.begin())];
        }
        case ExprOp::Neg: return -evaluate(e.child(0), columns, row);
        case ExprOp::Abs: return std::abs(evaluate(e.child(0), columns, row));
        case ExprOp::Add:
            return evaluate(e.child(0), columns, row) + evaluate(e.child(1), columns, row);
        case ExprOp::Sub:
            return evaluate(e.child(0), columns, row) - evaluate(e.child(1), columns, row);
        case ExprOp::Mul:
            return evaluate(e.child(0), columns, row) * evaluate(e.child(1), columns, row);
        case ExprOp::Div:
            return evaluate(e.child(0), columns, row) / evaluate(e.child(1), columns, row);
    }
    throw std::logic_error("unhandled expression operator");
}

std::string_view to_string(Cmp c) {
    switch (c) {
        case Cmp::Lt: return "<";
        case Cmp::Le: return "<=";
        case Cmp::Gt: return ">";
        case Cmp::Ge: return ">=";
        case Cmp::Eq: return "==";
    }
    return "?";
}

void AtomPredicate::validate(std::span<const std::string> columns) const {
    for (const Expr* side : {&lhs, &rhs}) {
        for (const auto& c : columns_of(*side)) {
            if (std::find(columns.begin(), columns.end(), c) == columns.end()) {
                throw SchemaError(
                    fmt::format("predicate '{}' references unknown column '{}'", name, c));
            }
        }
    }
}

bool AtomPredicate::evaluate(std::span<const std::string> columns,
                             std::span<const double> row) const {
    const double l = ltl::evaluate(lhs, columns, row);
    const double r = ltl::evaluate(rhs, columns, row);
    switch (cmp) {
        case Cmp::Lt: return l < r;
        case Cmp::Le: return l <= r;
        case Cmp::Gt: return l > r;
        case Cmp::Ge: return l >= r;
        case Cmp::Eq: return l == r;
    }
    return false;
}

std::string to_string(const AtomPredicate& p) {
    return fmt::format("{} = {} {} {}", p.name, to_string(p.lhs), to_string(p.cmp),
                       to_string(p.rhs));
}

Expr parse_expr(std::string_view text) {
    Cursor cur(text);
    Expr e = ExprParser(cur).expr();
    if (!cur.at_end()) cur.fail({"+", "-", "*", "/", "end of input"});
    return e;
}

AtomPredicate parse_atom_binding(std::string_view text) {
    Cursor cur(text);
    const detail::Token name_tok = cur.peek();
    if (name_tok.kind != TokenKind::Identifier || is_reserved_word(name_tok.text)) {
        cur.fail({"atom name"});
    }
    cur.advance();
    cur.expect_symbol("=");

    AtomPredicate p;
    p.name = name_tok.text;
    ExprParser parser(cur);
    p.lhs = parser.expr();
    static constexpr std::pair<std::string_view, Cmp> kOps[] = {
        {"<=", Cmp::Le}, {">=", Cmp::Ge}, {"==", Cmp::Eq}, {"<", Cmp::Lt}, {">", Cmp::Gt}};
    bool found = false;
    for (auto [sym, cmp] : kOps) {
        if (cur.accept_symbol(sym)) {
            p.cmp = cmp;
            found = true;
            break;
        }
    }
    if (!found) cur.fail({"<", "<=", ">", ">=", "==", "+", "-", "*", "/"});
    p.rhs = parser.expr();
    if (!cur.at_end()) cur.fail({"+", "-", "*", "/", "end of input"});
    return p;
}

}  // namespace ctverify::ltl
