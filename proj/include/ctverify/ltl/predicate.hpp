#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctverify::ltl {

/// Column-oriented numeric samples: one row per time step, one value per column.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::optional<std::size_t> column_index(std::string_view name) const;
};

enum class ExprOp { Literal, Column, Neg, Abs, Add, Sub, Mul, Div };

/// Arithmetic expression over column names and numeric literals.
class Expr {
public:
    Expr();  // literal 0

    static Expr literal(double value);
    static Expr column(std::string name);
    static Expr unary(ExprOp op, Expr operand);
    static Expr binary(ExprOp op, Expr lhs, Expr rhs);

    ExprOp op() const { return node_->op; }
    double value() const { return node_->value; }
    const std::string& name() const { return node_->name; }
    std::size_t arity() const { return node_->children.size(); }
    const Expr& child(std::size_t i) const { return node_->children.at(i); }

    friend bool operator==(const Expr& a, const Expr& b);

private:
    struct Node {
        ExprOp op;
        double value = 0.0;
        std::string name;
        std::vector<Expr> children;
    };
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);
Expr abs(Expr a);

std::string to_string(const Expr& e);
std::vector<std::string> columns_of(const Expr& e);

/// Evaluates against a row laid out as `columns`. Throws SchemaError on an
/// unknown column.
double evaluate(const Expr& e, std::span<const std::string> columns, std::span<const double> row);

enum class Cmp { Lt, Le, Gt, Ge, Eq };

std::string_view to_string(Cmp c);

/// A named boolean state predicate `lhs cmp rhs`, bound to an atom of a formula.
struct AtomPredicate {
    std::string name;
    Expr lhs;
    Cmp cmp = Cmp::Le;
    Expr rhs;

    /// Throws SchemaError if an expression references a column not in `columns`.
    void validate(std::span<const std::string> columns) const;
    bool evaluate(std::span<const std::string> columns, std::span<const double> row) const;
};

/// "name = abs(d_rel - d_safe) <= 0.05 * d_safe"
std::string to_string(const AtomPredicate& p);

/// Expression grammar:
///   expr    := term (("+" | "-") term)*
///   term    := factor (("*" | "/") factor)*
///   factor  := "-" factor | number | identifier | "abs" "(" expr ")" | "(" expr ")"
/// Division by a literal zero is a parse error.
Expr parse_expr(std::string_view text);

/// `ident "=" expr cmp expr` with cmp one of < <= > >= ==.
AtomPredicate parse_atom_binding(std::string_view text);

}  // namespace ctverify::ltl
