#include "ctverify/ltl/parser.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "lexer.hpp"

namespace ctverify::ltl {

namespace {

std::string render_message(std::size_t line, std::size_t column,
                           const std::vector<std::string>& expected, const std::string& found) {
    if (expected.empty()) return fmt::format("{}:{}: {}", line, column, found);
    return fmt::format("{}:{}: expected one of {{{}}}, found {}", line, column,
                       fmt::join(expected, ", "), found);
}

using detail::Cursor;
using detail::TokenKind;

class FormulaParser {
public:
    explicit FormulaParser(std::string_view text) : cur_(text) {}

    Formula parse() {
        Formula f = implied();
        if (!cur_.at_end()) cur_.fail({"U", "R", "&", "|", "->", "end of input"});
        return f;
    }

private:
    Formula implied() {
        Formula lhs = disjunction();
        if (cur_.accept_symbol("->")) return implies(std::move(lhs), implied());
        return lhs;
    }

    Formula disjunction() {
        Formula lhs = conjunction();
        while (cur_.accept_symbol("|")) lhs = disj(std::move(lhs), conjunction());
        return lhs;
    }

    Formula conjunction() {
        Formula lhs = binary_temporal();
        while (cur_.accept_symbol("&")) lhs = conj(std::move(lhs), binary_temporal());
        return lhs;
    }

    Formula binary_temporal() {
        Formula lhs = unary();
        if (cur_.at_word("U")) {
            cur_.advance();
            return until(std::move(lhs), binary_temporal());
        }
        if (cur_.at_word("R")) {
            cur_.advance();
            return release(std::move(lhs), binary_temporal());
        }
        return lhs;
    }

    Formula unary() {
        if (cur_.accept_symbol("!")) return neg(unary());
        if (cur_.peek().kind == TokenKind::Identifier) {
            const std::string& w = cur_.peek().text;
            if (w == "X" || w == "F" || w == "G") {
                const char op = w[0];
                cur_.advance();
                Formula operand = unary();
                switch (op) {
                    case 'X': return next(std::move(operand));
                    case 'F': return eventually(std::move(operand));
                    default: return globally(std::move(operand));
                }
            }
        }
        return primary();
    }

    Formula primary() {
        if (cur_.accept_symbol("(")) {
            Formula inner = implied();
            if (!cur_.accept_symbol(")")) cur_.fail({"U", "R", "&", "|", "->", ")"});
            return inner;
        }
        const auto& tok = cur_.peek();
        if (tok.kind == TokenKind::Identifier && !is_reserved_word(tok.text)) {
            Formula a = atom(tok.text);
            cur_.advance();
            return a;
        }
        if (cur_.at_word("true")) {
            cur_.advance();
            return tt();
        }
        if (cur_.at_word("false")) {
            cur_.advance();
            return ff();
        }
        cur_.fail({"identifier", "true", "false", "(", "!", "X", "F", "G"});
    }

    Cursor cur_;
};

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       std::string found)
    : Error(render_message(line, column, expected, found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

}  // namespace ctverify::ltl
