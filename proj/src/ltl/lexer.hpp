#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ctverify/ltl/parser.hpp"

namespace ctverify::ltl::detail {

enum class TokenKind { Identifier, Number, Symbol, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    double number = 0.0;
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Splits formula and predicate text into tokens. Throws ParseError on a
/// character that starts no token.
std::vector<Token> tokenize(std::string_view text);

std::string describe(const Token& tok);

/// Recursive-descent cursor shared by the formula and predicate parsers.
class Cursor {
public:
    explicit Cursor(std::string_view text) : tokens_(tokenize(text)) {}

    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    bool at_symbol(std::string_view sym) const {
        return peek().kind == TokenKind::Symbol && peek().text == sym;
    }
    bool at_word(std::string_view word) const {
        return peek().kind == TokenKind::Identifier && peek().text == word;
    }
    bool at_end() const { return peek().kind == TokenKind::End; }

    bool accept_symbol(std::string_view sym) {
        if (!at_symbol(sym)) return false;
        advance();
        return true;
    }

    void expect_symbol(std::string_view sym) {
        if (!accept_symbol(sym)) fail({std::string(sym)});
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const { fail_at(peek(), std::move(expected)); }
    [[noreturn]] static void fail_at(const Token& tok, std::vector<std::string> expected) {
        throw ParseError(tok.line, tok.column, std::move(expected), describe(tok));
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace ctverify::ltl::detail
