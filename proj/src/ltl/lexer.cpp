#include "lexer.hpp"

#include <array>
#include <cctype>
#include <charconv>

#include <fmt/format.h>

namespace ctverify::ltl::detail {

namespace {

constexpr std::array<std::string_view, 4> kTwoCharSymbols{"->", "<=", ">=", "=="};
constexpr std::string_view kOneCharSymbols = "!&|()<>=+-*/";

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;

    auto advance_by = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };

    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance_by(1);
            continue;
        }
        Token tok;
        tok.line = line;
        tok.column = col;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            tok.kind = TokenKind::Identifier;
            tok.text = std::string(text.substr(i, j - i));
            advance_by(j - i);
        } else if (digit(c) || (c == '.' && i + 1 < text.size() && digit(text[i + 1]))) {
            std::size_t j = i;
            while (j < text.size() && (digit(text[j]) || text[j] == '.')) ++j;
            if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
                if (k < text.size() && digit(text[k])) {
                    while (k < text.size() && digit(text[k])) ++k;
                    j = k;
                }
            }
            tok.kind = TokenKind::Number;
            tok.text = std::string(text.substr(i, j - i));
            auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(),
                                             tok.number);
            if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size()) {
                throw ParseError(line, col, {"number"}, fmt::format("'{}'", tok.text));
            }
            advance_by(j - i);
        } else {
            tok.kind = TokenKind::Symbol;
            std::string_view rest = text.substr(i);
            for (auto sym : kTwoCharSymbols) {
                if (rest.starts_with(sym)) {
                    tok.text = std::string(sym);
                    break;
                }
            }
            if (tok.text.empty()) {
                if (kOneCharSymbols.find(c) == std::string_view::npos) {
                    throw ParseError(line, col, {}, fmt::format("unexpected character '{}'", c));
                }
                tok.text = std::string(1, c);
            }
            advance_by(tok.text.size());
        }
        out.push_back(std::move(tok));
    }
    Token end;
    end.kind = TokenKind::End;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

std::string describe(const Token& tok) {
    switch (tok.kind) {
        case TokenKind::End: return "end of input";
        case TokenKind::Number: return fmt::format("number '{}'", tok.text);
        case TokenKind::Identifier: return fmt::format("identifier '{}'", tok.text);
        case TokenKind::Symbol: return fmt::format("'{}'", tok.text);
    }
    return "?";
}

}  // namespace ctverify::ltl::detail
