#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ctverify/error.hpp"
#include "ctverify/ltl/formula.hpp"

namespace ctverify::ltl {

/// Syntax error with a 1-based source position and the tokens that would
/// have been accepted there.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
               std::string found);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::vector<std::string> expected_;
    std::string found_;
};

/// Grammar, loosest to tightest binding:
///
///   formula := or ( "->" formula )?                 right associative
///   or      := and ( "|" and )*
///   and     := until ( "&" until )*
///   until   := unary ( ("U" | "R") until )?         right associative
///   unary   := ("!" | "X" | "F" | "G") unary | primary
///   primary := "true" | "false" | identifier | "(" formula ")"
///
/// The single letters X F G U R are reserved as operators.
Formula parse_formula(std::string_view text);

}  // namespace ctverify::ltl
