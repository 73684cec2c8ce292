#pragma once

#include "phicert/intpoly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace phicert::cli {

/// Malformed polynomial expression. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, std::string expected);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string expected_;
};

/// Parses
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := integer | 'x' | '(' expr ')'
/// Whitespace is insignificant and integers are arbitrary precision.
IntPoly parse_poly(std::string_view src);

/// Upper bound on an exponent literal; keeps a typo from allocating gigabytes.
inline constexpr unsigned long kMaxExponent = 100000;

}  // namespace phicert::cli
