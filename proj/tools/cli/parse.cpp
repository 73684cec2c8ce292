#include "cli/parse.hpp"

#include <cctype>

namespace phicert::cli {

ParseError::ParseError(std::size_t line, std::size_t column, std::string expected)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": expected " +
                         expected),
      line_(line), column_(column), expected_(std::move(expected))
{
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    IntPoly parse()
    {
        IntPoly r = expr();
        skip_ws();
        if (pos_ < src_.size())
            fail("operator or end of input");
        return r;
    }

private:
    IntPoly expr()
    {
        skip_ws();
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = peek() == '-';
            ++pos_;
        }
        IntPoly acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-')
                return acc;
            ++pos_;
            IntPoly t = term();
            if (c == '+')
                acc += t;
            else
                acc -= t;
        }
    }

    IntPoly term()
    {
        IntPoly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*')
                return acc;
            ++pos_;
            acc *= factor();
        }
    }

    IntPoly factor()
    {
        IntPoly b = base();
        skip_ws();
        if (peek() != '^')
            return b;
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("unsigned integer exponent");
        const std::size_t start = pos_;
        const std::string digits = read_digits();
        if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) {
            pos_ = start;
            fail("exponent <= " + std::to_string(kMaxExponent));
        }
        return pow(b, std::stoul(digits));
    }

    IntPoly base()
    {
        skip_ws();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return IntPoly::constant(Integer(read_digits()));
        if (c == 'x') {
            ++pos_;
            return IntPoly::x();
        }
        if (c == '(') {
            ++pos_;
            IntPoly inner = expr();
            skip_ws();
            if (peek() != ')')
                fail("')'");
            ++pos_;
            return inner;
        }
        fail("integer, 'x' or '('");
    }

    std::string read_digits()
    {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& expected) const
    {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(line, col, expected);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view src) { return Parser(src).parse(); }

}  // namespace phicert::cli
