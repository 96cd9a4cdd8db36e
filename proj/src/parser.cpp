#include "curvehodge/parser.hpp"

#include <cctype>
#include <string>

#include "curvehodge/errors.hpp"

namespace curvehodge {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        skip_space();
        if (at_end()) throw ParseError("empty expression", pos_);
        Polynomial p = expr();
        skip_space();
        if (!at_end()) throw ParseError(unexpected(), pos_);
        return p;
    }

private:
    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            skip_space();
            if (peek() == '+') {
                ++pos_;
                acc += term();
            } else if (peek() == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            skip_space();
            if (peek() != '*') return acc;
            ++pos_;
            acc *= unary();
        }
    }

    Polynomial unary() {
        skip_space();
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        skip_space();
        if (peek() != '^') return base;
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("exponent must be a nonnegative integer literal", at);
        }
        const Integer e = integer_literal();
        if (e > kMaxExponent) {
            throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), at);
        }
        skip_space();
        if (peek() == '^') throw ParseError("chained '^' needs parentheses", pos_);
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    Polynomial primary() {
        skip_space();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Polynomial p = Polynomial::constant(Rational(integer_literal()));
            reject_juxtaposition();
            return p;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            const std::size_t at = pos_;
            ++pos_;
            if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
                throw ParseError("unknown identifier (write products with '*')", at);
            }
            reject_juxtaposition();
            return Polynomial::variable(c - 'x');
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            skip_space();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            reject_juxtaposition();
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            throw ParseError("unknown identifier", pos_);
        }
        throw ParseError(unexpected(), pos_);
    }

    Integer integer_literal() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
        }
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    // An operand followed (after optional space) by another operand is implicit multiplication.
    void reject_juxtaposition() {
        const std::size_t save = pos_;
        skip_space();
        const char c = peek();
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_') {
            throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
        }
        pos_ = save;
    }

    std::string unexpected() const {
        if (at_end()) return "unexpected end of input";
        return std::string("unexpected character '") + text_[pos_] + "'";
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace curvehodge
