#pragma once

#include <string_view>

#include "curvehodge/polynomial.hpp"

namespace curvehodge {

/// Largest exponent accepted after `^`.
inline constexpr unsigned kMaxExponent = 1024;

/// Parses and fully expands a polynomial expression.
///
/// Grammar (whitespace ignored between tokens):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary ('*' unary)*
///     unary   := ('+' | '-') unary | power
///     power   := primary ('^' INTEGER)?
///     primary := INTEGER | 'x' | 'y' | 'z' | '(' expr ')'
///
/// Multiplication must be written with `*`; `2x`, `x y` and `xy` are rejected. Unary minus binds
/// looser than `^`, so `-x^2` is `-(x^2)`. Throws ParseError carrying the offending offset.
Polynomial parse_poly(std::string_view text);

}  // namespace curvehodge
