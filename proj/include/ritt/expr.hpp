#pragma once

// Expression syntax for maps:
//   comp   := sum { ("." | "o" | U+2218) sum }      right-associative
//   sum    := term { ("+" | "-") term }
//   term   := unary { ("*" | "/") unary }
//   unary  := "-" unary | power                     so -z^2 = -(z^2)
//   power  := atom [ "^" nat ]
//   atom   := nat | "z" | "(" comp ")"
// U+2212 is accepted for minus. Literals are natural numbers; fractions are
// divisions.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "ritt/algebra.hpp"

namespace ritt {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Var, Add, Sub, Mul, Div, Neg, Pow, Compose };
    Kind kind;
    mpz_class number;        // Number
    unsigned long exponent;  // Pow
    ExprPtr lhs, rhs;        // rhs unused for Neg and Pow

    static ExprPtr num(const mpz_class& n);
    static ExprPtr var();
    static ExprPtr binary(Kind k, ExprPtr a, ExprPtr b);
    static ExprPtr neg(ExprPtr a);
    static ExprPtr pow(ExprPtr a, unsigned long e);
};

/// Structural equality.
bool operator==(const Expr& a, const Expr& b);

/// Throws SyntaxError carrying the offending byte offset.
ExprPtr parse_expr(std::string_view text);

/// Minimal parentheses; parse_expr(print_expr(e)) is structurally e.
std::string print_expr(const Expr& e);

/// Evaluation as a rational function; ZeroDenominator on division by zero.
RatFunc lower_ratfunc(const Expr& e);
/// DomainError if the expression divides by a non-constant.
Poly lower_poly(const Expr& e);

/// Expression whose lowering is exactly the given map, in canonical text.
ExprPtr expr_of(const Poly& p);
ExprPtr expr_of(const RatFunc& r);

}  // namespace ritt
