#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "lns/exactq.hpp"

namespace lns {

// Expression tree over positive rational literals and the three Level-1
// operators. There is no subtraction node: Level 1 has no subtraction.
struct Expr {
    enum class Kind { Literal, Add, Mul, Div };

    Kind kind;
    std::unique_ptr<PosRational> literal;  // Kind::Literal only
    std::unique_ptr<Expr> lhs, rhs;        // operator nodes only
};

using ExprPtr = std::unique_ptr<Expr>;

ExprPtr make_literal(PosRational value);
ExprPtr make_add(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_mul(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_div(ExprPtr lhs, ExprPtr rhs);

struct ParseError : std::runtime_error {
    std::size_t position;  // byte offset into the input
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

// Syntax: integer or N/D literals, operators + * /, parentheses.
// * and / bind tighter than +; all operators are left-associative.
// A '/' directly adjacent between two digit runs lexes as one rational
// literal ("3/2" is the literal three-halves); a spaced '/' is division.
// '-' is rejected: Level 1 has no subtraction. Literals must be positive.
ExprPtr parse_expression(std::string_view text);

// Parenthesized round-trip form, for diagnostics.
std::string to_string(const Expr& e);

}  // namespace lns
