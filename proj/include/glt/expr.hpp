#pragma once

#include <memory>
#include <string>

#include "glt/error.hpp"

namespace glt {

/// AST for the small arithmetic expression language accepted on the CLI:
/// real literals, one variable (x or t), + - * / ^, parentheses,
/// sin cos exp log abs sqrt, and the constant pi.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Number, Pi, Var, Neg, Add, Sub, Mul, Div, Pow, Call };

    Kind kind;
    double number = 0.0;       // Number
    std::string name;          // Call: function name; Var: variable symbol
    ExprPtr lhs, rhs;          // binary ops; unary ops use lhs only
};

/// Parses expression text. Throws ParseError with a byte position on syntax
/// errors and unknown identifiers.
ExprPtr parse_expression(const std::string& text);

/// Evaluates at a real point. Throws NumericError when the result is not
/// finite (singular evaluation) or an operand leaves a function's domain.
double eval_expression(const ExprNode& e, double t);

/// Canonical fully parenthesized rendering; re-parsing it yields an equal AST.
std::string print_expression(const ExprNode& e);

bool expr_equal(const ExprNode& a, const ExprNode& b);

/// Name of the variable used ("x", "t", or "" for constant expressions).
/// Mixed use of both symbols is rejected at parse time.
std::string expr_variable(const ExprNode& e);

}  // namespace glt
