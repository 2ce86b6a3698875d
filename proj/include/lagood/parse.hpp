#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lagood/errors.hpp"
#include "lagood/series.hpp"

namespace lagood {

// Half-open byte range in the source, with the 1-based position of begin.
struct SourceSpan {
    int begin = 0;
    int end = 0;
    int line = 1;
    int column = 1;
};

struct ExpressionNode;
using ExpressionPtr = std::unique_ptr<ExpressionNode>;

struct ExpressionNode {
    enum class Kind {
        Literal,     // rational constant
        Variable,    // 0-based index into the variable list
        Group,       // parenthesized subexpression (child in left)
        Add,
        Sub,
        Mul,
        Div,         // folded to a scale when right is a Literal, else reciprocal
        Pow,         // left ^ exponent
        Reciprocal,  // inv(child), child in left
    };

    Kind kind;
    SourceSpan span;
    Rational literal;
    int variable = -1;
    long exponent = 0;
    ExpressionPtr left;
    ExpressionPtr right;
};

// Grammar (whitespace-insensitive):
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := base ("^" nat)?
//   base   := rational | var | "(" expr ")" | "inv" "(" expr ")"
//   rational := int ("/" nat)?   int := "-"? nat
// The literal "p/q" form is consumed greedily at base (so "1/2^2" is
// (1/2)^2); a "/" whose right side is not a bare number is series division
// at term level. Without declared names, variables are x1..x<var_count>;
// with declared names, only those names resolve. Throws parse_error.
ExpressionPtr parse_expression(std::string_view src, int var_count,
                               std::span<const std::string> variable_names = {});

// Lowers to an exact series at the given order. Division by a literal scales
// by its reciprocal; division by anything else multiplies by the series
// reciprocal and requires a nonzero constant term, reported against the
// divisor's span. Throws parse_error.
Series lower(const ExpressionNode& ast, int var_count, int order);

Series parse_series(std::string_view src, int var_count, int order,
                    std::span<const std::string> variable_names = {});

}  // namespace lagood
