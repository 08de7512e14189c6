#pragma once

#include <composita/rational.hpp>

#include <memory>
#include <string>
#include <variant>

namespace composita {

struct GFExpression;
using ExprPtr = std::shared_ptr<const GFExpression>;

// Node kinds for generating-function expressions.  Pow keeps its exponent
// as a plain integer (always >= 1); everything else is structural.
struct VariableNode {};
struct ConstantNode { Rational value; };
struct AddNode { ExprPtr lhs, rhs; };
struct SubNode { ExprPtr lhs, rhs; };
struct NegNode { ExprPtr operand; };
struct MulNode { ExprPtr lhs, rhs; };
struct DivNode { ExprPtr lhs, rhs; };
struct PowNode { ExprPtr base; Integer exponent; };
struct Log1pNode { ExprPtr operand; };   // ln(1 + operand)
struct Expm1Node { ExprPtr operand; };   // e^operand - 1
struct InvNode { ExprPtr operand; };     // 1 / operand
struct RevNode { ExprPtr operand; };     // compositional inverse
struct ComposeNode { ExprPtr outer, inner; };

using ExprNode = std::variant<VariableNode, ConstantNode, AddNode, SubNode, NegNode, MulNode,
                              DivNode, PowNode, Log1pNode, Expm1Node, InvNode, RevNode,
                              ComposeNode>;

struct GFExpression {
  ExprNode node;
};

// ---- builders ----

ExprPtr make_variable();
ExprPtr make_constant(Rational value);
ExprPtr make_add(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_sub(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_neg(ExprPtr operand);
ExprPtr make_mul(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_div(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_pow(ExprPtr base, Integer exponent);  // exponent >= 1 (invalid_parameter)
ExprPtr make_log1p(ExprPtr operand);
ExprPtr make_expm1(ExprPtr operand);
ExprPtr make_inv(ExprPtr operand);
ExprPtr make_rev(ExprPtr operand);
ExprPtr make_compose(ExprPtr outer, ExprPtr inner);

// Structural equality.
bool ast_equal(const GFExpression& a, const GFExpression& b);

// Renders with the minimal parentheses the grammar needs, so that for any
// expression the parser produced, parse(to_text(e)) is structurally equal
// to e.  Programmatic trees that the grammar cannot spell verbatim
// (negative constants) render as an equivalent form ("-3" for the
// constant -3, which reparses as the negation of 3).
std::string to_text(const GFExpression& e);

}  // namespace composita
