#include <composita/ast.hpp>

#include <composita/error.hpp>

namespace composita {

namespace {
ExprPtr wrap(ExprNode node) { return std::make_shared<const GFExpression>(GFExpression{std::move(node)}); }
}

ExprPtr make_variable() { return wrap(VariableNode{}); }
ExprPtr make_constant(Rational value) { return wrap(ConstantNode{std::move(value)}); }
ExprPtr make_add(ExprPtr lhs, ExprPtr rhs) { return wrap(AddNode{std::move(lhs), std::move(rhs)}); }
ExprPtr make_sub(ExprPtr lhs, ExprPtr rhs) { return wrap(SubNode{std::move(lhs), std::move(rhs)}); }
ExprPtr make_neg(ExprPtr operand) { return wrap(NegNode{std::move(operand)}); }
ExprPtr make_mul(ExprPtr lhs, ExprPtr rhs) { return wrap(MulNode{std::move(lhs), std::move(rhs)}); }
ExprPtr make_div(ExprPtr lhs, ExprPtr rhs) { return wrap(DivNode{std::move(lhs), std::move(rhs)}); }

ExprPtr make_pow(ExprPtr base, Integer exponent) {
  if (exponent < 1) throw gf_error(errc::invalid_parameter, "power exponent must be >= 1");
  return wrap(PowNode{std::move(base), std::move(exponent)});
}

ExprPtr make_log1p(ExprPtr operand) { return wrap(Log1pNode{std::move(operand)}); }
ExprPtr make_expm1(ExprPtr operand) { return wrap(Expm1Node{std::move(operand)}); }
ExprPtr make_inv(ExprPtr operand) { return wrap(InvNode{std::move(operand)}); }
ExprPtr make_rev(ExprPtr operand) { return wrap(RevNode{std::move(operand)}); }
ExprPtr make_compose(ExprPtr outer, ExprPtr inner) {
  return wrap(ComposeNode{std::move(outer), std::move(inner)});
}

bool ast_equal(const GFExpression& a, const GFExpression& b) {
  if (a.node.index() != b.node.index()) return false;
  const auto eq = [](const ExprPtr& x, const ExprPtr& y) { return ast_equal(*x, *y); };
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, VariableNode>) {
          return true;
        } else if constexpr (std::is_same_v<T, ConstantNode>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, NegNode> || std::is_same_v<T, Log1pNode> ||
                             std::is_same_v<T, Expm1Node> || std::is_same_v<T, InvNode> ||
                             std::is_same_v<T, RevNode>) {
          return eq(lhs.operand, rhs.operand);
        } else if constexpr (std::is_same_v<T, PowNode>) {
          return lhs.exponent == rhs.exponent && eq(lhs.base, rhs.base);
        } else if constexpr (std::is_same_v<T, ComposeNode>) {
          return eq(lhs.outer, rhs.outer) && eq(lhs.inner, rhs.inner);
        } else {
          return eq(lhs.lhs, rhs.lhs) && eq(lhs.rhs, rhs.rhs);
        }
      },
      a.node);
}

// ---- pretty printer ----

namespace {

// grammar levels: sum 1, product 2, negation 3, power 4, atom 5
int precedence(const GFExpression& e) {
  return std::visit(
      [](const auto& node) -> int {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, AddNode> || std::is_same_v<T, SubNode>) return 1;
        else if constexpr (std::is_same_v<T, MulNode> || std::is_same_v<T, DivNode>) return 2;
        else if constexpr (std::is_same_v<T, NegNode>) return 3;
        else if constexpr (std::is_same_v<T, PowNode>) return 4;
        else if constexpr (std::is_same_v<T, ConstantNode>)
          return node.value < 0 ? 3 : 5;  // "-3" reads as a negation
        else return 5;
      },
      e.node);
}

void print(const GFExpression& e, int min_level, std::string& out);

void print_child(const ExprPtr& child, int min_level, std::string& out) {
  print(*child, min_level, out);
}

void print(const GFExpression& e, int min_level, std::string& out) {
  const bool parens = precedence(e) < min_level;
  if (parens) out += '(';
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, VariableNode>) {
          out += 'x';
        } else if constexpr (std::is_same_v<T, ConstantNode>) {
          if (node.value < 0) out += '-';
          const Rational mag = abs(node.value);
          if (denominator(mag) == 1) {
            out += numerator(mag).str();
          } else {
            // a bare p/q could glue onto a neighbouring * or /, so a
            // fraction always carries its own parentheses
            out += '(';
            out += to_string(mag);
            out += ')';
          }
        } else if constexpr (std::is_same_v<T, AddNode>) {
          print_child(node.lhs, 1, out);
          out += " + ";
          print_child(node.rhs, 2, out);
        } else if constexpr (std::is_same_v<T, SubNode>) {
          print_child(node.lhs, 1, out);
          out += " - ";
          print_child(node.rhs, 2, out);
        } else if constexpr (std::is_same_v<T, NegNode>) {
          out += '-';
          print_child(node.operand, 4, out);
        } else if constexpr (std::is_same_v<T, MulNode>) {
          print_child(node.lhs, 2, out);
          out += '*';
          print_child(node.rhs, 3, out);
        } else if constexpr (std::is_same_v<T, DivNode>) {
          print_child(node.lhs, 2, out);
          out += '/';
          print_child(node.rhs, 3, out);
        } else if constexpr (std::is_same_v<T, PowNode>) {
          print_child(node.base, 5, out);
          out += '^';
          out += node.exponent.str();
        } else if constexpr (std::is_same_v<T, Log1pNode>) {
          out += "log1p(";
          print_child(node.operand, 1, out);
          out += ')';
        } else if constexpr (std::is_same_v<T, Expm1Node>) {
          out += "expm1(";
          print_child(node.operand, 1, out);
          out += ')';
        } else if constexpr (std::is_same_v<T, InvNode>) {
          out += "inv(";
          print_child(node.operand, 1, out);
          out += ')';
        } else if constexpr (std::is_same_v<T, RevNode>) {
          out += "rev(";
          print_child(node.operand, 1, out);
          out += ')';
        } else if constexpr (std::is_same_v<T, ComposeNode>) {
          out += "compose(";
          print_child(node.outer, 1, out);
          out += ", ";
          print_child(node.inner, 1, out);
          out += ')';
        }
      },
      e.node);
  if (parens) out += ')';
}

}  // namespace

std::string to_text(const GFExpression& e) {
  std::string out;
  print(e, 1, out);
  return out;
}

}  // namespace composita
