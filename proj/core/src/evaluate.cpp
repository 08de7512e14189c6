#include <composita/evaluate.hpp>

#include <composita/error.hpp>
#include <composita/transforms.hpp>

#include <algorithm>
#include <optional>

namespace composita {

namespace {

gf_error cite(errc code, const std::string& what, const GFExpression& sub) {
  return gf_error(code, what + " in '" + to_text(sub) + "'");
}

// cheap constant-term probe; order 1 keeps rev(...) subtrees evaluable
bool starts_at_x(const ExprPtr& e, int order_hint = 1) {
  return evaluate_series(*e, order_hint).has_zero_constant_term();
}

CompositaTriangle delta_triangle(int rows) {
  std::vector<Rational> entries(
      static_cast<std::size_t>(rows) * (static_cast<std::size_t>(rows) + 1) / 2, Rational(0));
  std::vector<Rational>::size_type idx = 0;
  for (int n = 1; n <= rows; ++n) {
    idx += static_cast<std::size_t>(n);
    entries[idx - 1] = 1;  // (n, n) is the last cell of row n
  }
  return CompositaTriangle(rows, std::move(entries));
}

// triangle rules that expect more source rows than the request:
// reversion and reciprocal read up to row 2*(rows-1)
int doubled_rows(int rows) { return std::max(1, 2 * (rows - 1)); }

std::optional<CompositaTriangle> structural(const GFExpression& e, int rows);

CompositaTriangle composita_of(const GFExpression& e, int rows) {
  if (auto t = structural(e, rows)) return std::move(*t);
  return composita_by_powers(evaluate_series(e, rows), rows);
}

// composita of x/b(x) through the reciprocal transform, fed by the
// composita of x*b(x) built with the doubled row budget
CompositaTriangle reciprocal_from(const ExprPtr& b, int rows) {
  const GFExpression xb{MulNode{make_variable(), b}};
  return reciprocal_composita(composita_of(xb, doubled_rows(rows)), rows);
}

std::optional<CompositaTriangle> structural(const GFExpression& e, int rows) {
  using Result = std::optional<CompositaTriangle>;
  return std::visit(
      [&](const auto& node) -> Result {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, VariableNode>) {
          return delta_triangle(rows);
        } else if constexpr (std::is_same_v<T, NegNode>) {
          if (!starts_at_x(node.operand)) return std::nullopt;
          return composita_scale(composita_of(*node.operand, rows), -1);
        } else if constexpr (std::is_same_v<T, AddNode> || std::is_same_v<T, SubNode>) {
          if (!starts_at_x(node.lhs) || !starts_at_x(node.rhs)) return std::nullopt;
          CompositaTriangle rhs = composita_of(*node.rhs, rows);
          if constexpr (std::is_same_v<T, SubNode>) rhs = composita_scale(rhs, -1);
          return composita_sum(composita_of(*node.lhs, rows), rhs);
        } else if constexpr (std::is_same_v<T, MulNode>) {
          // c * f as scaling
          if (const auto* c = std::get_if<ConstantNode>(&node.lhs->node);
              c && starts_at_x(node.rhs))
            return composita_scale(composita_of(*node.rhs, rows), c->value);
          if (const auto* c = std::get_if<ConstantNode>(&node.rhs->node);
              c && starts_at_x(node.lhs))
            return composita_scale(composita_of(*node.lhs, rows), c->value);
          // x * inv(b) via the reciprocal transform
          if (std::holds_alternative<VariableNode>(node.lhs->node))
            if (const auto* inv = std::get_if<InvNode>(&node.rhs->node))
              return reciprocal_from(inv->operand, rows);
          if (std::holds_alternative<VariableNode>(node.rhs->node))
            if (const auto* inv = std::get_if<InvNode>(&node.lhs->node))
              return reciprocal_from(inv->operand, rows);
          // f * b with f starting at x, b arbitrary
          if (starts_at_x(node.lhs))
            return composita_product_with_series(
                composita_of(*node.lhs, rows),
                evaluate_series(*node.rhs, std::max(1, rows - 1)));
          if (starts_at_x(node.rhs))
            return composita_product_with_series(
                composita_of(*node.rhs, rows),
                evaluate_series(*node.lhs, std::max(1, rows - 1)));
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, DivNode>) {
          // x / b via the reciprocal transform
          if (std::holds_alternative<VariableNode>(node.lhs->node))
            return reciprocal_from(node.rhs, rows);
          if (starts_at_x(node.lhs)) {
            const TruncatedSeries b = evaluate_series(*node.rhs, std::max(1, rows - 1));
            if (b[0] == 0) throw cite(errc::zero_constant_term, "division by a series starting at x", *node.rhs);
            return composita_product_with_series(composita_of(*node.lhs, rows),
                                                 reciprocal_series(b));
          }
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, PowNode>) {
          if (!starts_at_x(node.base)) return std::nullopt;
          // [x^n] (f^e)^m = [x^n] f^(e*m): the power's triangle reads
          // every e-th column of the base's triangle
          const CompositaTriangle base = composita_of(*node.base, rows);
          std::vector<Rational> entries(
              static_cast<std::size_t>(rows) * (static_cast<std::size_t>(rows) + 1) / 2,
              Rational(0));
          std::size_t idx = 0;
          for (int n = 1; n <= rows; ++n) {
            for (int k = 1; k <= n; ++k, ++idx) {
              const Integer col = node.exponent * k;
              if (col <= n) entries[idx] = base.entry(n, static_cast<int>(col));
            }
          }
          return CompositaTriangle(rows, std::move(entries));
        } else if constexpr (std::is_same_v<T, RevNode>) {
          return reversion_composita(composita_of(*node.operand, doubled_rows(rows)), rows);
        } else if constexpr (std::is_same_v<T, Log1pNode>) {
          if (std::holds_alternative<VariableNode>(node.operand->node))
            return closed_form_composita({ClosedFormKind::log_shift}, rows);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, Expm1Node>) {
          if (std::holds_alternative<VariableNode>(node.operand->node))
            return closed_form_composita({ClosedFormKind::exp_shift}, rows);
          return std::nullopt;
        } else {
          return std::nullopt;  // constants, inv, compose: defer to the series route
        }
      },
      e.node);
}

}  // namespace

TruncatedSeries evaluate_series(const GFExpression& e, int order) {
  return std::visit(
      [&](const auto& node) -> TruncatedSeries {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, VariableNode>) {
          return x_series(order);
        } else if constexpr (std::is_same_v<T, ConstantNode>) {
          return constant_series(node.value, order);
        } else if constexpr (std::is_same_v<T, AddNode>) {
          return add(evaluate_series(*node.lhs, order), evaluate_series(*node.rhs, order));
        } else if constexpr (std::is_same_v<T, SubNode>) {
          return sub(evaluate_series(*node.lhs, order), evaluate_series(*node.rhs, order));
        } else if constexpr (std::is_same_v<T, NegNode>) {
          return negate(evaluate_series(*node.operand, order));
        } else if constexpr (std::is_same_v<T, MulNode>) {
          return mul(evaluate_series(*node.lhs, order), evaluate_series(*node.rhs, order));
        } else if constexpr (std::is_same_v<T, DivNode>) {
          const TruncatedSeries den = evaluate_series(*node.rhs, order);
          if (den[0] == 0)
            throw cite(errc::zero_constant_term, "division by a series with zero constant term",
                       *node.rhs);
          return mul(evaluate_series(*node.lhs, order), reciprocal_series(den));
        } else if constexpr (std::is_same_v<T, PowNode>) {
          return pow(evaluate_series(*node.base, order), node.exponent);
        } else if constexpr (std::is_same_v<T, Log1pNode>) {
          const TruncatedSeries inner = evaluate_series(*node.operand, order);
          if (inner[0] != 0)
            throw cite(errc::nonzero_inner_constant, "log1p of a series with nonzero constant term",
                       *node.operand);
          return compose_series(log1p_series(order), inner);
        } else if constexpr (std::is_same_v<T, Expm1Node>) {
          const TruncatedSeries inner = evaluate_series(*node.operand, order);
          if (inner[0] != 0)
            throw cite(errc::nonzero_inner_constant, "expm1 of a series with nonzero constant term",
                       *node.operand);
          return compose_series(expm1_series(order), inner);
        } else if constexpr (std::is_same_v<T, InvNode>) {
          const TruncatedSeries inner = evaluate_series(*node.operand, order);
          if (inner[0] == 0)
            throw cite(errc::zero_constant_term, "inv of a series with zero constant term",
                       *node.operand);
          return reciprocal_series(inner);
        } else if constexpr (std::is_same_v<T, RevNode>) {
          const TruncatedSeries inner = evaluate_series(*node.operand, std::max(order, 1));
          if (inner[0] != 0)
            throw cite(errc::nonzero_constant, "rev of a series with nonzero constant term",
                       *node.operand);
          if (inner[1] == 0)
            throw cite(errc::zero_linear_term, "rev of a series with zero linear term",
                       *node.operand);
          TruncatedSeries r = reversion_series_newton(inner);
          return r.order() > order ? r.truncated(order) : r;
        } else if constexpr (std::is_same_v<T, ComposeNode>) {
          const TruncatedSeries inner = evaluate_series(*node.inner, order);
          if (inner[0] != 0)
            throw cite(errc::nonzero_inner_constant,
                       "compose with an inner series with nonzero constant term", *node.inner);
          return compose_series(evaluate_series(*node.outer, order), inner);
        }
      },
      e.node);
}

CompositaTriangle evaluate_composita(const GFExpression& e, int rows) {
  if (rows < 1) throw gf_error(errc::invalid_parameter, "triangle needs at least one row");
  const TruncatedSeries s = evaluate_series(e, rows);
  if (!s.has_zero_constant_term())
    throw cite(errc::nonzero_constant_term, "composita needs a zero constant term", e);
  if (auto t = structural(e, rows)) return std::move(*t);
  return composita_by_powers(s, rows);
}

}  // namespace composita
