#pragma once

#include <composita/ast.hpp>
#include <composita/composita.hpp>
#include <composita/series.hpp>

namespace composita {

// Evaluates the expression to a series of exactly the given order.
// Precondition failures cite the offending subexpression in the message:
// inv/division of a series with zero constant term (zero_constant_term),
// log1p/expm1/compose of an inner series with nonzero constant term
// (nonzero_inner_constant), rev of a series with nonzero constant term or
// zero linear term (nonzero_constant / zero_linear_term).
TruncatedSeries evaluate_series(const GFExpression& e, int order);

// Evaluates to a composita triangle.  The whole expression must have a
// zero constant term (nonzero_constant_term).  Where the tree shape
// matches one of the triangle-level rules (negation and constant factors
// as scaling, sums, products with a series, integer powers as column
// selection, rev via the reversion transform, x*inv(b) and x/b via the
// reciprocal transform, log1p(x) and expm1(x) closed forms) the triangle
// is assembled from those rules; any other shape falls back to
// composita_by_powers of the evaluated series.  Both paths produce
// identical triangles; the rules exist because they cost less and
// because each is independently testable.
CompositaTriangle evaluate_composita(const GFExpression& e, int rows);

}  // namespace composita
