#pragma once

#include <composita/composita.hpp>
#include <composita/rational.hpp>
#include <composita/series.hpp>

#include <string>
#include <vector>

namespace composita {

// Result payload of one tool invocation, ready for rendering.  Either a
// coefficient sequence (order + coefficients 0..order) or a triangle
// (order + rows 1..order), plus the expression it came from.
struct OutputDocument {
  enum class Kind { sequence, triangle };

  Kind kind = Kind::sequence;
  int order = 0;
  std::string expr;
  std::vector<Rational> coefficients;        // sequence payload
  std::vector<std::vector<Rational>> rows;   // triangle payload

  bool operator==(const OutputDocument&) const = default;

  static OutputDocument from_series(const TruncatedSeries& s, std::string expr);
  static OutputDocument from_triangle(const CompositaTriangle& t, std::string expr);

  // {"kind": "...", "order": N, "expr": "...", and either
  //  "coefficients": [["0", "v0"], ...] (index/value string pairs) or
  //  "rows": [["v11"], ["v21", "v22"], ...]}.
  // Values always travel as strings so nothing is rounded.
  std::string to_json() const;
  static OutputDocument from_json(const std::string& text);  // inverse of to_json

  // "n,value" lines for sequences, "n,k,value" lines for triangles,
  // with a header row.
  std::string to_csv() const;

  // human-readable: "a(n)" lines for sequences, right-aligned rows for
  // triangles
  std::string to_table() const;

  // renders by format name "table", "json" or "csv" (invalid_parameter
  // otherwise)
  std::string render(const std::string& format) const;
};

// Exit code the command-line tool uses for a failure: 2 for expression
// syntax errors, 4 when a computed result fails its own verification
// (residual_nonzero), 3 for every other domain error, 1 for anything
// unrecognized.
int cli_exit_code(const std::exception& error) noexcept;

}  // namespace composita
