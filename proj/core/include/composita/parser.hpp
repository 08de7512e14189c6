#pragma once

#include <composita/ast.hpp>

#include <string_view>

namespace composita {

// Parses the expression grammar
//
//   expr   := term { ("+" | "-") term }
//   term   := factor { ("*" | "/") factor }
//   factor := [ "-" ] base [ "^" uint ]
//   base   := "(" expr ")" | uint [ "/" uint ] | "x"
//           | ("log1p" | "expm1" | "inv" | "rev") "(" expr ")"
//           | "compose" "(" expr "," expr ")"
//
// uint "/" uint is a rational literal only when the next token is not
// "*", "/" or "^"; otherwise the "/" is ordinary division (so "1/2" in
// "1/2 + x" is the constant one half, while "1/2^3" divides by 2^3).
// There is no implicit multiplication.  "/" desugars to multiplication
// by inv(...), so the result never contains a DivNode.  Exponents must
// be >= 1.  Failures throw syntax_error with the byte offset of the
// offending token and a description of what was expected.
ExprPtr parse_expression(std::string_view text);

}  // namespace composita
