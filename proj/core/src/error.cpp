#include <composita/error.hpp>

namespace composita {

const char* errc_name(errc code) {
  switch (code) {
    case errc::zero_constant_term: return "ZeroConstantTerm";
    case errc::nonzero_constant_term: return "NonzeroConstantTerm";
    case errc::nonzero_constant: return "NonzeroConstant";
    case errc::nonzero_inner_constant: return "NonzeroInnerConstant";
    case errc::zero_linear_term: return "ZeroLinearTerm";
    case errc::linear_term_not_one: return "LinearTermNotOne";
    case errc::row_out_of_range: return "RowOutOfRange";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::zero_r0: return "ZeroR0";
    case errc::zero_leading_entry: return "ZeroLeadingEntry";
    case errc::insufficient_rows: return "InsufficientRows";
    case errc::residual_nonzero: return "ResidualNonzero";
    case errc::syntax_error: return "SyntaxError";
  }
  return "UnknownError";
}

gf_error::gf_error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

syntax_error::syntax_error(std::size_t offset, std::string expected, const std::string& message)
    : gf_error(errc::syntax_error,
               message + " at offset " + std::to_string(offset) + " (expected " + expected + ")"),
      offset_(offset),
      expected_(std::move(expected)) {}

}  // namespace composita
