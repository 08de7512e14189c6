#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace composita {

// Every precondition violation in the library maps to one of these codes.
enum class errc {
  zero_constant_term,     // reciprocal needs b(0) != 0
  nonzero_constant_term,  // composita needs f(0) == 0
  nonzero_constant,       // reversion needs f(0) == 0
  nonzero_inner_constant, // composition needs inner f(0) == 0
  zero_linear_term,       // reversion needs f(1) != 0
  linear_term_not_one,    // normalized reversion needs f(1) == 1
  row_out_of_range,       // triangle row/column index outside stored shape
  shape_mismatch,         // operands sized inconsistently
  invalid_parameter,      // argument outside the documented domain
  zero_r0,                // x*R(F(x)) transform needs r(0) != 0
  zero_leading_entry,     // reciprocal-composita source has B(1,1) == 0
  insufficient_rows,      // source triangle too small for requested output
  residual_nonzero,       // post-verification of a computed result failed
  syntax_error,           // expression text failed to parse
};

const char* errc_name(errc code);

class gf_error : public std::runtime_error {
 public:
  gf_error(errc code, const std::string& message);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Parse failure with the byte offset of the offending token and a short
// description of what would have been accepted there.
class syntax_error : public gf_error {
 public:
  syntax_error(std::size_t offset, std::string expected, const std::string& message);
  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace composita
