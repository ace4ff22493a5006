#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "r2k/scalar.hpp"

namespace r2k {

/// Recursive-descent reader shared by the scalar, index and element grammars.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  std::size_t position() const noexcept { return pos_; }
  bool at_end();
  /// Next non-blank character, or '\0' at the end.
  char peek();
  /// Character after the next non-blank one (no blank skipping in between).
  char peek_second();
  bool consume(char c);
  void expect(char c);
  void expect_end();
  [[noreturn]] void fail(const std::string& message) const;

  std::int64_t parse_integer();
  Rational parse_rational();

  /// coeff ("*" "u" k ("^" e)?)* with the coefficient optional when a factor follows.
  Poly parse_monomial(std::size_t num_vars);
  /// Optionally signed sum of monomials.
  Poly parse_polynomial(std::size_t num_vars);
  /// polynomial | "(" polynomial ")" ["/" "(" polynomial ")"]
  Scalar parse_scalar(std::size_t num_vars);
  /// Comma-separated integers, e.g. the inside of "L(1,-2)".
  std::vector<std::int64_t> parse_int_list();

 private:
  void skip_blanks();

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace r2k
