#include "r2k/text_cursor.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "r2k/error.hpp"

namespace r2k {

void TextCursor::skip_blanks() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool TextCursor::at_end() {
  skip_blanks();
  return pos_ >= text_.size();
}

char TextCursor::peek() {
  skip_blanks();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

char TextCursor::peek_second() {
  skip_blanks();
  return pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
}

bool TextCursor::consume(char c) {
  if (peek() != c) return false;
  ++pos_;
  return true;
}

void TextCursor::expect(char c) {
  if (!consume(c)) fail(std::string("expected '") + c + "'");
}

void TextCursor::expect_end() {
  if (!at_end()) fail("unexpected trailing input");
}

void TextCursor::fail(const std::string& message) const { throw SyntaxError(pos_, message); }

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::int64_t TextCursor::parse_integer() {
  bool negative = false;
  if (peek() == '-' || peek() == '+') negative = text_[pos_++] == '-';
  skip_blanks();
  if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("expected an integer");
  std::int64_t v = 0;
  while (pos_ < text_.size() && is_digit(text_[pos_])) {
    if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail("integer out of range");
    v = v * 10 + (text_[pos_++] - '0');
  }
  return negative ? -v : v;
}

// int ["/" posint]; the integer itself is unsigned here, signs belong to the sum.
Rational TextCursor::parse_rational() {
  skip_blanks();
  const std::size_t start = pos_;
  while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
  if (start == pos_) fail("expected a number");
  mpz_class num(std::string(text_.substr(start, pos_ - start)));
  // A slash followed by '(' belongs to the fraction form, not the coefficient.
  if (peek() == '/' && is_digit(peek_second())) {
    ++pos_;
    const std::size_t dstart = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    mpz_class den(std::string(text_.substr(dstart, pos_ - dstart)));
    if (den == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator at position " + std::to_string(dstart));
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return Rational(num);
}

Poly TextCursor::parse_monomial(std::size_t num_vars) {
  Rational coeff = 1;
  Monomial mono;
  bool need_factor = false;
  if (is_digit(peek())) {
    coeff = parse_rational();
  } else if (peek() == 'u') {
    need_factor = true;
  } else {
    fail("expected a monomial");
  }
  while (true) {
    if (!need_factor) {
      if (peek() != '*' || pos_ + 1 >= text_.size()) break;
      // Look past the '*' for the start of a factor.
      std::size_t save = pos_;
      ++pos_;
      if (peek() != 'u') {
        pos_ = save;
        break;
      }
    }
    need_factor = false;
    expect('u');
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("expected an indeterminate number");
    const std::size_t at = pos_;
    std::int64_t k = parse_integer();
    if (k < 1 || static_cast<std::size_t>(k) > num_vars) {
      pos_ = at;
      fail("unknown indeterminate u" + std::to_string(k));
    }
    std::int64_t e = 1;
    if (consume('^')) {
      e = parse_integer();
      if (e < 0 || e > 1000) fail("exponent out of range");
    }
    mono.exp[static_cast<std::size_t>(k - 1)] += static_cast<std::uint16_t>(e);
  }
  return Poly::from_terms({Term{mono, coeff}});
}

Poly TextCursor::parse_polynomial(std::size_t num_vars) {
  bool negative = false;
  if (peek() == '-' || peek() == '+') negative = text_[pos_++] == '-';
  Poly p = parse_monomial(num_vars);
  if (negative) p = -p;
  while (peek() == '-' || peek() == '+') {
    negative = text_[pos_++] == '-';
    Poly m = parse_monomial(num_vars);
    p = negative ? p - m : p + m;
  }
  return p;
}

Scalar TextCursor::parse_scalar(std::size_t num_vars) {
  if (!consume('(')) return Scalar(parse_polynomial(num_vars));
  Poly num = parse_polynomial(num_vars);
  expect(')');
  if (peek() != '/') return Scalar(num);
  ++pos_;
  expect('(');
  const std::size_t at = pos_;
  Poly den = parse_polynomial(num_vars);
  expect(')');
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "zero denominator at position " + std::to_string(at));
  return Scalar::normalize(num, den);
}

std::vector<std::int64_t> TextCursor::parse_int_list() {
  std::vector<std::int64_t> out{parse_integer()};
  while (consume(',')) out.push_back(parse_integer());
  return out;
}

}  // namespace r2k
