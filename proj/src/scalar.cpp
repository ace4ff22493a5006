#include "r2k/scalar.hpp"

#include "r2k/error.hpp"
#include "r2k/text_cursor.hpp"

namespace r2k {

Scalar Scalar::normalize(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator is the zero polynomial");
  if (num.is_zero()) return Scalar();
  if (den.is_constant()) {
    if (den.is_one()) return Scalar(num, Poly(1));
    return Scalar(num.scaled(1 / den.constant_value()), Poly(1));
  }
  Poly g = gcd(num, den);
  Poly n = num, d = den;
  if (!g.is_one()) {
    divide_exact(num, g, n);
    divide_exact(den, g, d);
  }
  Rational lead = d.leading_coeff();
  if (lead != 1) {
    Rational inv = 1 / lead;
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  return Scalar(std::move(n), std::move(d));
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_); }

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ + b.num_, a.den_);
  if (a.den_ == b.den_) return Scalar::normalize(a.num_ + b.num_, a.den_);
  return Scalar::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ * b.num_, a.den_);
  return Scalar::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero scalar");
  return a * b.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of the zero scalar");
  // num/den is already reduced; swapping only needs the leading-coefficient fixup.
  return normalize(den_, num_);
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Scalar result(1);
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

namespace {

std::size_t highest_var(const Poly& p) {
  std::size_t h = 0;
  for (std::size_t v = 0; v < kMaxVars; ++v)
    if (p.contains_var(v)) h = v + 1;
  return h;
}

}  // namespace

Rational evaluate(const Scalar& x, const std::vector<Rational>& assignment) {
  const std::size_t needed = std::max(highest_var(x.numerator()), highest_var(x.denominator()));
  if (assignment.size() < needed)
    throw Error(ErrorCode::InvalidArgument, "assignment does not cover u" + std::to_string(needed));
  Rational den = x.denominator().evaluate(assignment);
  if (sgn(den) == 0) throw Error(ErrorCode::DenominatorVanishes, "denominator vanishes at the assignment");
  return x.numerator().evaluate(assignment) / den;
}

std::string to_string(const Scalar& x) {
  if (x.denominator().is_one()) return to_string(x.numerator());
  return "(" + to_string(x.numerator()) + ")/(" + to_string(x.denominator()) + ")";
}

Scalar parse_scalar(std::string_view text, std::size_t num_vars) {
  TextCursor cur(text);
  Scalar s = cur.parse_scalar(num_vars);
  cur.expect_end();
  return s;
}

}  // namespace r2k
