#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "r2k/polynomial.hpp"

namespace r2k {

/// An element of F = Q(u1, ..., ur) held in canonical form: numerator and
/// denominator coprime, denominator monic under grlex (so for r = 0 it is 1
/// and the value is a reduced rational). Equality is structural.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Poly p) : num_(std::move(p)), den_(1) {}

  /// Brings num/den into canonical form. Throws ZeroDenominator.
  static Scalar normalize(const Poly& num, const Poly& den);
  /// The indeterminate u_{k+1}.
  static Scalar indeterminate(std::size_t k) { return Scalar(Poly::variable(k)); }

  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_rational() const noexcept { return num_.is_constant() && den_.is_constant(); }
  /// Requires is_rational().
  Rational rational_value() const { return num_.constant_value(); }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Throws DivisionByZero.
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  /// Integer power; negative exponents go through the field inverse.
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// Exact value at a rational assignment of u1..ur. Throws DenominatorVanishes
/// when the denominator evaluates to zero, InvalidArgument when the assignment
/// does not cover every indeterminate present.
Rational evaluate(const Scalar& x, const std::vector<Rational>& assignment);

/// Canonical text: "p" when the denominator is 1, otherwise "(p)/(q)".
std::string to_string(const Scalar& x);

/// Parses the scalar grammar with indeterminates u1..u_{num_vars}.
/// Throws SyntaxError (with position) or ZeroDenominator.
Scalar parse_scalar(std::string_view text, std::size_t num_vars);

}  // namespace r2k
