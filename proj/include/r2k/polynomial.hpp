#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace r2k {

using Rational = mpq_class;

/// Upper bound on the number of indeterminates u1..uk (and on the rank of Γ).
inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector of a monomial in u1..u_kMaxVars. Unused slots stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  unsigned total_degree() const noexcept {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool is_one() const noexcept { return total_degree() == 0; }

  Monomial operator*(const Monomial& o) const noexcept {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(exp[i] + o.exp[i]);
    return m;
  }
  bool divides(const Monomial& o) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const noexcept {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(exp[i] - divisor.exp[i]);
    return m;
  }

  bool operator==(const Monomial&) const = default;
};

/// Graded-lexicographic order with u1 > u2 > ... .
inline std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (auto c = a.exp[i] <=> b.exp[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial over Q in u1..u_kMaxVars. Terms are kept sorted in
/// strictly decreasing grlex order with no zero coefficients, so structural
/// equality is value equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& c);
  explicit Poly(long c) : Poly(Rational(c)) {}
  /// The monomial u_{var+1}^power (var is zero based).
  static Poly variable(std::size_t var, unsigned power = 1);
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const noexcept;
  /// Constant value; zero polynomial gives 0. Requires is_constant().
  Rational constant_value() const;
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  /// Highest exponent of variable `var` (zero for the zero polynomial).
  unsigned degree_in(std::size_t var) const noexcept;
  bool contains_var(std::size_t var) const noexcept { return degree_in(var) > 0; }
  /// Coefficient of u_var^k viewed as a polynomial in the other variables.
  Poly coeff_in(std::size_t var, unsigned k) const;
  /// Index of the lowest-numbered variable present in either polynomial, or kMaxVars.
  friend std::size_t first_common_var(const Poly& a, const Poly& b) noexcept;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;
  Poly times_monomial(const Monomial& m, const Rational& c) const;

  /// Exact quotient a / b; returns false (leaving q unspecified) when b does not divide a.
  friend bool divide_exact(const Poly& a, const Poly& b, Poly& q);
  /// Scales so the leading coefficient is 1 (zero stays zero).
  Poly monic() const;

  /// Value at a rational point; `point` gives values for u1..u_n (missing ones read as zero).
  Rational evaluate(const std::vector<Rational>& point) const;

  bool operator==(const Poly& o) const;

 private:
  std::vector<Term> terms_;
};

/// Pseudo-remainder of a by b with respect to variable `var`.
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var);

/// Monic greatest common divisor over Q. gcd(0, 0) = 0; any nonzero constant gives 1.
Poly gcd(const Poly& a, const Poly& b);

/// Canonical text: grlex-descending monomials, explicit signs, e.g. "2*u1^2 - 1/3*u2 + 1".
std::string to_string(const Poly& p);

}  // namespace r2k
