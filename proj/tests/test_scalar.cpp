#include <gtest/gtest.h>

#include <random>

#include "r2k/error.hpp"
#include "r2k/scalar.hpp"

using namespace r2k;

namespace {

Scalar S(const char* text, std::size_t vars = 2) { return parse_scalar(text, vars); }

// A deterministic sample of scalars mixing rationals and rational functions.
std::vector<Scalar> samples() {
  return {S("0"),         S("1"),           S("-3/4"),          S("u1"),          S("(u1 + 1)/(u2)"),
          S("(2*u1 - u2)/(u1)"), S("(u1^2 - 1)/(u1*u2 + 3)"), S("1/2*u2 - 5"), S("(1)/(u1 - u2)")};
}

}  // namespace

TEST(Scalar, NormalizeExamples) {
  EXPECT_EQ(to_string(Scalar(Rational(2, 4))), "1/2");
  EXPECT_EQ(Scalar::normalize(Poly::variable(0, 2) - Poly(1L), Poly::variable(0) - Poly(1L)), S("u1 + 1"));
  const Scalar z = Scalar::normalize(Poly(), Poly::variable(0) + Poly(3L));
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.denominator().is_one());
  EXPECT_THROW(Scalar::normalize(Poly(1L), Poly()), Error);
}

// Canonical forms computed offline with sympy (cancel, then denominator made monic).
TEST(Scalar, NormalizeFrozenValues) {
  EXPECT_EQ(to_string(S("(2*u1 + 2)/(4*u1^2 - 4)")), "(1/2)/(u1 - 1)");
  EXPECT_EQ(to_string(S("(u1*u2 - u2)/(3*u2^2)")), "(1/3*u1 - 1/3)/(u2)");
  EXPECT_EQ(to_string(S("(1/2*u1 + 1)/(3/4*u2 - 1/4*u1)")), "(-2*u1 - 4)/(u1 - 3*u2)");
}

TEST(Scalar, ArithmeticExamples) {
  EXPECT_EQ(S("1/2") + S("1/3"), S("5/6"));
  EXPECT_EQ(to_string(Scalar(1) / S("u1")), "(1)/(u1)");
  EXPECT_EQ(S("u1") * (Scalar(1) / S("u1")), Scalar(1));
  EXPECT_THROW(S("u1") / Scalar(0), Error);
  EXPECT_EQ(S("2").pow(-3), S("1/8"));
}

TEST(Scalar, EvaluateExamples) {
  EXPECT_EQ(evaluate(S("(u1 + 1)/(2)", 1), {Rational(3)}), Rational(2));
  try {
    evaluate(S("(1)/(u1)", 1), {Rational(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DenominatorVanishes);
  }
  EXPECT_EQ(evaluate(S("5/6", 0), {}), Rational(5, 6));
}

TEST(Scalar, TextRoundTrip) {
  EXPECT_EQ(S("3/4"), Scalar(Rational(3, 4)));
  EXPECT_EQ(to_string(S("(2*u1 - u2)/(u1)")), "(2*u1 - u2)/(u1)");
  for (const auto& x : samples()) EXPECT_EQ(S(to_string(x).c_str()), x) << to_string(x);
  try {
    S("1/0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroDenominator);
  }
}

TEST(Scalar, NormalizeIsIdempotent) {
  for (const auto& x : samples()) {
    const Scalar again = Scalar::normalize(x.numerator(), x.denominator());
    EXPECT_EQ(again, x);
    EXPECT_EQ(to_string(again), to_string(x));
  }
}

TEST(Scalar, FieldAxiomsOnSamples) {
  const auto xs = samples();
  for (const auto& a : xs)
    for (const auto& b : xs) {
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - b + b, a);
      if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
      for (const auto& c : xs) {
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
      }
    }
  for (const auto& a : xs)
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Scalar(1));
}

// Evaluation at rational points is an independent check on the arithmetic:
// it only uses GMP rationals.
TEST(Scalar, EvaluationIsHomomorphism) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  const auto xs = samples();
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<Rational> pt{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    for (const auto& a : xs)
      for (const auto& b : xs) {
        Rational va, vb;
        try {
          va = evaluate(a, pt);
          vb = evaluate(b, pt);
        } catch (const Error&) {
          continue;
        }
        EXPECT_EQ(evaluate(a + b, pt), va + vb);
        EXPECT_EQ(evaluate(a * b, pt), va * vb);
        if (vb != 0) EXPECT_EQ(evaluate(a / b, pt), va / vb);
      }
  }
}
