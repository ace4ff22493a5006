#include <gtest/gtest.h>

#include "r2k/error.hpp"
#include "r2k/scalar.hpp"
#include "r2k/text_cursor.hpp"

using namespace r2k;

namespace {

Poly P(const char* text, std::size_t vars = 3) {
  TextCursor cur(text);
  Poly p = cur.parse_polynomial(vars);
  cur.expect_end();
  return p;
}

}  // namespace

TEST(Poly, CanonicalTextIsGrlexDescending) {
  EXPECT_EQ(to_string(P("1 - 1/3*u2 + 2*u1^2")), "2*u1^2 - 1/3*u2 + 1");
  EXPECT_EQ(to_string(P("u2*u1 + u1^2 + u2^2")), "u1^2 + u1*u2 + u2^2");
  EXPECT_EQ(to_string(P("u3^3 + u1*u2")), "u3^3 + u1*u2");
  EXPECT_EQ(to_string(P("0")), "0");
  EXPECT_EQ(to_string(P("-u1 + u1")), "0");
}

TEST(Poly, ArithmeticMatchesExpansion) {
  const Poly a = P("u1 + u2"), b = P("u1 - 2*u2");
  EXPECT_EQ(a * a * b, P("u1^3 - 3*u1*u2^2 - 2*u2^3"));
  EXPECT_EQ(a - a, Poly());
  EXPECT_EQ((a + b).scaled(Rational(1, 2)), P("u1 - 1/2*u2"));
}

TEST(Poly, ExactDivision) {
  Poly q;
  ASSERT_TRUE(divide_exact(P("u1^2 - 1"), P("u1 - 1"), q));
  EXPECT_EQ(q, P("u1 + 1"));
  EXPECT_FALSE(divide_exact(P("u1^2 + 1"), P("u1 - 1"), q));
}

// Expected gcds computed offline with sympy and made monic under grlex.
TEST(Poly, GcdFrozenValues) {
  EXPECT_EQ(gcd(P("u1^2 - 1"), P("u1^2 + 2*u1 + 1")), P("u1 + 1"));
  EXPECT_EQ(gcd(P("u1^3 - 3*u1*u2^2 - 2*u2^3"), P("u1^4 - 5*u1^3*u2 + 6*u1^2*u2^2 + 4*u1*u2^3 - 8*u2^4")),
            P("u1^2 - u1*u2 - 2*u2^2"));
  EXPECT_EQ(gcd(P("6*u1^2*u2^2 + 3*u1^2*u2 - 6*u1*u2^2*u3^2 - 3*u1*u2*u3^2 + 2*u1*u2*u3 + u1*u3 - 2*u2*u3^3 - u3^3"),
                P("6*u1^2*u2^2 - 6*u1^2*u2*u3 - 6*u1*u2^2*u3^2 + 6*u1*u2*u3^3 + 2*u1*u2*u3 - 2*u1*u3^2 - 2*u2*u3^3 + "
                  "2*u3^4")),
            P("u1*u2*u3^2 - u1^2*u2 + 1/3*u3^3 - 1/3*u1*u3"));
  EXPECT_EQ(gcd(P("4*u1^3*u2 - 4*u1*u2"), P("6*u1^2*u2^2 + 12*u1*u2^2 + 6*u2^2")), P("u1*u2 + u2"));
}

TEST(Poly, GcdEdgeCases) {
  EXPECT_EQ(gcd(P("0"), P("0")), Poly());
  EXPECT_EQ(gcd(P("6"), P("u1 + 1")), Poly(1L));
  EXPECT_EQ(gcd(P("0"), P("2*u1 + 4")), P("u1 + 2"));
  EXPECT_EQ(gcd(P("u1*u2"), P("u2*u3")), P("u2"));
}

TEST(Poly, GcdDividesBothAndIsMaximal) {
  const Poly f = P("u1 - u3 + 2"), g = P("u2^2 + u1"), h = P("3*u1*u2 - 1");
  const Poly d = gcd(f * g * g, f * h);
  EXPECT_EQ(d, f.monic());
  Poly q;
  EXPECT_TRUE(divide_exact(f * g * g, d, q));
  EXPECT_TRUE(divide_exact(f * h, d, q));
}

TEST(Poly, EvaluateIsRingHomomorphism) {
  const Poly a = P("u1^2 - 3*u2 + 1/2"), b = P("u1*u2*u3 - 7");
  const std::vector<Rational> pt{Rational(2, 3), Rational(-5), Rational(7, 2)};
  EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
  EXPECT_EQ((a + b).evaluate(pt), a.evaluate(pt) + b.evaluate(pt));
}

TEST(Poly, ParseErrorsCarryPosition) {
  try {
    P("u1 + *u2");
    FAIL() << "no SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(P("u4", 3), SyntaxError);
}
