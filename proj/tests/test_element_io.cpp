#include <gtest/gtest.h>

#include "r2k/element_io.hpp"
#include "r2k/error.hpp"

using namespace r2k;

TEST(ElementIo, ParseExamples) {
  const Element a = parse_element("L(2) + 3*H(-1)", 1, 0);
  EXPECT_EQ(a.coeff(BasisSymbol{Kind::L, GammaElem{2}}), Scalar(1));
  EXPECT_EQ(a.coeff(BasisSymbol{Kind::H, GammaElem{-1}}), Scalar(3));
  EXPECT_EQ(a.size(), 2u);

  const Element b = parse_element("1/2*G+(0) - G-(1)", 1, 0);
  EXPECT_EQ(b.coeff(BasisSymbol{Kind::Gplus, GammaElem{0}}), Scalar(Rational(1, 2)));
  EXPECT_EQ(b.coeff(BasisSymbol{Kind::Gminus, GammaElem{1}}), Scalar(-1));

  try {
    parse_element("L(1,2)", 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankMismatch);
  }
}

TEST(ElementIo, CanonicalRendering) {
  EXPECT_EQ(to_string(parse_element("1/2*C + 4*L(0)", 1, 0)), "4*L(0) + 1/2*C");
  EXPECT_EQ(to_string(parse_element("-L(0)", 1, 0)), "-L(0)");
  EXPECT_EQ(to_string(parse_element("L(1) - L(1)", 1, 0)), "0");
  EXPECT_EQ(to_string(parse_element("G-(1,-2) + H(0,0)", 2, 2)), "H(0,0) + G-(1,-2)");
  EXPECT_EQ(to_string(parse_element("(u1 + u2)*L(0,1)", 2, 2)), "(u1 + u2)*L(0,1)");
  EXPECT_EQ(to_string(parse_element("(1)/(u1)*H(1)", 1, 1)), "(1)/(u1)*H(1)");
}

TEST(ElementIo, RoundTrip) {
  const char* texts[] = {"4*L(0) + 1/2*C", "-2/3*G+(-4) + G-(4)", "(u1 - 1)/(u1 + 1)*L(3) - u1*H(3) + C", "0",
                         "L(1) + L(-1) + H(0) - 7*C"};
  for (const char* t : texts) {
    const Element x = parse_element(t, 1, 1);
    EXPECT_EQ(parse_element(to_string(x), 1, 1), x) << t;
    EXPECT_EQ(to_string(parse_element(to_string(x), 1, 1)), to_string(x));
  }
}

TEST(ElementIo, SyntaxErrorsCarryPosition) {
  try {
    parse_element("L(1) + Q(2)", 1, 0);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
  EXPECT_THROW(parse_element("L(1", 1, 0), SyntaxError);
  EXPECT_THROW(parse_element("2*", 1, 0), SyntaxError);
  EXPECT_THROW(parse_element("u2*L(0)", 1, 1), SyntaxError);
}
