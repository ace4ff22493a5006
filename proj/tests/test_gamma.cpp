#include <gtest/gtest.h>

#include "r2k/error.hpp"
#include "r2k/gamma.hpp"
#include "r2k/linear_solve.hpp"

using namespace r2k;

namespace {

Scalar S(const char* text, std::size_t vars = 2) { return parse_scalar(text, vars); }

GammaElem G2(std::int64_t a, std::int64_t b) {
  const std::int64_t c[] = {a, b};
  return GammaElem::from_coords(c);
}

}  // namespace

TEST(Gamma, CombineExamples) {
  const std::int64_t k11[] = {1, 1};
  const GammaElem pair1[] = {GammaElem{2}, GammaElem{-2}};
  EXPECT_EQ(gamma_combine(k11, pair1), GammaElem{0});
  const std::int64_t km1[] = {-1};
  const GammaElem one[] = {G2(1, 3)};
  EXPECT_EQ(gamma_combine(km1, one), G2(-1, -3));
  const std::int64_t k23[] = {2, 3};
  const GammaElem units[] = {G2(1, 0), G2(0, 1)};
  EXPECT_EQ(gamma_combine(k23, units), G2(2, 3));
  const GammaElem mixed[] = {GammaElem{1}, G2(0, 1)};
  EXPECT_THROW(gamma_combine(k11, mixed), Error);
}

TEST(Gamma, TextForms) {
  EXPECT_EQ(to_string(GammaElem{3}), "3");
  EXPECT_EQ(to_string(G2(1, -2)), "(1,-2)");
  EXPECT_EQ(parse_gamma("(1,-2)", 2), G2(1, -2));
  EXPECT_EQ(parse_gamma("-4", 1), GammaElem{-4});
  EXPECT_THROW(parse_gamma("(1,2)", 1), Error);
}

TEST(Gamma, EmbedExamples) {
  EXPECT_EQ(GammaEmbedding::integers().embed(GammaElem{3}), Scalar(3));
  EXPECT_EQ(GammaEmbedding({Scalar(Rational(1, 2))}).embed(GammaElem{3}), Scalar(Rational(3, 2)));
  EXPECT_EQ(GammaEmbedding::generic(2).embed(G2(1, -2)), S("u1 - 2*u2"));
  EXPECT_THROW(GammaEmbedding::integers().embed(G2(1, 1)), Error);
}

TEST(Gamma, EmbedIsAdditiveOnWindow) {
  const auto emb = GammaEmbedding::generic(2);
  const auto w = window_indices(2, 2);
  for (const auto& a : w)
    for (const auto& b : w) EXPECT_EQ(emb.embed(a + b), emb.embed(a) + emb.embed(b));
}

TEST(Gamma, InjectivityExamples) {
  EXPECT_TRUE(injectivity_audit(GammaEmbedding::integers(), 4).passed());
  EXPECT_TRUE(injectivity_audit(GammaEmbedding::generic(2), 3).passed());
  const CheckReport bad = injectivity_audit(GammaEmbedding({Scalar(1), Scalar(Rational(1, 2))}), 2);
  ASSERT_FALSE(bad.passed());
  bool found = false;
  for (const auto& r : bad.records)
    if (r.witness && r.witness->inputs.find("(1,-2)") != std::string::npos) found = true;
  EXPECT_TRUE(found);
}

TEST(Gamma, AdditiveHomExamples) {
  EXPECT_EQ(hom_eval_add(AdditiveHom{{Scalar(Rational(5, 3))}}, GammaElem{2}), Scalar(Rational(10, 3)));
  EXPECT_EQ(hom_eval_add(AdditiveHom{{Scalar(1), Scalar(-1)}}, G2(3, 3)), Scalar(0));
  EXPECT_EQ(hom_eval_add(AdditiveHom{{S("u1"), Scalar(7)}}, G2(0, 0)), Scalar(0));
}

TEST(Gamma, MultiplicativeHomExamples) {
  EXPECT_EQ(hom_eval_mul(MultiplicativeHom({Scalar(2)}), GammaElem{-3}), Scalar(Rational(1, 8)));
  EXPECT_EQ(hom_eval_mul(MultiplicativeHom({Scalar(5)}), GammaElem{0}), Scalar(1));
  EXPECT_EQ(hom_eval_mul(MultiplicativeHom({Scalar(2), S("u1")}), G2(1, 1)), S("2*u1"));
  EXPECT_THROW(MultiplicativeHom({Scalar(0)}), Error);
}

TEST(Gamma, HomsRespectGroupLaw) {
  const AdditiveHom phi{{S("u1 + 1"), Scalar(Rational(-2, 3))}};
  const MultiplicativeHom f({S("u2"), Scalar(3)});
  const auto w = window_indices(2, 2);
  for (const auto& a : w)
    for (const auto& b : w) {
      EXPECT_EQ(phi(a + b), phi(a) + phi(b));
      EXPECT_EQ(f(a + b), f(a) * f(b));
    }
}

// Rank 1: φ = k·ι with k = φ1/g1. Rank 2 generic: φ = (1,0) has no such k.
TEST(Gamma, ProportionalityToEmbedding) {
  const GammaEmbedding emb({Scalar(Rational(3, 2))});
  const AdditiveHom phi{{Scalar(Rational(5, 7))}};
  const Scalar k = phi.values[0] / emb.generators()[0];
  for (const auto& a : window_indices(1, 5)) EXPECT_EQ(phi(a), k * emb.embed(a));

  const auto gen = GammaEmbedding::generic(2);
  LinearSystem sys;
  sys.unknowns = 1;
  for (std::size_t i = 0; i < 2; ++i) {
    const GammaElem e = GammaElem::unit(2, i);
    sys.add_equation({gen.embed(e)}, i == 0 ? Scalar(1) : Scalar(0));
  }
  EXPECT_FALSE(solve(sys).has_value());
}
