#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace testing_support;

namespace {

using P = Polynomial<Rational>;

P poly(const RingPtr& r, const std::string& s) { return parse_polynomial<Rational>(r, s); }

P random_poly(const RingPtr& r, std::mt19937_64& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> e(0, max_deg), c(-9, 9);
  P out(r);
  for (int t = 0; t < terms; ++t) {
    Monomial m = Monomial::one(r->nvars());
    for (auto& x : m.exps) x = e(rng) / static_cast<int>(r->nvars());
    out = out + P::monomial(r, m, Rational(c(rng)));
  }
  return out;
}

}  // namespace

TEST(Field, RationalArithmeticIsCanonical) {
  Rational a(mpq_class(6, 4)), b(mpq_class(-1, 3));
  EXPECT_EQ((a + b).to_string(), "7/6");
  EXPECT_EQ((a * b).to_string(), "-1/2");
  EXPECT_EQ((a / b).to_string(), "-9/2");
  EXPECT_EQ(a.inverse() * a, Rational(1));
  EXPECT_THROW(a / Rational(0), Error);
}

TEST(Field, ModPInverseAndFractions) {
  const auto f = FieldSpec::prime(32003);
  for (long v : {1L, 2L, 17L, 32002L, 12345L}) {
    auto x = ModP::from_int(v, f);
    EXPECT_TRUE((x * x.inverse()).is_one());
  }
  EXPECT_EQ(ModP::from_int(-1, f).to_string(), "32002");
  auto half = ModP::from_fraction(1, 2, f);
  EXPECT_TRUE((half + half).is_one());
  EXPECT_THROW(FieldSpec::prime(32004), Error);
  EXPECT_THROW(ModP::from_fraction(1, 7, FieldSpec::prime(7)), Error);
}

TEST(Polynomial, ParsePrintRoundTrip) {
  auto r = make_ring({"x", "y", "z"});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto f = random_poly(r, rng, 12, 6);
    EXPECT_EQ(poly(r, f.to_string()), f) << f.to_string();
  }
  EXPECT_EQ(poly(r, "(x+y)^2 - 2x*y"), poly(r, "x^2 + y^2"));
  EXPECT_EQ(poly(r, "3/6*x"), poly(r, "1/2 x"));
  EXPECT_EQ(poly(r, "-(-2)*z"), poly(r, "2*z"));
}

TEST(Polynomial, ParseErrorsReportPosition) {
  auto r = make_ring({"x", "y"});
  try {
    parse_polynomial<Rational>(r, "x + w", 4, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    EXPECT_NE(std::string(e.what()).find("line 4, column 14"), std::string::npos) << e.what();
  }
  EXPECT_THROW(poly(r, "x^"), Error);
  EXPECT_THROW(poly(r, "(x+y"), Error);
  EXPECT_THROW(poly(r, "x/0"), Error);
  EXPECT_THROW(make_ring({"x", "x"}), Error);
}

TEST(Polynomial, ArithmeticLaws) {
  auto r = make_ring({"a", "b"});
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    auto f = random_poly(r, rng, 6, 4), g = random_poly(r, rng, 6, 4), h = random_poly(r, rng, 6, 4);
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * g, g * f);
    if (!g.is_zero()) EXPECT_EQ((f * g).divide_exact(g), f);
  }
}

TEST(Groebner, ReducedBasisOfPrincipalIdeals) {
  auto r = make_ring({"x", "y"});
  auto gb = groebner_basis(std::vector<P>{poly(r, "x^2 - y"), poly(r, "y^2")});
  // independent check of the Buchberger criterion
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) EXPECT_TRUE(normal_form(s_polynomial(gb[i], gb[j]), gb).is_zero());
  EXPECT_TRUE(ideal_contains(gb, poly(r, "x^4")));
  EXPECT_FALSE(ideal_contains(gb, poly(r, "x^3")));
  // k[x,y]/(x^2 - y, y^2) = k[x]/x^4
  EXPECT_EQ(quotient_basis(gb, r).size(), 4u);
}

TEST(Groebner, NormalFormIsIdealInvariant) {
  auto r = make_ring({"x", "y", "z"});
  std::vector<P> gens{poly(r, "x^2 - y*z"), poly(r, "y^3 - x*z"), poly(r, "z^2")};
  auto gb = groebner_basis(gens);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    auto h = random_poly(r, rng, 9, 5);
    P shifted = h;
    for (const auto& g : gens) shifted = shifted + random_poly(r, rng, 4, 2) * g;
    EXPECT_EQ(normal_form(h, gb), normal_form(shifted, gb));
  }
}

TEST(Groebner, QuotientDimensionMatchesMonomialCount) {
  // monomial ideal (x^a, y^b, z^c, xyz): count standard monomials directly
  auto r = make_ring({"x", "y", "z"});
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 3; ++b) {
      IdealPresentation<Rational> I(r, {poly(r, "x^" + std::to_string(a)), poly(r, "y^" + std::to_string(b)), poly(r, "z^3"),
                                        poly(r, "x*y*z")});
      std::size_t count = 0;
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
          for (int k = 0; k < 3; ++k) count += (i > 0 && j > 0 && k > 0) ? 0 : 1;
      EXPECT_EQ(quotient_basis(I).size(), count);
    }
}

TEST(Groebner, IdealOperations) {
  auto r = make_ring({"x", "y"});
  IdealPresentation<Rational> X(r, {poly(r, "x")}), Y(r, {poly(r, "y")}), X2(r, {poly(r, "x^2"), poly(r, "x*y")});
  EXPECT_TRUE(ideals_equal(ideal_ops(X, Y, IdealOp::Intersection), IdealPresentation<Rational>(r, {poly(r, "x*y")})));
  EXPECT_TRUE(ideals_equal(ideal_ops(X, Y, IdealOp::Product), IdealPresentation<Rational>(r, {poly(r, "x*y")})));
  EXPECT_TRUE(ideals_equal(ideal_ops(X2, X, IdealOp::Colon), IdealPresentation<Rational>(r, {poly(r, "x"), poly(r, "y")})));
  EXPECT_TRUE(ideal_subset(X2, X));
  EXPECT_FALSE(ideal_subset(X, X2));
}

TEST(Groebner, ModularArithmeticBasis) {
  auto r = make_ring({"x", "y"}, FieldSpec::prime(3));
  std::vector<Polynomial<ModP>> gens{parse_polynomial<ModP>(r, "x^3 - y"), parse_polynomial<ModP>(r, "y^2")};
  auto gb = groebner_basis(gens);
  EXPECT_EQ(quotient_basis(gb, r).size(), 6u);
}
