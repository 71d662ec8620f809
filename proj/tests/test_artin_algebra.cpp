#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace testing_support;

namespace {

using H = std::vector<std::size_t>;

// Hilbert function of a monomial quotient, counted directly.
H monomial_hilbert(int a, int b) {
  // k[x,y]/(x^a, y^b)
  H h;
  for (int d = 0; d <= a + b - 2; ++d) {
    std::size_t c = 0;
    for (int i = 0; i < a; ++i)
      if (d - i >= 0 && d - i < b) ++c;
    h.push_back(c);
  }
  return h;
}

}  // namespace

TEST(ArtinAlgebra, CuspSumGradedRing) {
  auto G = example("ex2_3_G");
  auto inv = G.invariants();
  EXPECT_EQ(inv.hilbert, (H{1, 3, 3, 2, 1}));
  EXPECT_EQ(inv.type, 2u);
  EXPECT_FALSE(inv.gorenstein);
  EXPECT_EQ(inv.length, 10u);
}

TEST(ArtinAlgebra, CompleteIntersectionInvariants) {
  auto Q = example("ex3_2");
  auto inv = Q.invariants();
  EXPECT_TRUE(inv.gorenstein);
  EXPECT_TRUE(inv.complete_intersection);
  EXPECT_EQ(inv.edim, 3u);
  EXPECT_EQ(inv.loewy_length, 6);
  EXPECT_EQ(inv.hilbert, (H{1, 3, 3, 4, 4, 2, 1}));
  EXPECT_EQ(inv.length, 18u);
}

TEST(ArtinAlgebra, MonomialCompleteIntersections) {
  for (int a = 2; a <= 5; ++a)
    for (int b = 2; b <= 4; ++b) {
      auto A = ring({"x", "y"}, {"x^" + std::to_string(a), "y^" + std::to_string(b)});
      H want = monomial_hilbert(a, b);
      while (want.size() > 1 && want.back() == 0) want.pop_back();
      EXPECT_EQ(A.hilbert(), want) << a << "," << b;
      EXPECT_EQ(A.type(), 1u);
      EXPECT_EQ(A.length(), static_cast<std::size_t>(a * b));
    }
}

TEST(ArtinAlgebra, ResidueFieldAndTrivialCases) {
  auto k = ring({}, {});
  EXPECT_EQ(k.length(), 1u);
  EXPECT_EQ(k.loewy_length(), 0);
  EXPECT_EQ(k.edim(), 0u);
  try {
    ring({"x"}, {"x"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCohen);
  }
  EXPECT_THROW(ring({"x", "y"}, {"x^2"}), Error);  // not Artinian
}

TEST(ArtinAlgebra, LocalizesAtTheOrigin) {
  // x^2 (x - 1): the local ring at 0 is k[x]/x^2
  auto A = ring({"x"}, {"x^3 - x^2"});
  EXPECT_EQ(A.length(), 2u);
  EXPECT_EQ(A.hilbert(), (H{1, 1}));
}

TEST(ArtinAlgebra, StructureConstantsAreCommutativeAndAssociative) {
  auto A = example("ex4_16b");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-4, 4);
  auto rnd = [&] {
    DenseVec<Rational> v(A.length());
    for (auto& x : v) x = Rational(c(rng));
    return v;
  };
  for (int i = 0; i < 10; ++i) {
    auto a = rnd(), b = rnd(), d = rnd();
    EXPECT_EQ(A.multiply(a, b), A.multiply(b, a));
    EXPECT_EQ(A.multiply(A.multiply(a, b), d), A.multiply(a, A.multiply(b, d)));
    EXPECT_EQ(A.multiply(A.unit(), a), a);
  }
}

TEST(ArtinAlgebra, SocleAndAnnihilators) {
  auto A = ring({"x", "y"}, {"x*y", "x^3 - y^3"});
  auto soc = A.socle();
  EXPECT_EQ(soc.dim(), 1u);
  EXPECT_TRUE(soc.span.contains(A.element("x^3")));
  // (0 : m^i) = m^{s+1-i} for Gorenstein rings
  const int s = A.loewy_length();
  for (int i = 0; i <= s + 1; ++i)
    EXPECT_EQ(A.annihilator(A.power_ideal(i)).span, A.power(std::max(0, s + 1 - i))) << i;
}

TEST(ArtinAlgebra, InvariantsUnderCoordinateChange) {
  for (auto name : {"ex3_2", "ex4_1", "ex4_16a", "rem2_4c"}) {
    auto Q = example(name);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto Q2 = scramble(Q, seed);
      auto a = Q.invariants(), b = Q2.invariants();
      EXPECT_EQ(a.length, b.length) << name;
      EXPECT_EQ(a.hilbert, b.hilbert) << name;
      EXPECT_EQ(a.type, b.type) << name;
      EXPECT_EQ(a.mu_ideal, b.mu_ideal) << name;
    }
  }
}

TEST(ArtinAlgebra, MinimalPresentationRepresentsTheRing) {
  auto Q = example("ex2_3");
  auto P = Q.minimal_presentation();
  auto Q2 = QA::from_presentation(P);
  EXPECT_EQ(Q2.invariants(), Q.invariants());
  EXPECT_EQ(P.size(), Q.invariants().mu_ideal);
}

TEST(ArtinAlgebra, StretchedAndShortFlags) {
  auto S = ring({"x", "y", "z"}, {"x*y", "x*z", "y*z", "x^4 - y^2", "y^2 - z^2"});
  EXPECT_EQ(S.hilbert(), (H{1, 3, 1, 1, 1}));
  EXPECT_TRUE(S.invariants().stretched);
  EXPECT_FALSE(S.invariants().short_ring);
  auto T = ring({"x", "y", "z"}, {"x^2", "y^2", "z^2"});
  EXPECT_TRUE(T.invariants().short_ring);
  EXPECT_FALSE(T.invariants().stretched);
  // H = (1,2,1,1) is both
  auto U = ring({"x", "y"}, {"x*y", "x^3 - y^2"});
  EXPECT_TRUE(U.invariants().short_ring);
  EXPECT_TRUE(U.invariants().stretched);
}

TEST(RingIO, ParsesAndWritesRingFiles) {
  auto rf = parse_ring_file("# comment\nfield Fp 7\nvars a, b\nideal a^2,\n  b^3 - a*b,\n\n  a*b^2\n");
  EXPECT_EQ(rf.field, FieldSpec::prime(7));
  EXPECT_EQ(rf.vars, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(rf.ideal, (std::vector<std::string>{"a^2", "b^3 - a*b", "a*b^2"}));
  EXPECT_EQ(rf.ideal_lines, (std::vector<int>{4, 5, 7}));
  auto A = load_algebra<ModP>(rf);
  auto text = format_ring_file(A.presentation());
  auto back = parse_ring_file(text);
  EXPECT_EQ(load_algebra<ModP>(back).invariants(), A.invariants());
}

TEST(RingIO, ReportsLineAndColumn) {
  auto rf = parse_ring_file("field Q\nvars x\nideal x^2, x +* 1\n");
  try {
    load_algebra<Rational>(rf);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3, column 15"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_ring_file("vars x\n"), Error);
  EXPECT_THROW(parse_ring_file("field R\nvars x\nideal x\n"), Error);
  EXPECT_THROW(parse_ring_file("field Q\nideal x\n"), Error);
  EXPECT_THROW(parse_ring_file("field Q\nvars x\nideal x,, x^2\n"), Error);
}

TEST(RingIO, FieldOverrideSyntax) {
  EXPECT_EQ(parse_field("Fp:32003"), FieldSpec::prime(32003));
  EXPECT_EQ(parse_field("Fp 5"), FieldSpec::prime(5));
  EXPECT_EQ(parse_field("GF(3)"), FieldSpec::prime(3));
  EXPECT_EQ(parse_field("Q"), FieldSpec::rationals());
  EXPECT_THROW(parse_field("Fp:12"), Error);
  EXPECT_THROW(parse_field("R"), Error);
}

TEST(RingIO, BundledCorpusLoads) {
  for (auto name : {"ex2_3", "ex2_3_G", "ex3_2", "ex4_1", "ex4_16a", "ex4_16b", "rem2_4c"}) EXPECT_NO_THROW(example(name)) << name;
}
