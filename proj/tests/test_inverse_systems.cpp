#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

using H = std::vector<std::size_t>;

Polynomial<Rational> dual(const std::vector<std::string>& vars, const std::string& F) {
  return parse_polynomial<Rational>(make_ring(vars), F);
}

}  // namespace

TEST(Apolar, PowerOfOneVariable) {
  auto A = apolar_algebra(dual({"X"}, "X^3"));
  EXPECT_EQ(A.invariants(), ring({"x"}, {"x^4"}).invariants());
}

TEST(Apolar, ProductOfTwoVariables) {
  auto A = apolar_algebra(dual({"X", "Y"}, "X*Y"));
  EXPECT_EQ(A.invariants(), ring({"x", "y"}, {"x^2", "y^2"}).invariants());
  EXPECT_TRUE(ideals_equal(A.presentation(), ring({"x", "y"}, {"x^2", "y^2"}).presentation()));
}

TEST(Apolar, SumOfCubes) {
  // Ann(X^3 + Y^3) = (xy, x^3 - y^3)
  auto A = apolar_algebra(dual({"X", "Y"}, "X^3 + Y^3"));
  EXPECT_TRUE(ideals_equal(A.presentation(), ring({"x", "y"}, {"x*y", "x^3 - y^3"}).presentation()));
}

TEST(Apolar, DropsUnusedVariables) {
  auto A = apolar_algebra(dual({"X", "Y", "Z"}, "X^4"));
  EXPECT_EQ(A.edim(), 1u);
  EXPECT_EQ(A.length(), 5u);
}

TEST(Apolar, RejectsSmallCharacteristic) {
  auto r = make_ring({"X"}, FieldSpec::prime(3));
  try {
    apolar_algebra(parse_polynomial<ModP>(r, "X^3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CharacteristicTooSmall);
  }
  EXPECT_THROW(apolar_algebra(Polynomial<Rational>(make_ring({"X"}))), Error);
}

TEST(Corpus, EveryEntryIsGorensteinWithTheRequestedShape) {
  CorpusParams p;
  p.count = 4;
  p.h = 3;
  p.s = 5;
  for (auto& e : random_corpus<Rational>(CorpusProfile::Stretched, p, 7)) {
    EXPECT_EQ(e.algebra.type(), 1u);
    EXPECT_EQ(e.algebra.hilbert(), (H{1, 3, 1, 1, 1, 1}));
    EXPECT_TRUE(e.algebra.invariants().stretched);
  }
  p.n = 2;
  for (auto& e : random_corpus<Rational>(CorpusProfile::Short, p, 8)) {
    EXPECT_EQ(e.algebra.type(), 1u);
    EXPECT_EQ(e.algebra.hilbert(), (H{1, 3, 2, 1}));
  }
  p.s = 4;
  for (auto& e : random_corpus<Rational>(CorpusProfile::General, p, 9)) {
    EXPECT_TRUE(e.algebra.is_gorenstein());
    EXPECT_EQ(e.algebra.edim(), 3u);
    EXPECT_EQ(e.algebra.loewy_length(), 4);
    // the apolar algebra of the dual polynomial is the entry itself
    EXPECT_EQ(apolar_algebra(e.dual).invariants(), e.algebra.invariants());
  }
}

TEST(Corpus, SeedDeterminism) {
  CorpusParams p;
  p.count = 3;
  p.h = 2;
  p.s = 4;
  auto a = random_corpus<Rational>(CorpusProfile::General, p, 42);
  auto b = random_corpus<Rational>(CorpusProfile::General, p, 42);
  auto c = random_corpus<Rational>(CorpusProfile::General, p, 43);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].dual, b[i].dual);
  EXPECT_NE(a[0].dual, c[0].dual);
}

TEST(Corpus, ModularCorpus) {
  CorpusParams p;
  p.count = 2;
  p.h = 3;
  p.n = 3;
  for (auto& e : random_corpus<ModP>(CorpusProfile::Short, p, 5, kF)) EXPECT_EQ(e.algebra.hilbert(), (H{1, 3, 3, 1}));
}

TEST(Corpus, RejectsBadParameters) {
  CorpusParams p;
  p.h = 2;
  p.n = 3;
  EXPECT_THROW(random_corpus<Rational>(CorpusProfile::Short, p, 1), Error);
  p.h = 9;
  EXPECT_THROW(random_corpus<Rational>(CorpusProfile::Stretched, p, 1), Error);
  EXPECT_THROW(parse_profile("long"), Error);
}
