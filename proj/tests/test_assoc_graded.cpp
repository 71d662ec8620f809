#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

namespace {
using H = std::vector<std::size_t>;
}

TEST(AssociatedGraded, HilbertFunctionIsPreserved) {
  for (auto name : {"ex2_3", "ex3_2", "ex4_1", "ex4_16a", "ex4_16b", "rem2_4c"}) {
    auto Q = example(name);
    auto G = associated_graded(Q);
    EXPECT_EQ(G.hilbert(), Q.hilbert()) << name;
    for (const auto& g : G.presentation().generators) EXPECT_TRUE(g.is_homogeneous()) << name;
  }
}

TEST(AssociatedGraded, CuspSum) {
  auto G = associated_graded(example("ex2_3"));
  EXPECT_EQ(G.hilbert(), (H{1, 3, 3, 2, 1}));
  EXPECT_EQ(G.algebra().type(), 2u);
  EXPECT_FALSE(graded_fibre_split(G).has_value());
  // the same ring as the bundled presentation of G
  auto G2 = example("ex2_3_G");
  EXPECT_EQ(G.algebra().invariants(), G2.invariants());
}

TEST(AssociatedGraded, GradedRingIsItsOwnAssociatedGraded) {
  auto A = ring({"x", "y"}, {"x*y", "x^3 - y^3"});
  auto G = associated_graded(A);
  EXPECT_EQ(G.algebra().invariants(), A.invariants());
}

TEST(FibreSplit, CompleteIntersectionEdim3) {
  auto G = associated_graded(example("ex3_2"));
  auto sp = graded_fibre_split(G);
  ASSERT_TRUE(sp);
  EXPECT_EQ(sp->A.hilbert(), (H{1, 2, 3, 4, 4, 2, 1}));
  EXPECT_EQ(sp->B.hilbert(), (H{1, 1}));
  EXPECT_EQ(sp->k_B, 1);
  // A is the stated k[X,Y]/(X^4 - Y^4, X^2 Y^3, X^3 Y^2) up to isomorphism
  auto stated = ring({"X", "Y"}, {"X^4 - Y^4", "X^2*Y^3", "X^3*Y^2"});
  EXPECT_EQ(sp->A.algebra().invariants(), stated.invariants());
  EXPECT_FALSE(sp->A.algebra().is_gorenstein());
}

TEST(FibreSplit, CompleteIntersectionPair) {
  auto a = graded_fibre_split(associated_graded(example("ex4_16a")));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->A.hilbert(), (H{1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(a->B.algebra().invariants(), ring({"Y", "Z"}, {"Y^4", "Y*Z", "Z^4"}).invariants());
  auto b = graded_fibre_split(associated_graded(example("ex4_16b")));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->A.algebra().invariants(), ring({"X", "Y"}, {"X^2", "Y^5"}).invariants());
  EXPECT_EQ(b->B.hilbert(), (H{1, 1, 1, 1}));
}

TEST(FibreSplit, FibreProductOfGradedRingsSplits) {
  auto R = ring({"a", "b"}, {"a^2", "b^3"});
  auto S = ring({"c"}, {"c^4"});
  auto F = fibre_product(R, S);
  auto sp = graded_fibre_split(associated_graded(F));
  ASSERT_TRUE(sp);
  std::multiset<std::size_t> lengths{sp->A.length(), sp->B.length()};
  EXPECT_EQ(lengths, (std::multiset<std::size_t>{R.length(), S.length()}));
}

TEST(FibreSplit, RejectsFalseSplitsOverSmallFields) {
  // exhaustive search agrees with the endomorphism method on gr of ex2_3 over F_3
  auto G = GradedAlgebra<ModP>(ring<ModP>({"Y1", "Y2", "Z"}, {"Y1*Z", "Y2*Z", "Y1^2*Y2", "Y2^2", "Y1^4 - Z^4"}, FieldSpec::prime(3))
                                   .presentation());
  EXPECT_FALSE(exhaustive_fibre_split(G).has_value());
  EXPECT_FALSE(graded_fibre_split(G).has_value());
}

TEST(Iarrobino, StretchedAndShortRings) {
  CorpusParams p;
  p.h = 3;
  p.s = 4;
  p.count = 3;
  for (auto& e : random_corpus<Rational>(CorpusProfile::Stretched, p, 21)) {
    auto G = associated_graded(e.algebra);
    auto data = iarrobino_ideal(e.algebra, G);
    EXPECT_TRUE(data.Q0.algebra().is_gorenstein());
    EXPECT_EQ(data.Q0.hilbert(), (H{1, 1, 1, 1, 1}));
  }
  p.n = 2;
  for (auto& e : random_corpus<Rational>(CorpusProfile::Short, p, 22)) {
    auto data = iarrobino_ideal(e.algebra, associated_graded(e.algebra));
    // H_Q = (1, h, n, 1) gives H_{Q0} = (1, n, n, 1)
    EXPECT_EQ(data.Q0.hilbert(), (H{1, 2, 2, 1}));
    EXPECT_TRUE(data.Q0.algebra().is_gorenstein());
  }
}

TEST(Iarrobino, RequiresGorenstein) {
  auto G = example("ex2_3_G");
  EXPECT_THROW(iarrobino_ideal(G, associated_graded(G)), Error);
}
