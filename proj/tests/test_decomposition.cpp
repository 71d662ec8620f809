#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

template <FieldScalar K>
void expect_recovers(const ArtinAlgebra<K>& Q, const ArtinAlgebra<K>& R, const ArtinAlgebra<K>& S) {
  auto res = decompose(Q);
  ASSERT_EQ(res.kind, DecompositionKind::Decomposed);
  ASSERT_TRUE(res.certificate);
  EXPECT_TRUE(verify_certificate(Q, *res.certificate).ok());
  auto Rc = certificate_component_R(*res.certificate), Sc = certificate_component_S(*res.certificate);
  std::multiset<std::string> got{Json(to_json(Rc.invariants())).dump(), Json(to_json(Sc.invariants())).dump()};
  std::multiset<std::string> want{Json(to_json(R.invariants())).dump(), Json(to_json(S.invariants())).dump()};
  EXPECT_EQ(got, want);
}

}  // namespace

TEST(Indecomposable, CompleteIntersections) {
  for (auto name : {"ex3_2", "ex4_16a", "ex4_16b"}) {
    auto res = decompose(example(name));
    EXPECT_EQ(res.kind, DecompositionKind::Indecomposable) << name;
    ASSERT_TRUE(res.indecomposable);
    EXPECT_EQ(res.indecomposable->kind, IndecomposabilityKind::CompleteIntersectionEdim3);
  }
}

TEST(Indecomposable, HilbertBound) {
  // H = (1,2,3,...) exceeds C(2,2) + 1
  auto Q = apolar_algebra(parse_polynomial<Rational>(make_ring({"X", "Y"}), "X^2*Y^3 + X^5"));
  ASSERT_GE(Q.hilbert().size(), 3u);
  if (Q.hilbert()[2] == 3) {
    auto c = indecomposability_check(Q);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->kind, IndecomposabilityKind::HilbertH2Bound);
  }
  EXPECT_EQ(indecomposability_check(ring({"x"}, {"x^4"}))->kind, IndecomposabilityKind::TrivialSmall);
}

TEST(Decompose, RejectsNonGorenstein) {
  EXPECT_THROW(decompose(example("ex2_3_G")), Error);
  EXPECT_THROW(decompose(ring({"x"}, {"x^2"})), Error);
}

TEST(Decompose, CubicPlaneCurveWithLine) {
  auto R = ring({"Y1", "Y2"}, {"Y1^2*Y2", "Y1^3 - Y2^2"});
  auto S = ring({"Z"}, {"Z^5"});
  expect_recovers(example("ex2_3"), R, S);
  expect_recovers(scramble(example("ex2_3"), 4), R, S);
}

TEST(Decompose, LoewyLengthTwo) {
  auto Q = ring({"a", "b"}, {"a*b", "a^2 - b^2"});
  expect_recovers(Q, ring({"y"}, {"y^3"}), ring({"z"}, {"z^3"}));
}

TEST(Decompose, SocleDegreeOneSummand) {
  auto R = ring({"y1", "y2"}, {"y1*y2", "y1^4 - y2^4"});
  auto S = ring({"z1", "z2"}, {"z1*z2", "z1^2 - z2^2"});
  auto Q = connected_sum(R, S);
  expect_recovers(Q, R, S);
  expect_recovers(scramble(Q, 11), R, S);
}

TEST(Decompose, HypersurfaceSummand) {
  auto R = ring({"y1", "y2", "y3"}, {"y1*y2", "y1*y3", "y2*y3", "y1^2 - y2^2", "y1^2 - y3^2"});
  auto S = ring({"z"}, {"z^6"});
  auto Q = connected_sum(S, R);
  expect_recovers(Q, S, R);
  expect_recovers(scramble(Q, 2), S, R);
}

TEST(Decompose, EqualLoewyLengths) {
  auto Q = apolar_algebra(parse_polynomial<Rational>(make_ring({"X", "Y"}), "X^3 + Y^3"));
  expect_recovers(Q, ring({"y"}, {"y^4"}), ring({"z"}, {"z^4"}));
}

TEST(Decompose, ModularField) {
  auto R = ring<ModP>({"y"}, {"y^5"}, kF);
  auto S = ring<ModP>({"z1", "z2"}, {"z1*z2", "z1^2 - z2^2"}, kF);
  auto Q = connected_sum(R, S);
  expect_recovers(Q, R, S);
}

TEST(Setup, CompleteIntersectionPair) {
  for (auto [name, ij_deep] : {std::pair{"ex4_16a", false}, std::pair{"ex4_16b", true}}) {
    auto Q = example(name);
    auto split = graded_fibre_split(associated_graded(Q));
    ASSERT_TRUE(split) << name;
    auto rep = verify_setup_theorems(Q, *split);
    for (const auto& c : rep.conclusions.checks) EXPECT_TRUE(c.ok) << name << ": " << c.name;
    EXPECT_EQ(rep.ij_in_m_k_plus_1, ij_deep) << name;
  }
}

TEST(Setup, RejectsViolations) {
  auto Q = example("ex3_2");
  auto split = graded_fibre_split(associated_graded(Q));
  ASSERT_TRUE(split);
  // the A factor here is not Gorenstein
  EXPECT_THROW(verify_setup_theorems(Q, *split), Error);
}
