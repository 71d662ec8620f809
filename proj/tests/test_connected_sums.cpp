#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

using H = std::vector<std::size_t>;

}  // namespace

TEST(FibreProduct, LengthAndHilbertAdd) {
  auto R = ring({"a", "b"}, {"a*b", "a^2 - b^2"});
  auto S = ring({"c"}, {"c^4"});
  auto F = fibre_product(R, S);
  EXPECT_EQ(F.length(), R.length() + S.length() - 1);
  EXPECT_EQ(F.hilbert(), (H{1, 3, 2, 1}));
  EXPECT_EQ(F.type(), R.type() + S.type());
}

TEST(FibreProduct, RejectsBadInput) {
  auto R = ring({"a"}, {"a^2"});
  EXPECT_THROW(fibre_product(R, ring({"a"}, {"a^3"})), Error);
  EXPECT_THROW(fibre_product(R, ring({"c"}, {"c"})), Error);
  EXPECT_THROW(fibre_product(R, R), Error);
}

TEST(ConnectedSum, TwoCubes) {
  auto R = ring({"y"}, {"y^3"}), S = ring({"z"}, {"z^3"});
  auto Q = connected_sum(R, S);
  EXPECT_EQ(Q.invariants(), example("rem2_4c").invariants());
  EXPECT_TRUE(Q.is_gorenstein());
}

TEST(ConnectedSum, HilbertOfCuspSum) {
  auto R = ring({"Y1", "Y2"}, {"Y1^2*Y2", "Y1^3 - Y2^2"});
  auto S = ring({"Z"}, {"Z^5"});
  auto Q = connected_sum(R, S);
  EXPECT_EQ(Q.length(), R.length() + S.length() - 2);
  EXPECT_EQ(Q.hilbert(), (H{1, 3, 3, 2, 1}));
  EXPECT_TRUE(Q.is_gorenstein());
  EXPECT_EQ(Q.invariants(), example("ex2_3").invariants());
}

TEST(ConnectedSum, SpecErrors) {
  auto R = ring({"y"}, {"y^3"}), S = ring({"z"}, {"z^3"});
  ConnectedSumSpec<Rational> bad;
  bad.delta_R = R.element("y");
  EXPECT_THROW(connected_sum(R, S, bad), Error);
  ConnectedSumSpec<Rational> zero_u;
  zero_u.u = Rational(0);
  EXPECT_THROW(connected_sum(R, S, zero_u), Error);
  EXPECT_THROW(connected_sum(R, ring({"z1", "z2"}, {"z1^2", "z1*z2", "z2^2"})), Error);
}

TEST(ConnectedSum, IdentitiesOnSmallPool) {
  auto Rs = component_pool<Rational>("y", 100, kQ, 2, 4);
  auto Ss = component_pool<Rational>("z", 200, kQ, 2, 3);
  int checked = 0;
  for (std::size_t i = 0; i < Rs.size(); i += 3)
    for (std::size_t j = 0; j < Ss.size(); j += 4) {
      const auto& R = Rs[i];
      const auto& S = Ss[j];
      ConnectedSumSpec<Rational> spec;
      spec.u = Rational(static_cast<long>(1 + i + j));
      auto Q = connected_sum(R, S, spec);
      auto id = verify_connected_sum_identities(Q, R, S, 5);
      for (const auto& c : id.checks) EXPECT_TRUE(c.ok) << c.name << " " << c.detail;
      auto cert = direct_certificate(Q, R, S, *spec.u);
      auto v = verify_certificate(Q, cert);
      for (const auto& c : v.checks) EXPECT_TRUE(c.ok) << c.name << " " << c.detail;
      ++checked;
    }
  EXPECT_GE(checked, 6);
}

TEST(Certificate, JsonRoundTripAndTampering) {
  auto Q = example("ex2_3");
  auto res = decompose(Q);
  ASSERT_EQ(res.kind, DecompositionKind::Decomposed);
  auto j = certificate_to_json(*res.certificate, Q);
  auto back = certificate_from_json<Rational>(Json::parse(j.dump()), Q);
  EXPECT_EQ(certificate_to_json(back, Q).dump(), j.dump());
  EXPECT_TRUE(verify_certificate(Q, back).ok());

  auto wrong_phi = back;
  wrong_phi.phi = 1;
  EXPECT_FALSE(verify_certificate(Q, wrong_phi).ok());

  auto swapped = back;
  std::swap(swapped.delta_R, swapped.delta_S);
  EXPECT_FALSE(verify_certificate(Q, swapped).ok());

  auto bad_image = j;
  bad_image["y_images"][0] = "0";
  EXPECT_FALSE(verify_certificate(Q, certificate_from_json<Rational>(bad_image, Q)).ok());

  auto other_field = j;
  other_field["field"] = "Fp 7";
  EXPECT_THROW(certificate_from_json<Rational>(other_field, Q), Error);
  auto missing = j;
  missing.erase("S_ideal");
  EXPECT_THROW(certificate_from_json<Rational>(missing, Q), Error);
}

TEST(Certificate, RejectsCertificateForAnotherRing) {
  auto c = decompose(example("rem2_4c")).certificate;
  ASSERT_TRUE(c);
  // k[y,z]/(yz, y^2 - 2 z^2) is a different presentation of a connected sum; images y, z still
  // multiply to zero but the defining ideal differs
  auto Q2 = ring({"y", "z"}, {"y*z", "y^2 - 2*z^2"});
  EXPECT_FALSE(verify_certificate(Q2, *c).ok());
}

TEST(Phi, Values) {
  EXPECT_EQ(phi_correction(1, 1), -1);
  EXPECT_EQ(phi_correction(1, 3), 0);
  EXPECT_EQ(phi_correction(3, 1), 0);
  EXPECT_EQ(phi_correction(2, 2), 1);
  EXPECT_EQ(phi_correction(4, 2), 1);
}
