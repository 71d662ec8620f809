#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

TEST(Json, InvariantReportKeys) {
  auto j = to_json(example("ex3_2").invariants());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"length", "edim", "type", "loewy_length", "hilbert", "gorenstein", "stretched", "short",
                                            "complete_intersection"}));
  EXPECT_EQ(j["hilbert"], Json::parse("[1,3,3,4,4,2,1]"));
  EXPECT_EQ(j["complete_intersection"], true);
}

TEST(Json, OutputIsStable) {
  auto Q = example("ex2_3");
  auto a = to_json(decompose(Q), Q).dump(2);
  auto b = to_json(decompose(Q), Q).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(fnv1a_digest("abc"), fnv1a_digest("abc"));
  EXPECT_NE(fnv1a_digest("abc"), fnv1a_digest("abd"));
  EXPECT_EQ(fnv1a_digest(""), "fnv1a64:cbf29ce484222325");
}

TEST(Json, PresentationAndSeries) {
  auto j = to_json(ring({"x"}, {"x^3"}).presentation());
  EXPECT_EQ(j.dump(), R"({"field":"Q","vars":["x"],"ideal":["x^3"]})");
  EXPECT_EQ(to_json(PowerSeries::polynomial({1, 2, 3}, 2)).dump(), R"(["1","2","3"])");
}

TEST(Json, ReportLayout) {
  Report r;
  r.command = {"analyze"};
  r.input_digest = fnv1a_digest("x");
  r.results = Json::object();
  auto j = r.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "input_digest", "results", "warnings", "version"}));
  EXPECT_TRUE(characteristic_two_warning(FieldSpec::prime(3)).empty());
  EXPECT_FALSE(characteristic_two_warning(FieldSpec::prime(2)).empty());
}
