#include <gtest/gtest.h>

#include "g2forge/io.hpp"
#include "g2forge/random.hpp"

using namespace g2forge;
using json = nlohmann::json;

namespace {

json term(std::vector<int> idx, const char* num, const char* den = "1") {
  return {{"indices", idx}, {"coeff", {{"num", num}, {"den", den}}}};
}

std::string parse_error(const json& j) {
  try {
    (void)io::form_from_json(j);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Json, ScalarRoundTrip) {
  const QuadExt q(Rational(-3, 4), Rational(1, 6));
  const json j = io::to_json(q);
  EXPECT_EQ(j["num"], "-3");
  EXPECT_EQ(j["irr_den"], "6");
  EXPECT_EQ(io::quadext_from_json(j), q);
  EXPECT_EQ(io::to_json(Rational(5)), json({{"num", "5"}, {"den", "1"}}));
  EXPECT_THROW(io::rational_from_json(j), ParseError);
  EXPECT_THROW(io::quadext_from_json(json{{"num", 1}, {"den", "1"}}), ParseError);
  EXPECT_THROW(io::quadext_from_json(json{{"num", "1x"}, {"den", "1"}}), Error);
}

TEST(Json, FormRoundTrip) {
  Sampler rng(81, "json");
  for (int g = 0; g <= kDim; ++g) {
    const Form<Rational> f = rng.form(g);
    EXPECT_EQ(io::form_from_json(io::to_json(f)), f);
  }
}

TEST(Json, FormRejectsMalformedIndices) {
  EXPECT_NE(parse_error({{"grade", 2}, {"terms", {term({2, 1}, "1")}}}).find("strictly increasing"),
            std::string::npos);
  EXPECT_NE(parse_error({{"grade", 2}, {"terms", {term({1, 1}, "1")}}}).find("duplicate index"), std::string::npos);
  EXPECT_NE(parse_error({{"grade", 2}, {"terms", {term({1, 2}, "1"), term({1, 2}, "3")}}}).find("terms[1]"),
            std::string::npos);
  EXPECT_NE(parse_error({{"grade", 2}, {"terms", {term({1, 8}, "1")}}}).find("outside"), std::string::npos);
  EXPECT_NE(parse_error({{"grade", 3}, {"terms", {term({1, 2}, "1")}}}).find("indices in a grade-3"),
            std::string::npos);
  EXPECT_FALSE(parse_error({{"grade", 9}, {"terms", json::array()}}).empty());
  EXPECT_FALSE(parse_error({{"terms", json::array()}}).empty());
  EXPECT_FALSE(parse_error({{"grade", 1}, {"terms", {term({1}, "1", "0")}}}).empty());
}

TEST(Json, Su3Element) {
  const Su3Element<Rational> xi({1, 2, -3}, {0, 1, 0, 0, 0, 5});
  EXPECT_EQ(io::su3_from_json(io::to_json(xi)), xi);
  json bad = io::to_json(xi);
  bad["v"][2] = {{"num", "0"}, {"den", "1"}};
  EXPECT_THROW(io::su3_from_json(bad), ValidationError);
  bad = io::to_json(xi);
  bad["x"].erase(0);
  EXPECT_THROW(io::su3_from_json(bad), ParseError);
}

TEST(Json, SplitReport) {
  const auto& frame = G2Frame<Rational>::instance();
  const json j = io::to_json(frame.project3(Form<Rational>::from_indices({1, 2, 3})));
  EXPECT_TRUE(j.contains("1") && j.contains("7") && j.contains("27"));
  EXPECT_EQ(j["7"]["terms"].size(), 0u);
}
