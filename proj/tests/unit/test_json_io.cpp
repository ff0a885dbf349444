#include "corpus.hpp"

#include "phk/errors.hpp"
#include "phk/json_io.hpp"

#include <gtest/gtest.h>

#include <string>

using namespace phk;
using phk::testing::v;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return {n, d}; }

std::string error_message(const std::string &text) {
  try {
    (void)json::set_from(json::parse(text, "test.json"));
  } catch (const InputError &e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST(JsonScalars, RationalsAsStrings) {
  EXPECT_EQ(json::to_json(q(-3, 4)).dump(), "\"-3/4\"");
  EXPECT_EQ(json::to_json(v({1, 2})).dump(), "[\"1\",\"2\"]");
  EXPECT_EQ(json::to_json(ExtValue::pos_inf()).dump(), "\"+inf\"");
  EXPECT_EQ(json::rational_from(json::Json(7), "/x"), q(7));
  EXPECT_EQ(json::rational_from(json::Json("5/10"), "/x"), q(1, 2));
  EXPECT_THROW(json::rational_from(json::Json(1.5), "/x"), InputError);
  EXPECT_THROW(json::vec_from(json::Json::parse("[\"1\"]"), "/v", 2), InputError);
}

TEST(JsonSets, RoundTripOnCorpus) {
  for (const auto &[name, c] : phk::testing::corpus(30, 50)) {
    auto back = json::set_from(json::to_json(c));
    EXPECT_EQ(back.carrier(), c.carrier()) << name;
    EXPECT_EQ(back.strict_flags(), c.strict_flags()) << name;
  }
}

TEST(JsonSets, Shorthands) {
  auto e = json::set_from(json::parse(R"({"empty": true, "dim": 2})"));
  EXPECT_TRUE(e.is_empty());
  EXPECT_EQ(e.dim(), 2u);
  EXPECT_EQ(json::set_from(json::parse(R"({"empty": true})")).dim(), 1u);
  auto s = json::set_from(json::parse(R"({"space": 3})"));
  EXPECT_TRUE(s.carrier().is_space());
  EXPECT_EQ(s.dim(), 3u);
  auto back = json::set_from(json::to_json(e));
  EXPECT_TRUE(back.is_empty());
}

TEST(JsonSets, IntegerEntriesAccepted) {
  auto c = json::set_from(json::parse(R"({"dim": 1, "rows": [{"normal": [1], "offset": 1}]})"));
  EXPECT_TRUE(contains(c, v({1})));
  EXPECT_FALSE(contains(c, v({2})));
}

TEST(JsonSets, Errors) {
  EXPECT_NE(error_message(R"({"dim": 1, "rows": [{"normal": ["1"], "offset": "1",}]})")
                .find("test.json:1:"),
            std::string::npos);
  EXPECT_NE(error_message("{\n\"dim\": 1,\n\"rows\": [}").find("test.json:3:"), std::string::npos);
  EXPECT_FALSE(error_message(R"({"dim": 1, "rows": [{"normal": ["0"], "offset": "1"}]})").empty());
  EXPECT_FALSE(error_message(R"({"dim": 2, "rows": [{"normal": ["1"], "offset": "1"}]})").empty());
  EXPECT_FALSE(error_message(R"({"rows": []})").empty());
  EXPECT_FALSE(error_message(R"({"dim": 1, "rows": [{"normal": ["1"], "offset": "1/0"}]})").empty());
  // x < 0 and x ≥ 0: an empty row system is not a valid set.
  EXPECT_THROW(json::set_from(json::parse(
                   R"({"dim": 1, "rows": [{"normal": ["1"], "offset": "0", "strict": true},
                                          {"normal": ["-1"], "offset": "0"}]})")),
               InvalidSet);
}

TEST(JsonGraphs, RoundTrip) {
  MonotoneGraph g(2, {{v({0, 1}), v({2, 3})}, {Vec{q(1, 2), q(0)}, v({-1, 0})}});
  auto back = json::graph_from(json::to_json(g));
  EXPECT_EQ(back.pairs(), g.pairs());
  EXPECT_THROW(json::graph_from(json::parse(R"({"dim": 1, "pairs": [{"a": ["0"]}]})")), InputError);
}

TEST(JsonContactSets, PointsAndSets) {
  auto pts = json::contact_set_from(json::parse(R"({"points": [["0", "0"], ["1", "1/2"]]})"), 2);
  ASSERT_TRUE(std::holds_alternative<std::vector<Vec>>(pts));
  EXPECT_EQ(std::get<std::vector<Vec>>(pts).size(), 2u);
  auto set = json::contact_set_from(json::parse(R"({"space": 2})"), 2);
  EXPECT_TRUE(std::holds_alternative<PartiallyOpenPolyhedron>(set));
  EXPECT_THROW(json::contact_set_from(json::parse(R"({"points": [["0"]]})"), 2), InputError);
}

TEST(JsonReports, CertificateFields) {
  SeparationCertificate cert{v({1}), v({1}), q(1)};
  auto j = json::to_json(cert);
  EXPECT_EQ(j.dump(), R"({"nstar":["1"],"supportPoint":["1"],"margin":"1"})");
  auto hull = json::to_json(ClosedPolyhedron(1, {{v({1}), q(1)}}));
  EXPECT_EQ(hull.dump(), R"({"dim":1,"rows":[{"normal":["1"],"offset":"1"}]})");
}
