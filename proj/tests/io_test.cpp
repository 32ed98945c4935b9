#include <gtest/gtest.h>

#include "schur/catalog.hpp"
#include "schur/io.hpp"

using namespace schur;

TEST(ParseInput, SymbolicSet) {
  auto in = parse_input(R"({"set": [1, 2, "x", "x+1", "x+2", "x+3"]})");
  const auto& s = std::get<ElementSet>(in);
  EXPECT_EQ(s.size(), 6u);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(s, catalog::one_two_x_interval(3));
}

TEST(ParseInput, ShorthandForms) {
  auto s = std::get<ElementSet>(parse_input(R"({"set": ["3+x", "x-2", "2x+1", "-x"]})"));
  EXPECT_TRUE(s.contains(GroupElement{3, 1}));
  EXPECT_TRUE(s.contains(GroupElement{-2, 1}));
  EXPECT_TRUE(s.contains(GroupElement{1, 2}));
  EXPECT_TRUE(s.contains(GroupElement{0, -1}));
}

TEST(ParseInput, Sequence) {
  auto in = parse_input(R"({"seq": [23,375,23,209,209,60,60,60,23,1,60,261,209,23]})");
  EXPECT_EQ(std::get<Sequence>(in), catalog::exotic_sequence());
  EXPECT_EQ(input_set(in).size(), 83u);
}

TEST(ParseInput, BigIntegers) {
  auto s = std::get<ElementSet>(parse_input(R"({"set": ["123456789012345678901234567890", 1]})"));
  EXPECT_EQ(s[1][0], Integer("123456789012345678901234567890"));
  auto j = to_json(s);
  EXPECT_EQ(j["set"][1][0], "123456789012345678901234567890");
}

TEST(ParseInput, Errors) {
  auto fails_at = [](const std::string& text, const std::string& where) {
    try {
      parse_input(text);
    } catch (const ParseError& e) {
      EXPECT_EQ(e.where(), where) << text;
      return;
    }
    ADD_FAILURE() << "no error for " << text;
  };
  fails_at(R"({"set": []})", "$.set");
  fails_at(R"({"set": [1, [1, 2]]})", "$.set");
  fails_at(R"({"set": [[1, 2], [1]]})", "$.set[1]");
  fails_at(R"({"set": [1, 2.5]})", "$.set[1]");
  fails_at(R"({"set": [1, "y"]})", "$.set[1]");
  fails_at(R"({"seq": [1], "set": [1]})", "$");
  fails_at(R"([1, 2])", "$");
  EXPECT_THROW(parse_input("{"), ParseError);
}

TEST(RoundTrip, SetsAndSequences) {
  for (const auto& text : {R"({"set":[[0,1],[1,0],[2,0],[3,1]]})", R"({"set":[[-4],[2],[7]]})", R"({"seq":[[1,0],[0,1],[1,0]]})"}) {
    auto a = parse_input(text);
    Json j = std::visit([](const auto& v) { return to_json(v); }, a);
    auto b = parse_input(j);
    EXPECT_EQ(a, b);
    EXPECT_EQ(j, Json::parse(text));
  }
}

TEST(Certificate, RoundTrip) {
  auto x = catalog::interval_with_x_interval(6, 13);
  auto c = Coloring::from_classes(x, catalog::one_to_six_classes(), 3);
  auto back = certificate_from_json(certificate_to_json(c), x);
  EXPECT_EQ(back.colors(), c.colors());
  EXPECT_THROW(certificate_from_json(Json{{"n", 2}}, x), ParseError);
  EXPECT_THROW(certificate_from_json(Json{{"n", 2}, {"classes", {{"x+99"}}}}, x), DomainError);
}

TEST(EdgeColoringJson, RoundTripAndErrors) {
  auto ec = pentagon_coloring();
  EXPECT_EQ(edge_coloring_from_json(to_json(ec)), ec);
  Json missing = to_json(ec);
  missing["edges"].erase(0);
  EXPECT_THROW(edge_coloring_from_json(missing), ParseError);
  Json bad = to_json(ec);
  bad["edges"][0][2] = 7;
  EXPECT_THROW(edge_coloring_from_json(bad), ParseError);
}

TEST(SearchRunJson, RoundTrip) {
  auto run = verify_L_lower(3, 4);
  auto back = search_run_from_json(to_json(run));
  EXPECT_EQ(to_json(back), to_json(run));
  EXPECT_THROW(search_run_from_json(Json{{"kind", "other"}}), ParseError);
}
