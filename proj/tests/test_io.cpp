#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "ruffles/io.hpp"
#include "ruffles/verify.hpp"
#include "ruffles/worked_examples.hpp"

#include <sstream>

using namespace ruffles;

TEST_CASE("word literals") {
  const RadixWord w = parse_word("2:1,1,0,1,0");
  CHECK(w == make_word(2, {1, 1, 0, 1, 0}));
  std::ostringstream os;
  os << w;
  CHECK(os.str() == "2:1,1,0,1,0");

  CHECK_THROWS_AS(parse_word("1,1,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("2:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("2:1,2,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x:1,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("2:1,a"), std::invalid_argument);
}

TEST_CASE("directed word literals") {
  const DirectedWord d = parse_directed_word("down:2:1,0");
  CHECK(d.dir == Direction::down);
  CHECK(d.word == make_word(2, {1, 0}));
  CHECK(parse_directed_word("up:3:0,2,1").dir == Direction::up);
  CHECK_THROWS_AS(parse_directed_word("2:1,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_directed_word("sideways:2:1,0"), std::invalid_argument);
}

TEST_CASE("integer lists and tuples") {
  CHECK(parse_int_list("3,5,1,2,4") == std::vector<int>{3, 5, 1, 2, 4});
  CHECK_THROWS_AS(parse_int_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_int_list("1,,2"), std::invalid_argument);
  CHECK(format_tuple({3, 4, 1, 5, 2}) == "(3,4,1,5,2)");
}

TEST_CASE("structure table rendering") {
  const auto table = classify_sym(3, "rising");
  const auto out = structure_constants(
      table, [](const Permutation& p, const Permutation& q) { return compose(p, q); });
  REQUIRE(out.ok());

  const std::string js = render_structure(*out.table, 3, OutputFormat::json);
  const auto j = nlohmann::json::parse(js);
  CHECK(j["n"] == 3);
  CHECK(j["statistic"] == "rising");
  REQUIRE(j["classes"].size() == 3);
  CHECK(j["classes"][0]["label"] == "1");
  CHECK(j["classes"][0]["size"] == 1);
  CHECK(j["classes"][1]["size"] == 4);
  for (const auto& c : j["constants"]) CHECK(c["value"].get<std::int64_t>() > 0);

  const std::string csv = render_structure(*out.table, 3, OutputFormat::csv);
  CHECK(csv.rfind("a,b,c,value\n", 0) == 0);

  const std::string text = render_structure(*out.table, 3, OutputFormat::text);
  CHECK(text.find("statistic rising") != std::string::npos);

  // renders are stable byte streams
  CHECK(render_structure(*out.table, 3, OutputFormat::json) == js);
}

TEST_CASE("restructure rendering") {
  const auto source = classify_words(words_up_to_radix(3, 2), "hand");
  const auto target = classify_sym(3, "rising");
  const auto out = restructure(source, target, [](const RadixWord& w) { return riffle(w); });
  REQUIRE(out.ok());
  const std::string js = render_restructure(*out.matrix, 3, "riffle", OutputFormat::json);
  const auto j = nlohmann::json::parse(js);
  CHECK(j["map"] == "riffle");
  CHECK(j["source_statistic"] == "hand");
  CHECK(j["target_statistic"] == "rising");
  CHECK(j["triangular"] == true);
  CHECK(j["diagonal"] == nlohmann::json::array({1, 1}));
  CHECK(j["unhit_columns"].size() == 1);

  const std::string csv = render_restructure(*out.matrix, 3, "riffle", OutputFormat::csv);
  CHECK(csv.rfind("row,col,value\n", 0) == 0);
}

TEST_CASE("worked example replay passes, and the sabotage self-test fails") {
  std::ostringstream quiet;
  CHECK(run_worked_examples(quiet) == 0);
  std::ostringstream quiet2;
  CHECK(run_worked_examples(quiet2, /*sabotage=*/true) >= 1);
}

TEST_CASE("format parsing") {
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("text") == OutputFormat::text);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
