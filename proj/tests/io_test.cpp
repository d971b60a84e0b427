#include <doctest.h>

#include <random>

#include "simplex_lattice/io.hpp"

using namespace simplex_lattice;

namespace {

std::size_t occurrences(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = haystack.find(needle); at != std::string::npos; at = haystack.find(needle, at + 1)) ++n;
  return n;
}

std::string error_of(const std::string& bytes) {
  try {
    (void)read_labeling(bytes);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

Labeling random_labeling(const Params& params, std::mt19937& rng) {
  std::uniform_int_distribution<int> color(1, params.k());
  std::vector<Color> colors(lattice_size(params));
  for (auto& c : colors) c = Color{color(rng)};
  return Labeling(params, std::move(colors), ExternalRule{"random"});
}

}  // namespace

TEST_CASE("write_labeling JSON layout") {
  const auto doc = Json::parse(write_labeling(label_all(Params(3, 4), IdentityRule{}), Format::Json));
  CHECK(doc["k"] == 3);
  CHECK(doc["q"] == 4);
  CHECK(doc["rule"] == "identity");
  REQUIRE(doc["labels"].size() == 15);
  CHECK(doc["labels"].front()["v"] == Json::array({0, 0}));
  CHECK(doc["labels"].front()["color"] == 3);
  CHECK(doc["labels"].back()["v"] == Json::array({4, 4}));
  CHECK(doc["labels"].back()["color"] == 1);
  std::vector<std::string> keys;
  for (const auto& [key, value] : doc.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"k", "q", "rule", "version", "labels"});
}

TEST_CASE("write_labeling CSV layout") {
  const auto text = write_labeling(label_all(Params(3, 4), IdentityRule{}), Format::Csv);
  CHECK(text.starts_with("# k=3; q=4; rule=identity; version="));
  CHECK(text.find("\nv1,v2,color\n0,0,3\n") != std::string::npos);
  CHECK(text.ends_with("\n4,4,1\n"));
  CHECK(occurrences(text, "\n") == 17);

  const auto k5 = write_labeling(label_all(Params(5, 6), IdentityRule{}), Format::Csv);
  CHECK(k5.find("\nv1,v2,v3,v4,color\n") != std::string::npos);
}

TEST_CASE("q = 0 instance has one row") {
  const Labeling single(Params(3, 0), {Color{1}}, ExternalRule{});
  CHECK(Json::parse(write_labeling(single, Format::Json))["labels"].size() == 1);
  CHECK(read_labeling(write_labeling(single, Format::Csv)) == single);
}

TEST_CASE("round trip for both formats") {
  std::mt19937 rng(20261014);
  for (int k = 3; k <= 5; ++k) {
    for (int q = 1; q <= 6; ++q) {
      const Params params(k, q);
      const auto labeling = random_labeling(params, rng);
      for (Format format : {Format::Json, Format::Csv}) {
        const auto text = write_labeling(labeling, format);
        const auto back = read_labeling(text);
        CHECK(back == labeling);
        CHECK(std::holds_alternative<ExternalRule>(back.rule()));
        CHECK(std::get<ExternalRule>(back.rule()).origin == "external:random");
        CHECK(write_labeling(back, format) == text);
      }
    }
  }
  const auto l = label_all(Params(4, 5), PiRule{Permutation::parse("2,3,1")});
  CHECK(read_labeling(write_labeling(l, Format::Json)) == l);
  CHECK(read_labeling(write_labeling(l, Format::Csv)) == l);
}

TEST_CASE("read_labeling accepts rows in any order") {
  const std::string csv = "# k=3; q=1; rule=hand\nv1,v2,color\n1,1,1\n0,0,3\n0,1,2\n";
  const auto l = read_labeling(csv);
  CHECK(l.at_rank(0) == Color{3});
  CHECK(l.at_rank(2) == Color{1});
  CHECK(std::get<ExternalRule>(l.rule()).origin == "hand");
}

TEST_CASE("read_labeling errors name the row") {
  const std::string header = "# k=3; q=1\nv1,v2,color\n";
  CHECK(error_of(header + "0,0,3\n0,1,0\n1,1,1\n") == "row 2: color out of range: 0 not in [1, 3]");
  CHECK(error_of(header + "0,0,3\n0,1,2\n").starts_with("wrong row count"));
  CHECK(error_of(header + "0,0,3\n0,0,2\n1,1,1\n") == "row 2: duplicate vertex (0,0)");
  CHECK(error_of(header + "0,0,3\n1,0,2\n1,1,1\n").starts_with("row 2: malformed row"));
  CHECK(error_of(header + "0,0,3\n0,x,2\n1,1,1\n").starts_with("row 2: malformed row"));
  CHECK(error_of(header + "0,0\n").starts_with("row 1: malformed row"));
  CHECK(error_of("# q=1\nv1,v2,color\n").starts_with("bad header"));
  CHECK(error_of("# k=3; q=1\nv1,color\n").starts_with("bad header"));
  CHECK(error_of("# k=2; q=1\nv1,color\n").starts_with("bad header"));

  CHECK(error_of(R"({"k":3,"q":1,"labels":[{"v":[0,0],"color":3},{"v":[0,1],"color":4},{"v":[1,1],"color":1}]})") ==
        "row 2: color out of range: 4 not in [1, 3]");
  CHECK(error_of(R"({"k":3,"q":1,"labels":[{"v":[0,0],"color":3}]})").starts_with("wrong row count"));
  CHECK(error_of(R"({"k":3,"q":1,"labels":[{"v":[0,0]}]})").starts_with("row 1: malformed row"));
  CHECK(error_of(R"({"k":3,"labels":[]})").starts_with("bad header"));
  CHECK(error_of("{not json").starts_with("invalid JSON"));
  CHECK(error_of("   ") == "empty labeling file");
}

TEST_CASE("render_svg") {
  const auto svg = render_svg(label_all(Params(3, 4), IdentityRule{}));
  CHECK(svg.starts_with("<?xml"));
  CHECK(occurrences(svg, "<circle") == 15);
  CHECK(occurrences(svg, "<polygon") == 16);
  CHECK(svg == render_svg(label_all(Params(3, 4), IdentityRule{})));

  std::mt19937 rng(7);
  const auto small = render_svg(random_labeling(Params(3, 2), rng));
  CHECK(occurrences(small, "<circle") == 6);
  CHECK(occurrences(small, "<polygon") == 4);

  for (int q = 1; q <= 8; ++q) {
    const auto s = render_svg(random_labeling(Params(3, q), rng));
    CHECK(occurrences(s, "<circle") == lattice_size(Params(3, q)));
    CHECK(occurrences(s, "<polygon") == static_cast<std::size_t>(q * q));
  }
  CHECK_THROWS_AS(render_svg(label_all(Params(4, 5), IdentityRule{})), UnsupportedDimension);
}

TEST_CASE("report JSON caps lists but keeps exact counts") {
  const Labeling all_ones(Params(3, 30), std::vector<Color>(lattice_size(Params(3, 30)), Color{1}),
                          ExternalRule{});
  const auto report = check_labeling(all_ones, std::nullopt, 2);
  const auto doc = report_to_json(report, 5);
  CHECK(doc["sperner"]["violation_count"] == 31);
  CHECK(doc["sperner"]["violations"].size() == 5);
  CHECK(doc["passed"] == false);
  CHECK(report_to_json(report)["sperner"]["violations"].size() == 31);
}
