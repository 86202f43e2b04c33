#include <doctest.h>

#include "rexcalc/serialize.hpp"

using namespace rexcalc;

TEST_CASE("element json") {
  const BSElement e = parse_element_spec({1, 3, 2, 3, 1}, 4, "1;1;1;x3;1;1");
  const json j = to_json(e);
  CHECK(j["schema"] == kElementSchema);
  CHECK(j["word"] == json::array({1, 3, 2, 3, 1}));
  CHECK(j["rank"] == 4);
  REQUIRE(j["entries"].size() == 4);
  CHECK(j["entries"][0]["mask"] == 0);
  CHECK(j["entries"][0]["polynomial"] == "x1 + x2");
  CHECK(j.dump() ==
        R"({"schema":"rexcalc.element/1","word":[1,3,2,3,1],"rank":4,"entries":[{"mask":0,"polynomial":"x1 + x2"},)"
        R"({"mask":1,"polynomial":"-1"},{"mask":2,"polynomial":"1"},{"mask":4,"polynomial":"-1"}]})");
  CHECK(element_from_json(j) == e);
  CHECK(element_from_json(json::parse(j.dump())) == e);
  CHECK_THROWS_AS(element_from_json(json{{"word", {1}}}), InvalidArgument);
}

TEST_CASE("element specs") {
  CHECK(parse_element_spec({1}, 3, "1;x2") == from_tensor({1}, 3, std::vector<Polynomial>{Polynomial::one(3), Polynomial::variable(3, 2)}));
  CHECK(parse_element_spec({}, 2, "x1^2") == left_mul(Polynomial::parse(2, "x1^2"), BSElement::one({}, 2)));
  CHECK_THROWS_AS(parse_element_spec({1, 2}, 3, "1;1"), InvalidArgument);
  CHECK_THROWS_AS(parse_element_spec({1}, 3, "1;y"), InvalidArgument);
}

TEST_CASE("matrix json") {
  const MorphismMatrix m = edge_matrix(BraidMove::up(0, 1), {1, 2, 1}, 3);
  const json j = to_json(m);
  CHECK(j["schema"] == kMatrixSchema);
  CHECK(j["domain"] == json::array({1, 2, 1}));
  CHECK(j["codomain"] == json::array({2, 1, 2}));
  CHECK(j["entries"].size() == m.nonzeros());
  // Sorted by column, then row.
  for (std::size_t k = 1; k < j["entries"].size(); ++k) {
    const auto &a = j["entries"][k - 1], &b = j["entries"][k];
    CHECK(std::pair(a["col"].get<int>(), a["row"].get<int>()) < std::pair(b["col"].get<int>(), b["row"].get<int>()));
  }
  CHECK(j["entries"][0] == json{{"row", 0}, {"col", 0}, {"polynomial", "1"}});
}

TEST_CASE("graph json and text") {
  const RexGraph g = build_rex_graph(parse_word("12321"));
  const json jg = to_json(g);
  CHECK(jg["schema"] == kGraphSchema);
  CHECK(jg["kind"] == "expanded");
  CHECK(jg["vertices"].size() == 6);
  CHECK(jg["edges"].size() == 6);
  CHECK(jg["edges"][0]["from"] == "12321");
  CHECK(jg["edges"][0]["kind"] == "adjacent");

  const ConflatedGraph c = build_conflated(g);
  const json jc = to_json(c);
  CHECK(jc["kind"] == "conflated");
  CHECK(jc["source"] == "12321");
  CHECK(jc["sink"] == "32123");
  CHECK(jc["vertices"][1]["members"] == json::array({"13213", "13231", "31213", "31231"}));
  CHECK(jc["edges"][1]["via"] == json::array({"31213", "32123"}));

  CHECK(to_text(c) ==
        "conflated graph, 3 vertices, 2 edges\n"
        "  12321 {12321}\n"
        "  13213 {13213,13231,31213,31231}\n"
        "  32123 {32123}\n"
        "  12321 -> 13213\n"
        "  13213 -> 32123\n");
  CHECK(to_text(g).rfind("expanded graph, 6 vertices, 4 distant and 2 adjacent edges\n", 0) == 0);
}

TEST_CASE("verdict json") {
  const Word w = parse_word("12321");
  const ConflatedGraph c = build_conflated(build_rex_graph(w));
  const FpcVerdict v = check_fpc(w, 5);
  const json j = to_json(c, v);
  CHECK(j["schema"] == kVerdictSchema);
  CHECK(j["element"] == "12321");
  CHECK(j["bound"] == 5);
  CHECK(j["holds"] == false);
  CHECK(j["counterexample"]["p"] == json::array({"13213", "12321", "13213", "32123", "13213"}));
  CHECK(j["counterexample"]["column"] == 1);
  CHECK(element_from_json(j["counterexample"]["image_p"]) == v.counterexample->image_p);

  const FpcVerdict ok = check_fpc(parse_word("23121"), 5);
  CHECK(to_json(build_conflated(build_rex_graph(parse_word("23121"))), ok)["counterexample"].is_null());
}
