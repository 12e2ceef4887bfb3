#include "doctest.h"

#include "tabhom/errors.hpp"
#include "tabhom/io.hpp"
#include "tabhom/straighten.hpp"

#include <random>

using namespace tabhom;

namespace {

Tableau T(std::initializer_list<Multiset> rows) { return Tableau(std::vector<Multiset>(rows)); }

const Tableau A = T({{1, 2, 2, 3, 4}, {1, 3, 3, 3}});

Tableau random_tableau(std::mt19937& rng) {
  std::uniform_int_distribution<int> rows(0, 4), len(1, 4), value(1, 6);
  std::vector<Multiset> out;
  int width = 5;
  for (int r = rows(rng); r > 0; --r) {
    width = std::min(width, len(rng));
    std::vector<int> e(static_cast<std::size_t>(width));
    for (int& v : e) v = value(rng);
    out.push_back(Multiset::from_entries(e));
  }
  return Tableau(std::move(out));
}

}  // namespace

TEST_CASE("multisets and compositions") {
  CHECK(parse_multiset("{1,2,2}") == Multiset{1, 2, 2});
  CHECK(parse_multiset("2 1 2") == Multiset{1, 2, 2});
  CHECK(parse_multiset("1,2, 2") == Multiset{1, 2, 2});
  CHECK(parse_multiset("{}").empty());
  CHECK(parse_multiset("").empty());
  CHECK_THROWS_AS(parse_multiset("{1,2"), ParseError);
  CHECK_THROWS_AS(parse_multiset("0"), ParseError);
  CHECK_THROWS_AS(parse_multiset("1 x"), ParseError);
  CHECK(parse_composition("(5,4)") == Composition{5, 4});
  CHECK(parse_composition("2 3 0 1 1").parts() == std::vector<int>{2, 3, 0, 1, 1});
  CHECK_THROWS_AS(parse_composition("(5,4"), ParseError);
  CHECK_THROWS_AS(parse_composition("5,-4"), ParseError);
}

TEST_CASE("tableau text") {
  CHECK(parse_tableau("1 2 2 3 4 / 1 3 3 3") == A);
  CHECK(parse_tableau("1 2 2 3 4\n1 3 3 3\n") == A);
  CHECK(render_tableau_lines(A) == "1 2 2 3 4\n1 3 3 3\n");
  CHECK(parse_tableau(render_tableau_lines(A)) == A);
  CHECK(parse_tableau("") == Tableau());

  ParseNotes notes;
  CHECK(parse_tableau("2 1 / 1", {}, &notes) == T({{1, 2}, {1}}));
  CHECK(notes.warnings.size() == 1);
  CHECK_THROWS_AS(parse_tableau("2 1 / 1", {.strict = true}), ParseError);
  CHECK(parse_tableau("1 / 1 2").shape() == Composition{1, 2});
  CHECK_THROWS_AS(parse_tableau("1 a"), ParseError);
  CHECK_THROWS_AS(parse_tableau("1 0"), ParseError);

  const auto many = parse_tableaux("1 1\n2\n\n1 2\n1\n");
  REQUIRE(many.size() == 2);
  CHECK(many[0] == T({{1, 1}, {2}}));
  CHECK(many[1] == T({{1, 2}, {1}}));
}

TEST_CASE("tableau JSON") {
  const Json j = tableau_to_json(A);
  CHECK(j.at("shape") == Json::array({5, 4}));
  CHECK(j.at("rows") == Json::parse("[[1,2,2,3,4],[1,3,3,3]]"));
  CHECK(tableau_from_json(j) == A);
  CHECK(parse_tableau_any(j.dump()) == A);
  CHECK(parse_tableau_any("1 2 2 3 4 / 1 3 3 3") == A);
  CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"shape":[2],"rows":[[1]]})")), ParseError);
  CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"rows":[["a"]]})")), ParseError);
  CHECK_THROWS_AS(parse_tableau_any(R"({"rows": [[1, 2)"), ParseError);
  CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"rows":[[2,1]]})"), {.strict = true}), ParseError);
}

TEST_CASE("random tableau round trips") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Tableau t = random_tableau(rng);
    CHECK(parse_tableau(t.to_string()) == t);
    CHECK(parse_tableau(render_tableau_lines(t)) == t);
    CHECK(tableau_from_json(Json::parse(tableau_to_json(t).dump())) == t);
  }
}

TEST_CASE("linear combinations") {
  const LinComb c = semistandardize(A);
  CHECK(parse_lincomb(c.to_string()) == c);
  CHECK(parse_lincomb_any(c.to_string()) == c);
  CHECK(lincomb_from_json(lincomb_to_json(c)) == c);
  CHECK(parse_lincomb_any(lincomb_to_json(c).dump()) == c);
  CHECK(parse_lincomb("0").is_zero());
  CHECK(parse_lincomb("").is_zero());
  CHECK(parse_lincomb("1 : 1 2 / 1 2\n-1 : 1 2 / 1 2\n").is_zero());
  CHECK(lincomb_from_json(Json::parse(R"({"terms":[{"coeff":2,"rows":[[1],[2]]}]})")) ==
        LinComb::single(T({{1}, {2}}), LaurentPoly(2)));
  CHECK_THROWS_AS(parse_lincomb("1 2 / 1 2"), ParseError);
  CHECK_THROWS_AS(parse_lincomb("1 : 1 2 / 1 2\n1 : 1 1 / 2 2\n1 : 1 / 2"), ParseError);
  CHECK_THROWS_AS(parse_lincomb("q^ : 1 / 2"), ParseError);
  CHECK_THROWS_AS(lincomb_from_json(Json::parse(R"({"terms":[{"rows":[[1]]}]})")), ParseError);

  const Json special = lincomb_to_json(specialize(c, Rational(1, 2)));
  CHECK(special.at("terms").size() == 3);
  CHECK(special.at("shape") == Json::array({5, 4}));
  CHECK(special.at("type") == Json::array({2, 2, 4, 1}));
  CHECK(special.at("terms")[0].at("coeff") == "11/8");
}
