#include "charvar/dsl.hpp"
#include "charvar/word.hpp"

#include "doctest.h"

using namespace charvar;

namespace {
FreeWord w(std::initializer_list<std::pair<int, int>> ls) { return FreeWord(ls); }
}  // namespace

TEST_CASE("free reduction cancels adjacent inverses") {
  CHECK(reduce(w({{0, 1}, {0, -1}})).empty());
  CHECK(reduce(w({{0, 1}, {1, 1}, {1, -1}, {0, -1}})).empty());
  CHECK(reduce(w({{0, 2}, {0, -1}})) == w({{0, 1}}));
  // cancellation cascades through merged syllables
  CHECK(reduce(w({{0, 1}, {1, -2}, {1, 2}, {0, 1}})) == w({{0, 2}}));
}

TEST_CASE("word algebra identities") {
  FreeWord a = w({{0, 1}}), b = w({{1, 1}});
  CHECK(wmul(a, winv(a)).empty());
  CHECK(winv(wmul(a, b)) == wmul(winv(b), winv(a)));
  CHECK(wpow(a, 3) == w({{0, 3}}));
  CHECK(wpow(wmul(a, b), -1) == winv(wmul(a, b)));
  // x^y = y x y^-1
  CHECK(wconj(a, b) == reduce(wmul(wmul(b, a), winv(b))));
  CHECK(wcomm(a, b) == reduce(wmul(wmul(a, b), wmul(winv(a), winv(b)))));
  CHECK(wlen(wcomm(a, b)) == 4);
}

TEST_CASE("exponent vectors abelianize words") {
  FreeWord u = w({{0, 2}, {1, -1}, {0, 1}});
  auto v = exponent_vector(u, 3);
  CHECK(v[0] == 3);
  CHECK(v[1] == -1);
  CHECK(v[2] == 0);
  CHECK(exponent_vector(wcomm(w({{0, 1}}), w({{1, 1}})), 2) == std::vector<Int>{0, 0});
}

TEST_CASE("presentation parser: generators, components, relator sugar") {
  GroupPresentation p = parse_presentation(
      "# comment\n"
      "gens: e1@conic e2@quartic\n"
      "rel: [e2, e1^2]\n"
      "rel: (e1 e2)^2 = (e2 e1)^2\n");
  CHECK(p.ngens() == 2);
  CHECK(p.nrels() == 2);
  CHECK(p.ncomponents() == 2);
  CHECK(p.components[0] == "conic");
  CHECK(p.components[1] == "quartic");
  CHECK(p.rels[0] == reduce(wcomm(w({{1, 1}}), w({{0, 2}}))));
  FreeWord lhs = wpow(wmul(w({{0, 1}}), w({{1, 1}})), 2);
  FreeWord rhs = wpow(wmul(w({{1, 1}}), w({{0, 1}})), 2);
  CHECK(p.rels[1] == reduce(wmul(lhs, winv(rhs))));
  CHECK(p.meridian_presentation());
}

TEST_CASE("presentation parser: conjugation suffix and bare components") {
  GroupPresentation p = parse_presentation(
      "gens: a b\n"
      "rel: a^(b a) = a\n");
  CHECK(p.ncomponents() == 2);  // unlabeled generators get their own component
  FreeWord inner = wconj(w({{0, 1}}), wmul(w({{1, 1}}), w({{0, 1}})));
  CHECK(p.rels[0] == reduce(wmul(inner, winv(w({{0, 1}})))));
}

TEST_CASE("presentation parser rejects malformed input") {
  CHECK_THROWS_AS(parse_presentation("rel: a\n"), parse_error);
  CHECK_THROWS_AS(parse_presentation("gens: a a\n"), parse_error);
  CHECK_THROWS_AS(parse_presentation("gens: a\nrel: b\n"), parse_error);
  CHECK_THROWS_AS(parse_presentation("gens: a\nwhat: a\n"), parse_error);
  CHECK_THROWS_AS(parse_presentation("gens: a\nrel: a )\n"), parse_error);
  // error positions are reported
  try {
    parse_presentation("gens: a\nrel: b\n");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("undeclared") != std::string::npos);
  }
}

TEST_CASE("label relations record torsion constraints") {
  // projective sextic shape: relator with component exponents (4,2)
  GroupPresentation p = parse_presentation(
      "gens: a1@quartic a3@conic\n"
      "rel: [a3, a1^2]\n"
      "rel: a3 a1 a3 a1^3\n");
  auto lr = p.label_relations();
  REQUIRE(lr.size() == 2);
  CHECK(lr[0] == std::vector<Int>{0, 0});  // the commutator dies
  CHECK(lr[1] == std::vector<Int>{4, 2});
  CHECK_FALSE(p.meridian_presentation());
}
