#include "charvar/braid.hpp"
#include "charvar/charvar.hpp"
#include "charvar/covers.hpp"
#include "charvar/dsl.hpp"

#include "doctest.h"

#include <map>
#include <random>

using namespace charvar;

namespace {

BraidWord bw(int strands, std::vector<std::pair<int, int>> letters) {
  BraidWord w;
  w.strands = strands;
  w.letters = std::move(letters);
  return w;
}

BraidWord random_braid(std::mt19937& rng, int strands, int len) {
  std::uniform_int_distribution<int> g(1, strands - 1), s(0, 1);
  BraidWord w;
  w.strands = strands;
  for (int i = 0; i < len; ++i) w.letters.push_back({g(rng), s(rng) ? 1 : -1});
  return w;
}

FreeWord random_word(std::mt19937& rng, int ngens, int len) {
  std::uniform_int_distribution<int> g(0, ngens - 1), s(0, 1);
  FreeWord w;
  for (int i = 0; i < len; ++i) w = wmul(w, {{g(rng), s(rng) ? 1 : -1}});
  return w;
}

std::map<std::string, int> depth_grid(const GroupPresentation& p, const Field& F) {
  AlexMatrix A = alexander_matrix(p);
  std::map<std::string, int> out;
  for (auto& a : F.units())
    for (auto& b : F.units()) {
      CharPoint xs = {a, b};
      if (is_trivial_point(F, xs) || !satisfies_constraints(A, F, xs)) continue;
      out[F.to_string(a) + "," + F.to_string(b)] = depth(A, F, xs);
    }
  return out;
}

}  // namespace

TEST_CASE("braid relations hold for the free-group action") {
  std::mt19937 rng(42);
  for (auto conv : {BraidConvention::Product, BraidConvention::Mirror}) {
    BraidWord lhs = bw(3, {{1, 1}, {2, 1}, {1, 1}});
    BraidWord rhs = bw(3, {{2, 1}, {1, 1}, {2, 1}});
    for (int it = 0; it < 60; ++it) {
      FreeWord w = random_word(rng, 3, 1 + it % 9);
      CHECK(braid_act(lhs, w, conv) == braid_act(rhs, w, conv));
    }
    BraidWord far_l = bw(4, {{1, 1}, {3, 1}});
    BraidWord far_r = bw(4, {{3, 1}, {1, 1}});
    for (int it = 0; it < 40; ++it) {
      FreeWord w = random_word(rng, 4, 1 + it % 9);
      CHECK(braid_act(far_l, w, conv) == braid_act(far_r, w, conv));
    }
    for (int it = 0; it < 40; ++it) {
      BraidWord beta = random_braid(rng, 3, 1 + it % 8);
      FreeWord w = random_word(rng, 3, 1 + it % 9);
      CHECK(braid_act(braid_mul(beta, braid_inv(beta)), w, conv) == w);
      BraidWord gamma = random_braid(rng, 3, 1 + it % 8);
      CHECK(braid_act(braid_mul(beta, gamma), w, conv) ==
            braid_act(gamma, braid_act(beta, w, conv), conv));
    }
  }
}

TEST_CASE("both conventions preserve the strand product") {
  std::mt19937 rng(7);
  FreeWord prod = {{0, 1}, {1, 1}, {2, 1}};
  for (auto conv : {BraidConvention::Product, BraidConvention::Mirror})
    for (int it = 0; it < 80; ++it)
      CHECK(braid_act(random_braid(rng, 3, 1 + it % 10), prod, conv) == prod);

  // ... but they are different automorphisms
  BraidWord s1 = bw(3, {{1, 1}});
  CHECK(braid_act(s1, {{0, 1}}, BraidConvention::Product) ==
        FreeWord{{0, 1}, {1, 1}, {0, -1}});
  CHECK(braid_act(s1, {{0, 1}}, BraidConvention::Mirror) == FreeWord{{1, 1}});
  CHECK(braid_act(s1, {{1, 1}}, BraidConvention::Product) == FreeWord{{0, 1}});

  CHECK_THROWS_AS(braid_act(bw(3, {{5, 1}}), prod), input_error);
  CHECK_THROWS_AS(braid_act(bw(3, {{0, 1}}), prod), input_error);
}

TEST_CASE("braid word combinators and DSL") {
  BraidWord c = braid_conj(bw(3, {{2, 1}}), bw(3, {{1, 1}}));
  CHECK(c.letters == std::vector<std::pair<int, int>>{{2, 1}, {1, 1}, {2, -1}});

  MonodromyData m = parse_monodromy(
      "strands: 3\nlabels: a1=x a2=x a3=y\nbraid: s2^2 * s1\nbraid: (s1 s2)^2\n");
  REQUIRE(m.braids.size() == 2);
  CHECK(m.braids[0].letters ==
        braid_conj(braid_pow(bw(3, {{2, 1}}), 2), bw(3, {{1, 1}})).letters);
  CHECK(m.braids[1].letters ==
        std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 1}, {2, 1}});
  CHECK(m.convention == BraidConvention::Product);
  CHECK(m.components == std::vector<std::string>{"x", "y"});

  MonodromyData mm = parse_monodromy("strands: 2\nlabels: a1=x a2=x\nconvention: mirror\n");
  CHECK(mm.convention == BraidConvention::Mirror);

  CHECK_THROWS_AS(parse_monodromy("strands: 1\n"), input_error);
  CHECK_THROWS_AS(parse_monodromy("strands: 3\nlabels: a1=x\n"), input_error);
  CHECK_THROWS_AS(parse_monodromy("strands: 3\nlabels: a1=x a2=x a3=y\nbraid: s3\n"),
                  input_error);
  CHECK_THROWS_AS(parse_monodromy("braid: s1\n"), input_error);
  CHECK_THROWS_AS(parse_monodromy("strands: 3\nlabels: a1=x a2=x a3=y\nwhat: 1\n"), input_error);
}

TEST_CASE("monodromy files load with asymptote and infinity data") {
  MonodromyData m1 = load_monodromy("data/table1.mon");
  CHECK(m1.strands == 3);
  CHECK(m1.gen_names == std::vector<std::string>{"a1", "a2", "a3"});
  CHECK(m1.gen_labels == std::vector<int>{0, 0, 1});
  CHECK(m1.components == std::vector<std::string>{"quartic", "conic"});
  REQUIRE(m1.braids.size() == 4);
  CHECK(m1.braids[0].letters == std::vector<std::pair<int, int>>(12, {2, 1}));
  CHECK(m1.conjugators.count(4) == 1);
  CHECK(m1.infinity_auto);

  // the infinity meridian is the inverse of b * a2 a1 a3 a2 a1
  FreeWord inf = infinity_meridian(m1, 4);
  FreeWord tail = {{1, 1}, {0, 1}, {2, 1}, {1, 1}, {0, 1}};
  CHECK(inf == winv(reduce(wmul(m1.conjugators.at(4), tail))));

  MonodromyData m4;
  m4.strands = 4;
  CHECK_THROWS_AS(infinity_meridian(m4, 0), input_error);

  MonodromyData m2 = load_monodromy("data/table2.mon");
  REQUIRE(m2.braids.size() == 4);
  CHECK(m2.conjugators.count(3) == 1);
}

TEST_CASE("monodromy presentations have the right abelianization") {
  for (const char* path : {"data/table1.mon", "data/table2.mon"}) {
    GroupPresentation p = zvk_presentation(load_monodromy(path));
    CHECK(p.ngens() == 3);
    AbelianStructure ab = abelianization_invariants(p);
    CHECK(ab.rank == 1);
    CHECK(ab.torsion == std::vector<Int>{2});
    AlexMatrix A = alexander_matrix(p);
    REQUIRE(A.constraints.size() == 1);
  }
}

TEST_CASE("depth grids of the monodromy presentations") {
  GroupPresentation t1 = zvk_presentation(load_monodromy("data/table1.mon"));
  GroupPresentation t2 = zvk_presentation(load_monodromy("data/table2.mon"));
  Field F3 = prime_field(3), F5 = prime_field(5);

  std::map<std::string, int> t1_f3 = {{"1,2", 0}, {"2,1", 0}, {"2,2", 0}};
  std::map<std::string, int> t1_f5 = {{"1,4", 0}, {"2,1", 0}, {"2,4", 0}, {"3,1", 0},
                                      {"3,4", 0}, {"4,1", 0}, {"4,4", 0}};
  CHECK(depth_grid(t1, F3) == t1_f3);
  CHECK(depth_grid(t1, F5) == t1_f5);

  std::map<std::string, int> t2_f3 = {{"1,2", 1}, {"2,1", 0}, {"2,2", 0}};
  std::map<std::string, int> t2_f5 = {{"1,4", 1}, {"2,1", 0}, {"2,4", 0}, {"3,1", 0},
                                      {"3,4", 0}, {"4,1", 0}, {"4,4", 0}};
  CHECK(depth_grid(t2, F3) == t2_f3);
  CHECK(depth_grid(t2, F5) == t2_f5);
}

TEST_CASE("published presentations disagree with the computed ones") {
  GroupPresentation t1 = zvk_presentation(load_monodromy("data/table1.mon"));
  GroupPresentation t2 = zvk_presentation(load_monodromy("data/table2.mon"));
  GroupPresentation c1 = load_presentation("data/c6_1.pres");
  GroupPresentation c2 = load_presentation("data/c6_2.pres");
  Field F3 = prime_field(3);

  // same abelianization everywhere ...
  for (auto* p : {&t1, &t2, &c1, &c2}) {
    AbelianStructure ab = abelianization_invariants(*p);
    CHECK(ab.rank == 1);
    CHECK(ab.torsion == std::vector<Int>{2});
  }

  // ... but the depth grids differ, in both pairings
  std::map<std::string, int> g_t1 = depth_grid(t1, F3), g_t2 = depth_grid(t2, F3);
  std::map<std::string, int> g_c1 = depth_grid(c1, F3), g_c2 = depth_grid(c2, F3);
  CHECK(g_c1.at("2,1") == 1);
  CHECK(g_c2 == std::map<std::string, int>{{"1,2", 0}, {"2,1", 0}, {"2,2", 0}});
  CHECK(g_t1 != g_c1);  // witness "2,1": 0 vs 1
  CHECK(g_t2 != g_c2);  // witness "1,2": 1 vs 0
  CHECK(g_t1.at("2,1") != g_c1.at("2,1"));
  CHECK(g_t2.at("1,2") != g_c2.at("1,2"));
  CHECK(g_t2 != g_c1);  // even the cross pairing fails: the depth-1 point differs
}
