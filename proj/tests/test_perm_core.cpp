#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "torsor/errors.hpp"
#include "torsor/finite_group.hpp"
#include "torsor/json_io.hpp"

using namespace torsor;

namespace {

GroupPtr s3() {
  return make_group("S3", 3, {Permutation({1, 2, 0}), Permutation({1, 0, 2})});
}

GroupPtr d5() {
  return make_group("D5", 5, {Permutation({1, 2, 3, 4, 0}), Permutation({0, 4, 3, 2, 1})});
}

GroupPtr d4() {
  return make_group("D4", 4, {Permutation({1, 2, 3, 0}), Permutation({2, 1, 0, 3})});
}

GroupPtr c4() { return make_group("C4", 4, {Permutation({1, 2, 3, 0})}); }

}  // namespace

TEST_CASE("permutation composition matches the pointwise oracle") {
  Permutation a({1, 2, 0});
  Permutation b({1, 0, 2});
  Permutation ab = a.then(b);
  CHECK(ab.images() == oracles::compose_images(a.images(), b.images()));
  CHECK(a.then(a.inverse()).is_identity());
}

TEST_CASE("permutation rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), ParseError);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), ParseError);
}

TEST_CASE("closure orders match the brute-force oracle") {
  CHECK(s3()->order() == static_cast<int>(oracles::brute_force_closure({{1, 2, 0}, {1, 0, 2}}).size()));
  CHECK(s3()->order() == 6);
  CHECK(d5()->order() == static_cast<int>(
                             oracles::brute_force_closure({{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}).size()));
  CHECK(d5()->order() == 10);
  GroupPtr trivial = make_group("C1", 3, {Permutation(3)});
  CHECK(trivial->order() == 1);
}

TEST_CASE("group multiplication agrees with the permutation oracle") {
  GroupPtr G = s3();
  for (ElementId a = 0; a < G->order(); ++a) {
    CHECK(G->mul(0, a) == a);
    CHECK(G->mul(a, G->inv(a)) == 0);
    for (ElementId b = 0; b < G->order(); ++b) {
      ElementId prod = G->mul(a, b);
      CHECK(G->element(prod).images() ==
            oracles::compose_images(G->element(a).images(), G->element(b).images()));
    }
  }
  // spec example: a 3-cycle followed by a transposition is a transposition
  ElementId cyc = G->id_of(Permutation({1, 2, 0}));
  ElementId swap01 = G->id_of(Permutation({1, 0, 2}));
  Permutation expected =
      Permutation({1, 2, 0}).then(Permutation({1, 0, 2}));
  CHECK(G->mul(cyc, swap01) == G->id_of(expected));
}

TEST_CASE("associativity and inverse law on random triples") {
  GroupPtr G = d5();
  std::mt19937 rng(7);
  std::uniform_int_distribution<ElementId> pick(0, G->order() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    ElementId a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(G->mul(G->mul(a, b), c) == G->mul(a, G->mul(b, c)));
    CHECK(G->mul(a, G->inv(a)) == 0);
    CHECK(G->mul(G->inv(a), a) == 0);
  }
}

TEST_CASE("element enumeration is deterministic") {
  std::string text = read_file("catalog/d7.group.json");
  GroupPtr a = parse_group(text);
  GroupPtr b = parse_group(text);
  REQUIRE(a->order() == b->order());
  for (ElementId i = 0; i < a->order(); ++i) CHECK(a->element(i) == b->element(i));
  for (ElementId i = 0; i < a->order(); ++i)
    for (ElementId j = 0; j < a->order(); ++j) CHECK(a->mul(i, j) == b->mul(i, j));
}

TEST_CASE("center") {
  CHECK(s3()->center() == std::vector<ElementId>{0});
  GroupPtr C4 = c4();
  CHECK(static_cast<int>(C4->center().size()) == C4->order());  // abelian
  GroupPtr D4 = d4();
  std::vector<ElementId> z = d4()->center();
  CHECK(z.size() == 2);  // exhaustive commutation oracle below agrees
  int count = 0;
  for (ElementId cand = 0; cand < D4->order(); ++cand) {
    bool central = true;
    for (ElementId x = 0; x < D4->order(); ++x)
      central = central && D4->mul(cand, x) == D4->mul(x, cand);
    if (central) ++count;
  }
  CHECK(count == 2);
  // |Z| divides |G| and the center is closed
  CHECK(D4->order() % static_cast<int>(z.size()) == 0);
  for (ElementId a : z)
    for (ElementId b : z) {
      CHECK(std::find(z.begin(), z.end(), D4->mul(a, b)) != z.end());
      CHECK(std::find(z.begin(), z.end(), D4->inv(a)) != z.end());
    }
}

TEST_CASE("centralizer") {
  GroupPtr G = s3();
  CHECK(static_cast<int>(G->centralizer(0).size()) == G->order());
  ElementId cyc = G->id_of(Permutation({1, 2, 0}));
  std::vector<ElementId> c = G->centralizer(cyc);
  CHECK(c.size() == 3);  // the rotation subgroup
  for (ElementId x : c) CHECK(G->mul(x, cyc) == G->mul(cyc, x));
  GroupPtr C4 = c4();
  for (ElementId x = 0; x < C4->order(); ++x)
    CHECK(static_cast<int>(C4->centralizer(x).size()) == C4->order());
}

TEST_CASE("commutator") {
  GroupPtr G = s3();
  for (ElementId x = 0; x < G->order(); ++x) CHECK(G->commutator(x, x) == 0);
  for (ElementId h = 0; h < G->order(); ++h)
    for (ElementId k = 0; k < G->order(); ++k) {
      bool commute = G->mul(h, k) == G->mul(k, h);
      CHECK((G->commutator(h, k) == 0) == commute);
    }
  ElementId a = G->id_of(Permutation({1, 0, 2}));  // (0 1)
  ElementId b = G->id_of(Permutation({2, 1, 0}));  // (0 2)
  CHECK(G->element_order(G->commutator(a, b)) == 3);
}

TEST_CASE("conjugacy test") {
  GroupPtr G = s3();
  for (ElementId x = 0; x < G->order(); ++x) {
    auto w = G->conjugacy_test(x, x);
    REQUIRE(w.has_value());
    CHECK(G->conjugate(x, *w) == x);
  }
  ElementId c1 = G->id_of(Permutation({1, 2, 0}));
  ElementId c2 = G->id_of(Permutation({2, 0, 1}));
  auto w = G->conjugacy_test(c1, c2);
  REQUIRE(w.has_value());
  CHECK(G->conjugate(c1, *w) == c2);
  ElementId swap01 = G->id_of(Permutation({1, 0, 2}));
  CHECK_FALSE(G->conjugacy_test(c1, swap01).has_value());  // different orders
}

TEST_CASE("group file parsing errors") {
  CHECK_THROWS_AS(parse_group("not json"), ParseError);
  CHECK_THROWS_AS(parse_group(R"({"name":"x","degree":3,"generators":[]})"), ParseError);
  CHECK_THROWS_AS(parse_group(R"({"name":"x","degree":3,"generators":[[0,0,1]]})"), ParseError);
  CHECK_THROWS_AS(parse_group(R"({"name":"x","degree":3,"generators":[[1,0]]})"), ParseError);
  CHECK_THROWS_AS(parse_group(R"({"degree":3,"generators":[[1,2,0]]})"), ParseError);
}

TEST_CASE("element cap") {
  std::string text = read_file("catalog/a5.group.json");
  CHECK_THROWS_AS(parse_group(text, 59), CapExceeded);
  CHECK(parse_group(text, 60)->order() == 60);
}

TEST_CASE("words through the spanning tree evaluate back") {
  GroupPtr G = d5();
  for (ElementId a = 0; a < G->order(); ++a) CHECK(G->eval_word(G->word_for(a)) == a);
}
