#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "torsor/aut_relators.hpp"
#include "torsor/errors.hpp"
#include "torsor/free_words.hpp"
#include "torsor/json_io.hpp"

using namespace torsor;

namespace {

Presentation s3_presentation() {
  return Presentation::make({"x", "y"}, {{1, 1, 1}, {2, 2}, {1, 2, 1, 2}});
}

AutGeneratorSet s3_inner_gens(const Presentation& p) {
  return AutGeneratorSet::make(p,
                               {{{1}, {-1, 2, 1}}, {{-2, 1, 2}, {2}}},
                               {{{1}, {1, 2, -1}}, {{2, 1, -2}, {2}}});
}

// Evaluate a free word in a permutation model of the presentation.
Permutation eval_in_model(const FreeWord& w, const std::vector<Permutation>& gens, int degree) {
  Permutation out(degree);
  for (int letter : w) {
    const Permutation& g = gens[static_cast<std::size_t>(std::abs(letter) - 1)];
    out = out.then(letter > 0 ? g : g.inverse());
  }
  return out;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce({1, 2, -2, -1}).empty());
  CHECK(free_reduce({1, 1, 1}) == FreeWord{1, 1, 1});
  CHECK(free_reduce({1, -2, 2, 1}) == FreeWord{1, 1});
  CHECK(free_reduce({}) == FreeWord{});
  // idempotent and length-nonincreasing on arbitrary words
  FreeWord messy{1, 2, -2, 2, -1, 1, -2, 2, 2};
  FreeWord once = free_reduce(messy);
  CHECK(once.size() <= messy.size());
  CHECK(free_reduce(once) == once);
  CHECK_THROWS_AS(free_reduce({1, 0, 2}), ParseError);
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(Presentation::make({"x"}, {{1, -1}}), ParseError);  // freely trivial relator
  CHECK_THROWS_AS(Presentation::make({"x"}, {{2}}), ParseError);      // letter out of range
  CHECK_THROWS_AS(Presentation::make({}, {}), ParseError);
  Presentation p = parse_presentation(read_file("catalog/s3.pres.json"));
  CHECK(p.generators.size() == 2);
  CHECK(p.relators.size() == 3);
}

TEST_CASE("word problem: direct hits") {
  Presentation p = s3_presentation();
  WordProblemSolver solver(p, WordBudgets{8, 1000000});
  CHECK(solver.solve({}).result == WpResult::Yes);
  CHECK(solver.solve({1, 1, 1}).result == WpResult::Yes);     // a relator
  CHECK(solver.solve({2, 2}).result == WpResult::Yes);
  CHECK(solver.solve({1}).result == WpResult::Unknown);       // x is not trivial
  CHECK(solver.solve({1, 2}).result == WpResult::Unknown);
  // (xy)^4 reduces to the identity via two relator insertions
  WpOutcome out = solver.solve({1, 2, 1, 2, 1, 2, 1, 2});
  CHECK(out.result == WpResult::Yes);
  REQUIRE(!out.derivation.empty());
  CHECK(out.derivation.front() == FreeWord{1, 2, 1, 2, 1, 2, 1, 2});
  CHECK(out.derivation.back().empty());
}

TEST_CASE("word problem answers agree with the permutation model") {
  Presentation p = s3_presentation();
  std::vector<Permutation> model{Permutation({1, 2, 0}), Permutation({1, 0, 2})};
  WordProblemSolver solver(p, WordBudgets{7, 1000000});
  // exhaustively walk all reduced words of length <= 5
  std::vector<FreeWord> frontier{{}};
  for (int len = 0; len < 5; ++len) {
    std::vector<FreeWord> next;
    for (const FreeWord& w : frontier)
      for (int letter : {1, -1, 2, -2}) {
        if (!w.empty() && w.back() == -letter) continue;
        FreeWord v = w;
        v.push_back(letter);
        next.push_back(v);
      }
    for (const FreeWord& w : next) {
      WpOutcome out = solver.solve(w);
      bool trivial_in_model = eval_in_model(w, model, 3).is_identity();
      if (out.result == WpResult::Yes) CHECK(trivial_in_model);  // soundness
      // derivation steps never change the model element
      if (out.result == WpResult::Yes)
        for (const FreeWord& step : out.derivation)
          CHECK(eval_in_model(step, model, 3).is_identity() == trivial_in_model);
    }
    frontier = std::move(next);
  }
}

TEST_CASE("word problem budgets") {
  Presentation p = s3_presentation();
  WordProblemSolver tight(p, WordBudgets{2, 1000000});
  CHECK(tight.solve({1, 1, 1}).result == WpResult::Unknown);  // start exceeds the cap
  WordProblemSolver no_states(p, WordBudgets{8, 1});
  CHECK(no_states.solve({1, 1, 1}).result == WpResult::Unknown);
  // monotone: everything certified at len 6 stays certified at len 8
  WordProblemSolver small(p, WordBudgets{6, 1000000});
  WordProblemSolver big(p, WordBudgets{8, 1000000});
  std::vector<FreeWord> probes{{1, 1, 1}, {2, 2}, {1, 2, 1, 2}, {1, 2, 1, 2, 1, 2}, {1, -2, 1}};
  for (const FreeWord& w : probes)
    if (small.solve(w).result == WpResult::Yes) CHECK(big.solve(w).result == WpResult::Yes);
}

TEST_CASE("apply_aut_word") {
  Presentation p = s3_presentation();
  AutGeneratorSet aut = s3_inner_gens(p);
  CHECK(apply_aut_word(p, aut, {}, 0, 8) == FreeWord{1});
  CHECK(apply_aut_word(p, aut, {}, 1, 8) == FreeWord{2});
  // conjugation by x applied to y
  CHECK(apply_aut_word(p, aut, {1}, 1, 8) == FreeWord{-1, 2, 1});
  // an automorphism followed by its inverse freely cancels here
  CHECK(apply_aut_word(p, aut, {1, -1}, 1, 8) == FreeWord{2});
  CHECK(apply_aut_word(p, aut, {2, -2}, 0, 8) == FreeWord{1});
  CHECK_THROWS_AS(apply_aut_word(p, aut, {1, 1, 1, 1, 1}, 1, 8), BudgetExceeded);
}

TEST_CASE("aut generator sanity check at load") {
  Presentation p = s3_presentation();
  WordProblemSolver solver(p, WordBudgets{8, 1000000});
  AutGeneratorSet good = s3_inner_gens(p);
  CHECK_NOTHROW(validate_aut_generators(good, solver));
  // a backward table that is not the inverse fails the check
  AutGeneratorSet bad = AutGeneratorSet::make(
      p, {{{1}, {-1, 2, 1}}}, {{{1}, {-1, 2, 1}}});
  WordProblemSolver solver2(p, WordBudgets{8, 1000000});
  CHECK_THROWS_AS(validate_aut_generators(bad, solver2), ParseError);
}

TEST_CASE("identity automorphism emits at length one") {
  Presentation p = s3_presentation();
  AutGeneratorSet ident = AutGeneratorSet::make(p, {{{1}, {2}}}, {{{1}, {2}}});
  std::vector<RelatorEmission> emissions =
      enumerate_aut_relators(p, ident, WordBudgets{2, 100000});
  REQUIRE(!emissions.empty());
  CHECK(emissions.front().psi == FreeWord{1});
  // every word over an identity automorphism is a relator
  CHECK(emissions.size() == 2 + 4);  // lengths 1 and 2
}

TEST_CASE("inner generators of the order-6 model") {
  Presentation p = s3_presentation();
  AutGeneratorSet aut = s3_inner_gens(p);
  std::vector<RelatorEmission> emissions =
      enumerate_aut_relators(p, aut, WordBudgets{8, 1000000});
  auto contains = [&](const FreeWord& w) {
    return std::any_of(emissions.begin(), emissions.end(),
                       [&](const RelatorEmission& e) { return e.psi == w; });
  };
  CHECK(contains({2, 2}));     // the involution relator
  CHECK(contains({1, 1, 1}));  // the 3-cycle relator
  CHECK(contains({1, -1}));    // trivial cancellations are relators too
  CHECK_FALSE(contains({1}));
  CHECK_FALSE(contains({1, 2}));
  // the length-4 relator needs one more letter of room: its image of the
  // second generator reduces to 9 letters
  CHECK_FALSE(contains({1, 2, 1, 2}));
  std::vector<RelatorEmission> wider = enumerate_aut_relators(p, aut, WordBudgets{9, 1000000});
  CHECK(std::any_of(wider.begin(), wider.end(),
                    [&](const RelatorEmission& e) { return e.psi == FreeWord{1, 2, 1, 2}; }));

  // soundness oracle: every emission acts trivially in the permutation model
  std::vector<Permutation> model{Permutation({1, 2, 0}), Permutation({1, 0, 2})};
  GroupPtr model_group = make_group("S3", 3, model);
  for (const RelatorEmission& e : emissions) {
    // compose the inner automorphisms named by the psi word
    Automorphism composite = Automorphism::identity(model_group);
    for (int letter : e.psi) {
      ElementId by = model_group->id_of(model[static_cast<std::size_t>(std::abs(letter) - 1)]);
      Automorphism step = inner(model_group, by);
      composite = composite.then(letter > 0 ? step : step.inverse());
    }
    CHECK(composite.is_identity());
    CHECK(e.certificates.size() == p.generators.size());
    for (const WpOutcome& cert : e.certificates) CHECK(cert.result == WpResult::Yes);
  }
}

TEST_CASE("deterministic and monotone emission streams") {
  Presentation p = s3_presentation();
  AutGeneratorSet aut = s3_inner_gens(p);
  std::vector<RelatorEmission> a = enumerate_aut_relators(p, aut, WordBudgets{5, 1000000});
  std::vector<RelatorEmission> b = enumerate_aut_relators(p, aut, WordBudgets{5, 1000000});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].psi == b[i].psi);
    for (std::size_t j = 0; j < a[i].certificates.size(); ++j)
      CHECK(a[i].certificates[j].derivation == b[i].certificates[j].derivation);
  }
  // shortlex order: lengths never decrease along the stream
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].psi.size() <= a[i].psi.size());
  // enlarging the budget only adds emissions
  std::vector<RelatorEmission> bigger = enumerate_aut_relators(p, aut, WordBudgets{6, 1000000});
  for (const RelatorEmission& e : a)
    CHECK(std::any_of(bigger.begin(), bigger.end(),
                      [&](const RelatorEmission& o) { return o.psi == e.psi; }));
  // zero length budget: empty stream
  CHECK(enumerate_aut_relators(p, aut, WordBudgets{0, 1000000}).empty());
}

TEST_CASE("aut generator file parsing") {
  Presentation p = s3_presentation();
  AutGeneratorSet from_file =
      parse_aut_generators(read_file("catalog/s3.inner.autgens.json"), p);
  CHECK(from_file.count() == 2);
  CHECK(from_file.forward[0][1] == FreeWord{-1, 2, 1});
  CHECK_THROWS_AS(parse_aut_generators(R"({"u": [[[1]]]})", p), ParseError);
  CHECK_THROWS_AS(parse_aut_generators(R"({"u": [[[1],[3]]], "v": [[[1],[2]]]})", p),
                  ParseError);
}
