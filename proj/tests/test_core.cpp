#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "filling/errors.hpp"
#include "filling/presentation.hpp"
#include "filling/shelling.hpp"
#include "filling/tree.hpp"
#include "filling/word.hpp"

using namespace filling;

namespace {

std::vector<Generator> ab_alphabet() { return {{'a'}, {'b'}}; }

Word random_word(std::mt19937_64& rng, const std::vector<Generator>& alphabet, int len) {
  Word w;
  for (int i = 0; i < len; ++i)
    w.push_back({static_cast<std::int16_t>(rng() % alphabet.size()),
                 static_cast<std::int8_t>(rng() % 2 ? 1 : -1)});
  return w;
}

}  // namespace

TEST_CASE("parse_word transliterates without reduction") {
  auto alpha = ab_alphabet();
  Word w = parse_word("abAB", alpha);
  REQUIRE(w.size() == 4);
  CHECK(w[0] == Letter{0, 1});
  CHECK(w[1] == Letter{1, 1});
  CHECK(w[2] == Letter{0, -1});
  CHECK(w[3] == Letter{1, -1});
  CHECK(parse_word("", alpha).empty());
  Word aa = parse_word("aA", alpha);
  CHECK(aa.size() == 2);  // no implicit reduction
  CHECK(!is_reduced(aa));
}

TEST_CASE("parse_word reports the offending position") {
  auto alpha = ab_alphabet();
  try {
    parse_word("abXa", alpha);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_word("ab1", alpha), ParseError);
  CHECK_THROWS_AS(parse_word("c", alpha), ParseError);
}

TEST_CASE("parse/render round-trips") {
  auto alpha = ab_alphabet();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, alpha, static_cast<int>(rng() % 12));
    CHECK(parse_word(render_word(w, alpha), alpha) == w);
  }
  CHECK(render_word(parse_word("aBab", alpha), alpha) == "aBab");
}

TEST_CASE("free_reduce") {
  auto alpha = ab_alphabet();
  CHECK(free_reduce(parse_word("aA", alpha)).empty());
  CHECK(free_reduce(parse_word("abBA", alpha)).empty());
  CHECK(free_reduce(parse_word("abAB", alpha)) == parse_word("abAB", alpha));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = random_word(rng, alpha, static_cast<int>(rng() % 16));
    Word r = free_reduce(w);
    CHECK(is_reduced(r));
    CHECK(r.size() <= w.size());
    CHECK(free_reduce(r) == r);  // idempotent
  }
}

TEST_CASE("presentation text format round-trips bit-exactly") {
  std::string text = "gens: a b\nrel: abAB\n";
  Presentation p = parse_presentation(text);
  CHECK(render_presentation(p) == text);
  CHECK(parse_presentation(render_presentation(p)) == p);

  // Comments and blank lines are accepted on input only.
  Presentation q = parse_presentation("# a comment\ngens: a b\n\nrel: abAB # inline\n");
  CHECK(q == p);

  CHECK(p.max_relator_length() == 4);
  CHECK(!p.is_triangular());
  CHECK_THROWS_AS(parse_presentation("rel: ab\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\nrel:\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: ab\n"), ParseError);
}

TEST_CASE("triangularize splits relators with the leftmost-pair policy") {
  Presentation zsq = parse_presentation("gens: a b\nrel: abAB\n");
  Presentation tri = triangularize(zsq);
  CHECK(render_presentation(tri) == "gens: a b t\nrel: Tab\nrel: tAB\n");

  Presentation cube = parse_presentation("gens: a\nrel: aaa\n");
  CHECK(triangularize(cube) == cube);

  Presentation four = triangularize(parse_presentation("gens: a\nrel: aaaa\n"));
  CHECK(render_presentation(four) == "gens: a t\nrel: Taa\nrel: taa\n");
}

TEST_CASE("triangularize output is triangular, idempotent, adds L-3 generators") {
  std::mt19937_64 rng(99);
  auto alpha = ab_alphabet();
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Word> relators;
    int expected_new = 0;
    for (int r = 0; r < 1 + static_cast<int>(rng() % 3); ++r) {
      int len = 1 + static_cast<int>(rng() % 9);
      relators.push_back(random_word(rng, alpha, len));
      expected_new += std::max(0, len - 3);
    }
    Presentation p({{'a'}, {'b'}}, relators);
    Presentation tri = triangularize(p);
    CHECK(tri.is_triangular());
    CHECK(tri.alphabet().size() == p.alphabet().size() + static_cast<std::size_t>(expected_new));
    // Original generators stay as a prefix.
    for (std::size_t g = 0; g < p.alphabet().size(); ++g)
      CHECK(tri.alphabet()[g] == p.alphabet()[g]);
    CHECK(triangularize(tri) == tri);
  }
}

TEST_CASE("triangularize handles Bridson's group (m = 1)") {
  // <a,s,t,u | [s,a], [t,a], [u,at]> with u standing for the third stable letter.
  Presentation g1 = parse_presentation("gens: a s t u\nrel: SAsa\nrel: TAta\nrel: UTAuat\n");
  Presentation tri = triangularize(g1);
  CHECK(tri.is_triangular());
  CHECK(tri.alphabet().size() == 4 + 1 + 1 + 3);  // L-3 fresh letters per relator
  CHECK(triangularize(tri) == tri);
}

TEST_CASE("complete trees have 2^(d+1)-1 nodes") {
  CHECK(complete_tree(0).node_count() == 1);
  CHECK(complete_tree(2).node_count() == 7);
  CHECK(complete_tree(3).node_count() == 15);
  validate_tree(complete_tree(5));
}

TEST_CASE("tree text form round-trips") {
  CHECK(render_tree(complete_tree(0)) == "()");
  CHECK(render_tree(complete_tree(1)) == "(() ())");
  RootedTree t = parse_tree("((() ()) ())");
  CHECK(t.node_count() == 5);
  CHECK(render_tree(parse_tree(render_tree(t))) == render_tree(t));
  Forest f = parse_forest("() (() ())");
  CHECK(f.trees.size() == 2);
  CHECK(render_forest(f) == "() (() ())");
  CHECK_THROWS_AS(parse_tree("(()"), ParseError);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    RootedTree r = random_full_tree(1 + 2 * static_cast<int>(rng() % 40), rng);
    validate_tree(r);
    CHECK(render_tree(parse_tree(render_tree(r))) == render_tree(r));
  }
}

TEST_CASE("greedy shelling examples") {
  Forest single{{complete_tree(0)}};
  CHECK(visibility_of_schedule(single, greedy_shell(single)) == 1);

  Forest t2{{complete_tree(2)}};
  CHECK(visibility_of_schedule(t2, greedy_shell(t2)) == 3);

  Forest five{{parse_tree("((() ()) ())")}};
  CHECK(visibility_of_schedule(five, greedy_shell(five)) == 2);
}

TEST_CASE("visibility_of_schedule examples and validation") {
  Forest t1{{complete_tree(1)}};
  ShellingSchedule root_first;
  root_first.steps = {{0, 0}, {0, 1}, {0, 2}};  // root, then both leaves
  CHECK(visibility_of_schedule(t1, root_first) == 2);

  Forest two_singles{{complete_tree(0), complete_tree(0)}};
  ShellingSchedule any;
  any.steps = {{0, 0}, {1, 0}};
  CHECK(visibility_of_schedule(two_singles, any) == 2);

  ShellingSchedule bad;
  bad.steps = {{0, 1}};  // a leaf is not visible while the root stands
  CHECK_THROWS_AS(visibility_of_schedule(t1, bad), ValidationError);
  ShellingSchedule incomplete;
  incomplete.steps = {{0, 0}};
  CHECK_THROWS_AS(visibility_of_schedule(t1, incomplete), ValidationError);
}

TEST_CASE("exact visibility examples") {
  CHECK(exact_visibility(Forest{{complete_tree(2)}}) == 3);
  CHECK(exact_visibility(Forest{{parse_tree("((() ()) ())")}}) == 2);
  CHECK(exact_visibility(Forest{{complete_tree(0)}}) == 1);
  CHECK_THROWS_AS(exact_visibility(Forest{{complete_tree(4)}}), BudgetError);
  CHECK(exact_visibility(Forest{{complete_tree(4)}}, 31) == 5);
}

TEST_CASE("lemma 1 band bound") {
  CHECK(lemma1_bound(1) == 1);
  CHECK(lemma1_bound(7) == 3);
  CHECK(lemma1_bound(8) == 4);
  CHECK(lemma1_bound(2001) == 11);
  CHECK_THROWS_AS(lemma1_bound(0), ValidationError);
  for (std::int64_t n : {1, 2, 3, 4, 7, 8, 15, 16, 100, 2001})
    CHECK(static_cast<double>(lemma1_bound(n)) < corollary1_bound(n));
}

namespace {

// All full binary tree shapes with exactly n nodes.
std::vector<RootedTree> all_shapes(int n) {
  std::vector<RootedTree> out;
  if (n == 1) {
    out.push_back(complete_tree(0));
    return out;
  }
  for (int left = 1; left <= n - 2; left += 2) {
    for (const RootedTree& lt : all_shapes(left))
      for (const RootedTree& rt : all_shapes(n - 1 - left)) {
        RootedTree t;
        t.nodes.push_back({});
        auto graft = [&t](const RootedTree& src) {
          int offset = t.node_count();
          for (const auto& node : src.nodes)
            t.nodes.push_back({node.left < 0 ? -1 : node.left + offset,
                               node.right < 0 ? -1 : node.right + offset});
          return src.root + offset;
        };
        t.nodes[0].left = graft(lt);
        t.nodes[0].right = graft(rt);
        out.push_back(std::move(t));
      }
  }
  return out;
}

}  // namespace

TEST_CASE("exhaustive shapes: exact <= greedy <= lemma 1 bound, corollary strict") {
  for (int n = 1; n <= 11; n += 2) {
    for (const RootedTree& t : all_shapes(n)) {
      Forest f{{t}};
      int greedy = visibility_of_schedule(f, greedy_shell(f));
      int exact = exact_visibility(f);
      CHECK(exact <= greedy);
      CHECK(greedy <= lemma1_bound(n));
      CHECK(static_cast<double>(exact) < corollary1_bound(n));
    }
  }
}

TEST_CASE("sharpness on complete trees") {
  for (int d = 0; d <= 4; ++d) {
    Forest f{{complete_tree(d)}};
    CHECK(exact_visibility(f, 40) == d + 1);
    CHECK(visibility_of_schedule(f, greedy_shell(f)) == d + 1);
  }
}

TEST_CASE("a forest of k single nodes has visibility exactly k") {
  for (int k = 1; k <= 6; ++k) {
    Forest f;
    for (int i = 0; i < k; ++i) f.trees.push_back(complete_tree(0));
    CHECK(visibility_of_schedule(f, greedy_shell(f)) == k);
    CHECK(exact_visibility(f) == k);
  }
}

TEST_CASE("random trees respect the lemma 1 bound") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + 2 * static_cast<int>(rng() % 1000);
    Forest f{{random_full_tree(n, rng)}};
    CHECK(visibility_of_schedule(f, greedy_shell(f)) <= lemma1_bound(n));
  }
}
