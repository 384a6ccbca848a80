#include <random>

#include "bcn/covering.hpp"
#include "bcn/errors.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bcn;
using bcn::testing::random_free_word;
using bcn::testing::random_tree;
using bcn::testing::random_word;

namespace {

FreeWord fw(std::string_view text, int rank) { return parse_free_word(text, rank); }

std::vector<TreeLikeCovering> all_coverings(int n) {
  std::vector<TreeLikeCovering> out;
  for (const auto& t : enumerate_trees(n))
    for (int v : t.vertices()) out.push_back(covering_from_tree(t.with_root(v)));
  return out;
}

TreeLikeCovering random_covering(std::mt19937& rng, int n) {
  auto t = random_tree(rng, n);
  auto vs = t.vertices();
  std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
  return covering_from_tree(t.with_root(vs[pick(rng)]));
}

// Membership by brute force over the permutation action on sheets.
bool traced(const TreeLikeCovering& c, const FreeWord& w) {
  int sheet = c.base();
  for (const auto& l : w.letters()) {
    const auto& e = c.transposition(l.gen);
    if (sheet == e.a)
      sheet = e.b;
    else if (sheet == e.b)
      sheet = e.a;
  }
  return sheet == c.base();
}

}  // namespace

TEST_CASE("covering validation") {
  CHECK_THROWS_AS(TreeLikeCovering({{0, 1}, {1, 0}}, 0), InvariantError);
  CHECK_THROWS_AS(TreeLikeCovering({{0, 1}}, 5), InvariantError);
  CHECK_THROWS_AS(covering_from_tree(path_tree(2)), InvariantError);
}

TEST_CASE("tree and covering round trip") {
  TreeLikeCovering c1({{0, 1}}, 0);
  auto t1 = tree_from_covering(c1);
  CHECK(t1.size() == 1);
  CHECK(t1.root() == 0);

  auto bush = covering_from_tree(bush_tree(4, 0));
  CHECK(is_bush(tree_from_covering(bush)));

  for (int n = 1; n <= 4; ++n) {
    for (const auto& c : all_coverings(n)) {
      auto t = tree_from_covering(c);
      CHECK(covering_from_tree(t) == c);
      CHECK(tree_from_covering(covering_from_tree(t)) == t);
    }
  }
}

TEST_CASE("membership examples") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& c : all_coverings(n)) {
      CHECK(membership(c, FreeWord(n)));
      for (int k = 0; k < n; ++k) {
        CHECK(membership(c, FreeWord::generator(k, n) * FreeWord::generator(k, n)));
        CHECK(membership(c, FreeWord::generator(k, n)) == !c.transposition(k).touches(c.base()));
      }
    }
  }
  CHECK_THROWS_AS(membership(TreeLikeCovering({{0, 1}}, 0), fw("s0", 2)), RankError);
}

TEST_CASE("membership is a subgroup predicate") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 4;
    auto c = random_covering(rng, n);
    auto a = random_free_word(rng, n, 12), b = random_free_word(rng, n, 12);
    CHECK(membership(c, a) == traced(c, a));
    if (membership(c, a) && membership(c, b)) {
      CHECK(membership(c, a * b));
      CHECK(membership(c, invert(a)));
    }
    // s_0^2 is a member, hence so is every conjugate of it.
    auto x = a * FreeWord::generator(0, n) * FreeWord::generator(0, n) * invert(a);
    CHECK(membership(c, x) == true);
  }
}

TEST_CASE("generators for small coverings") {
  TreeLikeCovering c1({{0, 1}}, 0);
  auto g1 = generators(c1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0] == fw("s0 s0", 1));

  // Bush on N=2 rooted at the center 0.
  TreeLikeCovering bush({{0, 1}, {0, 2}}, 0);
  auto g = generators(bush);
  CHECK(g.size() == 4);
  std::set<FreeWord> got(g.begin(), g.end());
  CHECK(got.count(fw("s0 s0", 2)));
  CHECK(got.count(fw("s1 s1", 2)));
  CHECK(got.count(fw("s0 s1 s0'", 2)));
  CHECK(got.count(fw("s1 s0 s1'", 2)));
}

TEST_CASE("generators are members and number N^2") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& c : all_coverings(n)) {
      auto g = generators(c);
      CHECK(static_cast<int>(g.size()) == n * n);
      for (const auto& w : g) CHECK(membership(c, w));
    }
  }
}

TEST_CASE("fold examples") {
  auto empty = fold({}, 2);
  CHECK(empty.vertex_count() == 1);
  CHECK(empty.subgroup_rank() == 0);
  CHECK(empty.contains(FreeWord(2)));
  CHECK_FALSE(empty.contains(fw("s0", 2)));

  auto g = fold({fw("s0 s0", 1)}, 1);
  CHECK(g.is_covering());
  CHECK(g.vertex_count() == 2);
  TreeLikeCovering c1({{0, 1}}, 0);
  for (int e = -8; e <= 8; ++e) {
    std::vector<Letter> raw(std::abs(e), Letter{0, e < 0 ? -1 : 1});
    auto w = FreeWord::reduce(raw, 1);
    CHECK(g.contains(w) == membership(c1, w));
  }

  // Folding identifies the shared prefix s0; s0 s1 s0' and s0 s1' s1' s0'
  // would only give rank 1.
  auto h = fold({fw("s0 s1 s0'", 2), fw("s0 s0 s1 s0' s0'", 2)}, 2);
  CHECK(h.subgroup_rank() == 2);
  CHECK(h.vertex_count() == 3);
  CHECK(h.contains(fw("s0 s1 s0 s1 s0' s0'", 2)));
  CHECK_FALSE(h.is_covering());
  CHECK(fold({fw("s0 s1 s0'", 2), fw("s0 s1' s1' s0'", 2)}, 2).subgroup_rank() == 1);
  CHECK_FALSE(h.contains(fw("s1", 2)));
}

TEST_CASE("folded generators reproduce the covering") {
  std::mt19937 rng(5);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& c : all_coverings(n)) {
      auto g = fold(generators(c), n);
      CHECK(g.is_covering());
      CHECK(g.vertex_count() == n + 1);
      CHECK(g.subgroup_rank() == n * n);
      for (int i = 0; i < 1000; ++i) {
        auto w = random_free_word(rng, n, 14);
        CHECK(g.contains(w) == membership(c, w));
      }
    }
  }
  for (int n = 4; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      auto c = random_covering(rng, n);
      auto g = fold(generators(c), n);
      CHECK(g.is_covering());
      CHECK(g.subgroup_rank() == n * n);
      for (int i = 0; i < 200; ++i) {
        auto w = random_free_word(rng, n, 16);
        CHECK(g.contains(w) == membership(c, w));
      }
    }
  }
}

TEST_CASE("action on coverings") {
  auto bush = covering_from_tree(bush_tree(3, 0));
  CHECK(act_on_covering(BraidWord(3), bush) == bush);
  auto rotated = act_on_covering(parse_braid_word("L", 3), bush);
  CHECK(rotated.base() == 0);
  CHECK(is_bush(tree_from_covering(rotated)));
  CHECK(rotated.transposition(1) == bush.transposition(0));

  // Adjacent pair at N=2: edge 0 = {0,1}, edge 1 = {0,2}, u_1 gives 1 = {0,1}, 0 = {1,2}.
  auto moved = act_on_covering(parse_braid_word("u1", 2), TreeLikeCovering({{0, 1}, {0, 2}}, 0));
  CHECK(moved == TreeLikeCovering({{1, 2}, {0, 1}}, 0));
}

TEST_CASE("action theorem for single generators") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& c : all_coverings(n)) {
      for (auto g : all_generators(n)) {
        auto report = verify_act_theorem(BraidWord(n, {g}), c);
        CHECK(report.pass());
        CHECK(static_cast<int>(report.checks.size()) == n * n);
      }
    }
  }
}

TEST_CASE("action theorem for random words") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + trial % 5;
    auto c = random_covering(rng, n);
    auto w = random_word(rng, n, 15);
    CHECK(verify_act_theorem(w, c).pass());
  }
  auto id = verify_act_theorem(BraidWord(3), covering_from_tree(path_tree(3, 1)));
  CHECK(id.pass());
}

TEST_CASE("mismatched action is detected") {
  // Pairing the automorphism of u_1 with the tree move of u_1^-1 must fail
  // somewhere, otherwise the checks above would be vacuous.
  int failures = 0;
  auto f = to_automorphism(parse_braid_word("u1", 3));
  for (const auto& c : all_coverings(3)) {
    auto wrong = act_on_covering(parse_braid_word("u1'", 3), c);
    for (const auto& g : generators(c)) failures += !membership(wrong, apply_automorphism(f, g));
  }
  CHECK(failures > 0);
}

TEST_CASE("covering text format") {
  TreeLikeCovering c({{2, 5}, {5, 7}}, 7);
  auto text = to_string(c);
  CHECK(text == "base: 7\n0: 2 5\n1: 5 7\n");
  CHECK(parse_covering(text) == c);
  CHECK_THROWS_AS(parse_covering("0: 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_covering("base: 1\n0: 1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_covering("base: 1\n0: 1 2\n0: 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_covering("base: 1\n0: 1 2\n1: 2 1\n"), ParseError);
  auto dot = to_dot(c);
  CHECK(dot.find("v2 -> v2 [label=\"s1\"]") != std::string::npos);
  CHECK(dot.find("v2 -> v5 [label=\"s0\"]") != std::string::npos);
  CHECK(dot.find("v5 -> v2 [label=\"s0\"]") != std::string::npos);
}
