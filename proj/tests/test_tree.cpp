#include <functional>
#include <map>
#include <random>

#include "bcn/errors.hpp"
#include "bcn/tree.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bcn;

namespace {

BraidWord bw(std::string_view text, int rank) { return parse_braid_word(text, rank); }

// Enumerates every downward path from the root explicitly.
long brute_force_complexity(const LabeledTree& t) {
  long total = 0;
  std::function<void(int, int, long)> walk = [&](int v, int via, long len) {
    for (int l = 0; l < t.size(); ++l) {
      if (l == via || !t.edge(l).touches(v)) continue;
      total += len + 1;
      walk(t.edge(l).other(v), l, len + 1);
    }
  };
  walk(*t.root(), -1, 0);
  return total;
}

}  // namespace

TEST_CASE("tree construction validates invariants") {
  CHECK_THROWS_AS(LabeledTree({{0, 1}, {1, 2}, {2, 0}}), InvariantError);
  CHECK_THROWS_AS(LabeledTree({{0, 1}, {2, 3}}), InvariantError);
  CHECK_THROWS_AS(LabeledTree({{0, 0}}), InvariantError);
  CHECK_THROWS_AS(LabeledTree({{0, 1}}, 7), InvariantError);
  CHECK_NOTHROW(LabeledTree({{10, 20}, {20, 30}}, 30));
}

TEST_CASE("canonical form examples") {
  auto bush = canonical_form(bush_tree(3));
  CHECK(bush.sets == std::vector<std::vector<int>>{{0}, {0, 1, 2}, {1}, {2}});
  auto path = canonical_form(path_tree(2));
  CHECK(path.sets == std::vector<std::vector<int>>{{0}, {0, 1}, {1}});
  LabeledTree renamed({{100, 7}, {7, 42}});
  CHECK(same_tree(renamed, path_tree(2)));
  CHECK(canonical_form(renamed.with_root(7)) == canonical_form(path_tree(2, 1)));
  CHECK(canonical_form(renamed.with_root(7)) != canonical_form(path_tree(2, 0)));
  auto t = path_tree(4, 2);
  CHECK(canonical_form(tree_from_canonical(canonical_form(t))) == canonical_form(t));
}

TEST_CASE("u_k rewrite on adjacent edges") {
  // 0 = ab, 1 = bc with a=0, b=1, c=2: shared b.
  auto t = act_generator(path_tree(2), BraidGenerator::u(1));
  CHECK(t.edge(1) == TreeEdge{0, 1});
  CHECK(t.edge(0) == TreeEdge{0, 2});
}

TEST_CASE("u_k swaps labels of nonadjacent edges") {
  LabeledTree t({{0, 1}, {2, 3}, {1, 2}, {3, 4}});
  auto s = act_generator(t, BraidGenerator::u(1));
  CHECK(s.edge(0) == t.edge(1));
  CHECK(s.edge(1) == t.edge(0));
  CHECK(s.edge(2) == t.edge(2));
}

TEST_CASE("generator and inverse cancel; adjacent rewrite has order three") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 7;
    auto t = testing::random_tree(rng, n);
    for (auto g : all_generators(n)) {
      CHECK(act_generator(act_generator(t, g), g.inverse()) == t);
      CHECK(act_generator(act_generator(t, g.inverse()), g) == t);
    }
  }
  auto bush = bush_tree(2);
  auto u = BraidGenerator::u(1);
  CHECK(act_generator(act_generator(act_generator(bush, u), u), u) == bush);
  CHECK(act_generator(bush, u) != bush);
}

TEST_CASE("act_word respects semantic word equality") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    auto t = testing::random_tree(rng, n);
    auto a = testing::random_word(rng, n, 6), b = testing::random_word(rng, n, 6);
    for (const auto& rel : relation_instances(n)) {
      auto lhs = a * rel.lhs * b, rhs = a * rel.rhs * b;
      REQUIRE(words_equal(lhs, rhs));
      CHECK(act_word(t, lhs) == act_word(t, rhs));
    }
    CHECK(act_word(t, BraidWord(n)) == t);
    CHECK(act_word(t, BraidWord::power(n, BraidGenerator::lambda(), n)) == t);
  }
}

TEST_CASE("lambda has order exactly N on trees") {
  for (int n = 2; n <= 6; ++n) {
    auto t = path_tree(n);
    for (int m = 1; m < n; ++m)
      CHECK(act_word(t, BraidWord::power(n, BraidGenerator::lambda(), m)) != t);
  }
}

TEST_CASE("relation suite on every tree for N <= 5") {
  for (int n = 2; n <= 5; ++n) {
    auto trees = enumerate_trees(n);
    for (const auto& rel : relation_instances(n))
      for (const auto& t : trees) CHECK(act_word(t, rel.lhs) == act_word(t, rel.rhs));
  }
}

TEST_CASE("complexity") {
  for (int n = 1; n <= 6; ++n) CHECK(complexity(bush_tree(n, 0)) == n);
  CHECK(complexity(path_tree(3, 0)) == 6);
  CHECK(complexity(path_tree(1, 0)) == 1);
  CHECK_THROWS_AS(complexity(path_tree(3)), InvariantError);
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_trees(n))
      for (int v : t.vertices()) CHECK(complexity(t.with_root(v)) == brute_force_complexity(t.with_root(v)));
}

TEST_CASE("complexity monotonicity table, exhaustive N <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& base : enumerate_trees(n)) {
      for (int v : base.vertices()) {
        auto t = base.with_root(v);
        const long c = complexity(t);
        for (int k = 1; k < n; ++k) {
          auto u = BraidGenerator::u(k);
          const long cu = complexity(act_generator(t, u));
          switch (classify_pair(t, k)) {
            case EdgePair::Nonadjacent: CHECK(cu == c); break;
            case EdgePair::Brothers: CHECK(cu > c); break;
            case EdgePair::LowerIsParent: CHECK(cu < c); break;
            case EdgePair::UpperIsParent: {
              const long c2 = complexity(act_generator(act_generator(t, u), u));
              const long cinv = complexity(act_generator(t, u.inverse()));
              CHECK(c2 == cinv);
              CHECK(c2 < c);
              break;
            }
          }
        }
      }
    }
  }
}

TEST_CASE("bush reduction") {
  CHECK(canonicalize_to_bush(bush_tree(4)).empty());
  CHECK(canonicalize_to_bush(path_tree(2)).empty());  // the 2-edge path is the bush
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      auto r = reduce_to_bush(t);
      CHECK(is_bush(act_word(t, r.word)));
      for (auto g : r.word.letters()) CHECK_FALSE(g.is_lambda());
      for (std::size_t i = 1; i < r.complexities.size(); ++i)
        CHECK(r.complexities[i] < r.complexities[i - 1]);
      CHECK(r.complexities.back() == n);
    }
  }
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto t = testing::random_tree(rng, 6 + trial % 5);
    CHECK(is_bush(act_word(t, canonicalize_to_bush(t))));
  }
}

TEST_CASE("tree enumeration matches the brute-force oracle") {
  CHECK(enumerate_trees(1).size() == 1);
  CHECK(enumerate_trees(2).size() == 1);
  CHECK(enumerate_trees(3).size() == 4);
  CHECK(enumerate_trees(4).size() == 25);
  for (int n = 1; n <= 5; ++n) {
    auto oracle = testing::brute_force_trees(n);
    std::set<std::vector<std::vector<int>>> got;
    for (const auto& t : enumerate_trees(n)) got.insert(canonical_form(t).sets);
    CHECK(got == oracle);
  }
  CHECK(enumerate_trees(6).size() == 2401);
  CHECK_THROWS_AS(enumerate_trees(8), GuardError);
}

TEST_CASE("transitivity: the orbit of one tree is every tree, N <= 5") {
  for (int n = 2; n <= 5; ++n) {
    std::set<CanonicalTree> seen{canonical_form(path_tree(n))};
    std::vector<LabeledTree> frontier{path_tree(n)};
    while (!frontier.empty()) {
      auto t = frontier.back();
      frontier.pop_back();
      for (auto g : all_generators(n)) {
        auto s = act_generator(t, g);
        if (seen.insert(canonical_form(s)).second) frontier.push_back(s);
      }
    }
    CHECK(seen.size() == enumerate_trees(n).size());
  }
}

TEST_CASE("tree text and dot formats") {
  auto t = path_tree(3, 1);
  CHECK(to_string(t) == "0: 0 1\n1: 1 2\n2: 2 3\nroot: 1\n");
  CHECK(parse_tree(to_string(t)) == t);
  std::mt19937 rng(4);
  for (int i = 0; i < 30; ++i) {
    auto r = testing::random_tree(rng, 1 + i % 7);
    CHECK(parse_tree(to_string(r)) == r);
  }
  CHECK_THROWS_AS(parse_tree("0: 0 1\n2: 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("0: 0 1\n1: 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("zero: 0 1\n"), ParseError);
  auto dot = to_dot(t);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("v1 -- v2 [label=\"1\"]") != std::string::npos);
}
