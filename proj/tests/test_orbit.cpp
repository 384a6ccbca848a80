#include <random>

#include "bcn/errors.hpp"
#include "bcn/orbit.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bcn;
using bcn::testing::random_word;

namespace {

BraidWord bw(std::string_view text, int rank) { return parse_braid_word(text, rank); }

// Random product of L^{+-1} and U^{+-1}.
BraidWord random_lu(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), pick(0, 3);
  const BraidWord l = lambda_word(rank), u = u_product(rank);
  const BraidWord pieces[] = {l, inverse(l), u, inverse(u)};
  BraidWord out(rank);
  for (int i = len(rng); i > 0; --i) out = out * pieces[pick(rng)];
  return out;
}

// A word equal to w in BC_N but spelled differently: a relator or a
// cancelling pair spliced in at a random position.
BraidWord respell(std::mt19937& rng, const BraidWord& w) {
  const int n = w.rank();
  auto rels = relation_instances(n);
  std::uniform_int_distribution<std::size_t> pos(0, w.length()), pick(0, rels.size());
  auto at = pos(rng);
  auto r = pick(rng);
  BraidWord insert(n);
  if (r == rels.size()) {
    auto gens = all_generators(n);
    auto g = gens[pick(rng) % gens.size()];
    insert = BraidWord(n, {g, g.inverse()});
  } else {
    insert = rels[r].lhs * inverse(rels[r].rhs);
  }
  std::vector<BraidGenerator> head(w.letters().begin(), w.letters().begin() + at);
  std::vector<BraidGenerator> tail(w.letters().begin() + at, w.letters().end());
  return BraidWord(n, head) * insert * BraidWord(n, tail);
}

template <class State, class Eq>
void check_orbit_invariants(const State& start, const OrbitResult<State>& o, Eq eq) {
  REQUIRE(o.transversal.size() == o.size());
  for (std::size_t i = 0; i < o.size(); ++i) CHECK(eq(act_word(start, o.transversal[i]), o.elements[i]));
  for (const auto& s : o.schreier_generators) CHECK(eq(act_word(start, s), start));
}

}  // namespace

TEST_CASE("tree orbit sizes") {
  CHECK(orbit(bush_tree(1)).size() == 1);
  CHECK(orbit(bush_tree(2)).size() == 1);
  CHECK(orbit(bush_tree(3)).size() == 4);
  CHECK(orbit(path_tree(4)).size() == 25);
  CHECK(orbit(bush_tree(5)).size() == 216);
  CHECK(orbit(path_tree(6, 2)).size() == 2401);
}

TEST_CASE("tree orbit matches enumeration") {
  for (int n = 2; n <= 5; ++n) {
    auto o = orbit(bush_tree(n));
    auto all = enumerate_trees(n);
    REQUIRE(o.size() == all.size());
    for (std::size_t i = 0; i < o.size(); ++i) CHECK(canonical_form(o.elements[i]) == canonical_form(all[i]));
  }
}

TEST_CASE("orbit transversals and Schreier generators") {
  auto t = path_tree(4);
  check_orbit_invariants(t, orbit(t), same_tree);
  for (auto mode : {Equality::Rotational, Equality::Strict}) {
    auto q = trivial_quadrangulation(4);
    OrbitOptions opt;
    opt.equality = mode;
    auto o = orbit(q, opt);
    CHECK_FALSE(o.schreier_generators.empty());
    check_orbit_invariants(q, o, [mode](const Quadrangulation& a, const Quadrangulation& b) {
      return equal(a, b, mode);
    });
  }
}

TEST_CASE("parallel orbit is identical") {
  OrbitOptions serial, parallel;
  parallel.jobs = 4;
  auto a = orbit(path_tree(5), serial), b = orbit(path_tree(5), parallel);
  CHECK(a.elements == b.elements);
  CHECK(a.transversal == b.transversal);
  CHECK(a.schreier_generators == b.schreier_generators);
  auto q = trivial_quadrangulation(4);
  auto c = orbit(q, serial), d = orbit(q, parallel);
  CHECK(c.elements == d.elements);
  CHECK(c.schreier_generators == d.schreier_generators);
}

TEST_CASE("orbit guard") {
  OrbitOptions opt;
  opt.max_orbit = 10;
  CHECK_THROWS_AS(orbit(bush_tree(4), opt), GuardError);
}

TEST_CASE("stabilizer index") {
  CHECK(stabilizer_index(2) == 1);
  CHECK(stabilizer_index(4) == 25);
  CHECK(stabilizer_index(6) == 2401);
  for (int n = 2; n <= 5; ++n) {
    auto c = compare_equalities(n);
    CHECK(c.rotational_size == c.tree_size);
    CHECK(c.strict_size >= c.rotational_size);
  }
}

TEST_CASE("liftability examples") {
  for (int n : {2, 4, 6}) {
    CHECK(is_liftable(BraidWord(n)));
    CHECK(is_liftable(lambda_word(n)));
    CHECK(is_liftable(u_product(n)));
    CHECK(is_liftable(inverse(u_product(n))));
  }
  CHECK_FALSE(is_liftable(bw("u1", 4)));
  CHECK_FALSE(is_liftable(bw("u1", 4), Equality::Strict));

  std::mt19937 rng(3);
  for (int n : {4, 6}) {
    for (int i = 0; i < 100; ++i) CHECK(is_liftable(random_lu(rng, n, 8)));
  }
}

TEST_CASE("liftable words form a subgroup") {
  std::mt19937 rng(17);
  auto stab = orbit(trivial_quadrangulation(4));
  // inv maps stabilizer elements to liftable ones.
  std::vector<BraidWord> liftable;
  for (const auto& s : stab.schreier_generators) liftable.push_back(inv(s));
  std::uniform_int_distribution<std::size_t> pick(0, liftable.size() - 1);
  for (int i = 0; i < 100; ++i) {
    auto a = liftable[pick(rng)], b = liftable[pick(rng)];
    REQUIRE(is_liftable(a));
    CHECK(is_liftable(a * b));
    CHECK(is_liftable(inverse(a)));
  }
}

TEST_CASE("liftability depends only on the group element") {
  std::mt19937 rng(29);
  int changed = 0;
  for (int i = 0; i < 200; ++i) {
    auto w = random_word(rng, 4, 10);
    auto w2 = respell(rng, w);
    REQUIRE(words_equal(w, w2));
    changed += w != w2;
    CHECK(is_liftable(w) == is_liftable(w2));
  }
  CHECK(changed > 0);
}

TEST_CASE("conjecture probe") {
  auto r2 = conjecture_probe(2, 6);
  CHECK(r2.words > 0);
  CHECK(r2.not_liftable.empty());
  CHECK(r2.identities.empty());
  CHECK(r2.collisions.empty());

  auto r4 = conjecture_probe(4, 5);
  CHECK(r4.not_liftable.empty());
  CHECK(r4.identities.empty());
  CHECK(r4.schreier_total > 0);
  CHECK(r4.schreier_expressible <= r4.schreier_total);

  CHECK(to_string(ProbeWord{}) == "1");
  CHECK(to_string(ProbeWord{{false, 2}, {true, -1}, {false, 1}}) == "L^2 U^-1 L");
  CHECK(expand(ProbeWord{{true, -1}}, 3) == bw("u2' u1'", 3));
  // L^N collapses, so it never appears as a probed word.
  CHECK(words_equal(expand(ProbeWord{{false, 4}}, 4), BraidWord(4)));
}
