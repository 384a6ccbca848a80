#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bcn/braid.hpp"
#include "bcn/quadrangulation.hpp"
#include "bcn/tree.hpp"

namespace bcn {

inline constexpr std::size_t kDefaultMaxOrbit = 1'000'000;

struct OrbitOptions {
  Equality equality = Equality::Rotational;  // quadrangulations only
  int jobs = 1;                              // worker threads per BFS level
  std::size_t max_orbit = kDefaultMaxOrbit;  // GuardError beyond this
  bool schreier = true;
};

/// Closure of a start state under L, L', u_k, u_k'.
///
/// elements are sorted by their canonical key; transversal[i] carries the
/// start state to elements[i] (act_word(start, transversal[i]) equals
/// elements[i] under the orbit's equality). Schreier generators
/// t_y^-1 g t_x of every closure edge x -g-> y, freely cancelled, nonempty,
/// deduplicated and sorted; they stabilize the start state.
template <class State>
struct OrbitResult {
  std::vector<State> elements;
  std::vector<BraidWord> transversal;
  std::vector<BraidWord> schreier_generators;

  std::size_t size() const { return elements.size(); }
};

/// Orbit of the unrooted tree (any root is dropped).
OrbitResult<LabeledTree> orbit(const LabeledTree& start, const OrbitOptions& options = {});
/// Orbit of a monotone quadrangulation under strict or rotational equality.
/// Under strict equality the BC_N relations only hold up to rotation, so the
/// result is the set reachable by generator words rather than a group orbit.
OrbitResult<Quadrangulation> orbit(const Quadrangulation& start, const OrbitOptions& options = {});

/// Whether act_word(Q0, inv(w)) equals Q0, Q0 the trivial quadrangulation.
/// For N = 2g this is liftability through the genus-g hyperelliptic cover.
bool is_liftable(const BraidWord& w, Equality equality = Equality::Rotational);

/// The liftable generators lambda and U = u_1 u_2 ... u_{N-1}.
BraidWord lambda_word(int rank);
BraidWord u_product(int rank);

/// Orbit size of the trivial quadrangulation.
std::size_t stabilizer_index(int rank, const OrbitOptions& options = {});

struct OrbitComparison {
  int rank = 0;
  std::size_t strict_size = 0;
  std::size_t rotational_size = 0;
  std::size_t tree_size = 0;
  bool agree() const { return strict_size == rotational_size; }
};

/// Both orbit sizes of Q0 and the tree orbit size of its tree.
OrbitComparison compare_equalities(int rank, const OrbitOptions& options = {});

/// Syllable of a word in the free product Z_N * Z: L^exp or U^exp.
struct ProbeSyllable {
  bool is_u = false;
  int exp = 0;
  friend auto operator<=>(const ProbeSyllable&, const ProbeSyllable&) = default;
};
using ProbeWord = std::vector<ProbeSyllable>;

/// `L^2 U^-1 L`; the empty word is `1`.
std::string to_string(const ProbeWord& w);
BraidWord expand(const ProbeWord& w, int rank);

/// Heuristic evidence for <L, U> being the liftable subgroup, freely
/// generated up to L^N = 1. Not a proof of anything.
struct ProbeReport {
  int rank = 0;
  int max_len = 0;
  Equality equality = Equality::Rotational;
  std::size_t words = 0;                 // nonempty normal forms probed
  std::vector<ProbeWord> not_liftable;   // expected empty
  std::vector<ProbeWord> identities;     // nonempty words acting trivially on F_N
  /// Pairs of distinct normal forms with the same automorphism; each gives a
  /// relation of length at most 2 * max_len.
  std::vector<std::pair<ProbeWord, ProbeWord>> collisions;
  std::size_t schreier_total = 0;        // Q0-stabilizer generators examined
  std::size_t schreier_expressible = 0;  // inv-images equal to a probed word
};

/// Enumerates the normal forms in Z_N * Z of length <= max_len, counting
/// L^a as min(a, N-a) letters and U^b as |b| letters.
ProbeReport conjecture_probe(int rank, int max_len, const OrbitOptions& options = {});

}  // namespace bcn
