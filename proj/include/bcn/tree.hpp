#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcn/braid.hpp"

namespace bcn {

/// Unordered tree edge between two vertex ids, stored with a < b.
struct TreeEdge {
  int a = 0;
  int b = 0;

  bool touches(int v) const { return a == v || b == v; }
  int other(int v) const { return v == a ? b : a; }
  friend auto operator<=>(const TreeEdge&, const TreeEdge&) = default;
};

/// Tree with N edges labeled 0..N-1 (edges()[label]) on N+1 opaque integer
/// vertex ids, optionally rooted. operator== compares vertex ids too; use
/// same_tree() for equality of abstract labeled trees.
class LabeledTree {
 public:
  LabeledTree(std::vector<TreeEdge> edges_by_label, std::optional<int> root = std::nullopt);

  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  const TreeEdge& edge(int label) const { return edges_.at(label); }
  std::optional<int> root() const { return root_; }
  LabeledTree with_root(std::optional<int> root) const;
  /// Sorted vertex ids.
  std::vector<int> vertices() const;
  /// Labels of edges incident to v, ascending.
  std::vector<int> incident_labels(int v) const;

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;

 private:
  std::vector<TreeEdge> edges_;
  std::optional<int> root_;
};

/// Sorted multiset of per-vertex incident-label sets; determines an abstract
/// labeled tree. The root, if any, is recorded as its set.
struct CanonicalTree {
  std::vector<std::vector<int>> sets;
  std::optional<std::vector<int>> root_set;
  friend auto operator<=>(const CanonicalTree&, const CanonicalTree&) = default;
};

CanonicalTree canonical_form(const LabeledTree& t);
/// Rebuilds a tree whose vertex ids are the positions in `c.sets`.
LabeledTree tree_from_canonical(const CanonicalTree& c);
bool same_tree(const LabeledTree& a, const LabeledTree& b);

/// All N edges on vertex 0, edge k joins 0 and k+1.
LabeledTree bush_tree(int n, std::optional<int> root = std::nullopt);
/// Edge k joins k and k+1.
LabeledTree path_tree(int n, std::optional<int> root = std::nullopt);
bool is_bush(const LabeledTree& t);

LabeledTree act_generator(const LabeledTree& t, BraidGenerator g);
/// Leftmost letter acts last.
LabeledTree act_word(const LabeledTree& t, const BraidWord& w);

/// Sum of the lengths of all downward paths from the root, i.e. the sum of
/// vertex depths. Throws InvariantError when the tree has no root.
long complexity(const LabeledTree& t);

/// How the edges e_{k-1} and e_k sit relative to each other in a rooted tree.
enum class EdgePair { Nonadjacent, Brothers, LowerIsParent, UpperIsParent };
/// Relation of e_{k-1} to e_k: LowerIsParent means e_{k-1} is the parent of
/// e_k, UpperIsParent means e_k is the parent of e_{k-1}.
EdgePair classify_pair(const LabeledTree& rooted, int k);

struct BushReduction {
  BraidWord word;                 // act_word(t, word) is the bush
  int root = 0;                   // root used for the complexity measure
  std::vector<long> complexities; // complexity before each outer step, then final
};

/// Constructive transitivity: a word in u_1..u_{N-1} carrying t to the bush
/// tree. Roots t at the vertex with the lexicographically smallest label set;
/// every outer step strictly lowers the complexity.
BushReduction reduce_to_bush(const LabeledTree& t);
BraidWord canonicalize_to_bush(const LabeledTree& t);

inline constexpr int kDefaultMaxEnumerate = 7;
/// Every abstract tree with N labeled edges, sorted by canonical form.
/// (N+1)^(N-2) trees for N >= 2.
std::vector<LabeledTree> enumerate_trees(int n, int max_n = kDefaultMaxEnumerate);

/// One `label: a b` line per edge, then `root: v` when rooted.
std::string to_string(const LabeledTree& t);
LabeledTree parse_tree(std::string_view text);
std::string to_dot(const LabeledTree& t);

}  // namespace bcn
