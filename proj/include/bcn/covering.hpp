#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bcn/braid.hpp"
#include "bcn/free_group.hpp"
#include "bcn/tree.hpp"

namespace bcn {

/// Tree-like (N+1)-sheeted covering of the wedge of N circles.
///
/// Every circuit has length 1 or 2 and each label has exactly one 2-circuit,
/// so s_k permutes the sheets by a single transposition and fixes the rest
/// (loops). The N transpositions form a spanning tree on the sheets; a cycle
/// among them would be a circuit of length >= 3.
class TreeLikeCovering {
 public:
  TreeLikeCovering(std::vector<TreeEdge> transpositions, int base);

  int size() const { return static_cast<int>(transpositions_.size()); }
  const std::vector<TreeEdge>& transpositions() const { return transpositions_; }
  const TreeEdge& transposition(int label) const { return transpositions_.at(label); }
  int base() const { return base_; }
  /// Sorted sheet ids.
  std::vector<int> sheets() const;
  /// Image of a sheet under s_label (or its inverse, which is the same).
  int move(int sheet, int label) const;

  friend bool operator==(const TreeLikeCovering&, const TreeLikeCovering&) = default;

 private:
  std::vector<TreeEdge> transpositions_;
  int base_;
};

/// Edge k joins the label-k transposition; rooted at the base sheet.
LabeledTree tree_from_covering(const TreeLikeCovering& c);
/// Throws InvariantError when the tree has no root.
TreeLikeCovering covering_from_tree(const LabeledTree& t);

/// Whether w lies in the subgroup of closed paths at the base sheet.
bool membership(const TreeLikeCovering& c, const FreeWord& w);

/// The a- and b-families: for the tree path nu from the base to each sheet v,
/// tau e tau^-1 for every label e looping at v, and tau e^2 tau^-1 for every
/// label e whose transposition touches v, except the last edge of nu.
/// Reduced, deduplicated, in sheet-then-label order. N^2 words.
std::vector<FreeWord> generators(const TreeLikeCovering& c);

/// Stallings folding of the bouquet of the given words at a base vertex.
/// Written independently of the tree-like code so it can serve as a check.
class FoldedGraph {
 public:
  FoldedGraph(const std::vector<FreeWord>& gens, int rank);

  int rank() const { return rank_; }
  int vertex_count() const { return static_cast<int>(out_.size()); }
  int edge_count() const;
  /// Base is vertex 0. Target of the letter s_gen^exp at v, or -1.
  int target(int v, Letter l) const;
  bool contains(const FreeWord& w) const;
  /// Every vertex has every letter defined, i.e. the graph is a finite covering.
  bool is_covering() const;
  /// Rank of the subgroup: edges - vertices + 1.
  int subgroup_rank() const { return edge_count() - vertex_count() + 1; }

 private:
  int slot(Letter l) const { return 2 * l.gen + (l.exp > 0 ? 0 : 1); }

  int rank_;
  std::vector<std::vector<int>> out_;  // out_[v][slot] -> vertex or -1
};

FoldedGraph fold(const std::vector<FreeWord>& gens, int rank);

/// The covering of act_word(tree, w); the base sheet is kept.
TreeLikeCovering act_on_covering(const BraidWord& w, const TreeLikeCovering& c);

struct ActCheck {
  FreeWord generator;
  FreeWord image;  // automorphism of w applied to generator
  bool member = false;
};

struct ActReport {
  TreeLikeCovering image;
  std::vector<ActCheck> checks;
  bool pass() const;
};

/// Checks that the automorphism of w maps every generator of c's subgroup
/// into the subgroup of act_on_covering(w, c). Both have index N+1, so
/// containment is equality.
ActReport verify_act_theorem(const BraidWord& w, const TreeLikeCovering& c);

/// `base: s` then one `label: a b` line per transposition.
std::string to_string(const TreeLikeCovering& c);
TreeLikeCovering parse_covering(std::string_view text);
/// The covering graph itself: loops and both directions of each 2-circuit.
std::string to_dot(const TreeLikeCovering& c);

}  // namespace bcn
