#include "bcn/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bcn/errors.hpp"
#include "text_util.hpp"

namespace bcn {

namespace {

using Kind = BraidGenerator::Kind;

TreeEdge make_edge(int a, int b) { return a < b ? TreeEdge{a, b} : TreeEdge{b, a}; }

struct DisjointSets {
  std::map<int, int> parent;
  int find(int v) {
    auto it = parent.find(v);
    if (it == parent.end()) {
      parent[v] = v;
      return v;
    }
    if (it->second == v) return v;
    int r = find(it->second);
    parent[v] = r;
    return r;
  }
};

// Upper (root side) and lower endpoint of every edge.
struct Orientation {
  std::vector<int> upper;
  std::vector<int> lower;
};

Orientation orient(const LabeledTree& t) {
  if (!t.root()) throw InvariantError("tree has no root");
  const int n = t.size();
  Orientation o{std::vector<int>(n, -1), std::vector<int>(n, -1)};
  std::vector<int> frontier{*t.root()};
  std::vector<bool> done(n, false);
  while (!frontier.empty()) {
    int v = frontier.back();
    frontier.pop_back();
    for (int l = 0; l < n; ++l) {
      if (done[l] || !t.edge(l).touches(v)) continue;
      done[l] = true;
      o.upper[l] = v;
      o.lower[l] = t.edge(l).other(v);
      frontier.push_back(o.lower[l]);
    }
  }
  return o;
}

}  // namespace

LabeledTree::LabeledTree(std::vector<TreeEdge> edges_by_label, std::optional<int> root)
    : root_(root) {
  if (edges_by_label.empty()) throw InvariantError("a labeled tree needs at least one edge");
  edges_.reserve(edges_by_label.size());
  DisjointSets ds;
  for (const auto& e : edges_by_label) {
    if (e.a == e.b) throw InvariantError("tree edge is a loop at vertex " + std::to_string(e.a));
    int ra = ds.find(e.a), rb = ds.find(e.b);
    if (ra == rb) throw InvariantError("tree edges contain a cycle");
    ds.parent[ra] = rb;
    edges_.push_back(make_edge(e.a, e.b));
  }
  // N acyclic edges on exactly N+1 vertices is connected.
  if (ds.parent.size() != edges_.size() + 1) throw InvariantError("tree edges are disconnected");
  if (root_ && !ds.parent.count(*root_))
    throw InvariantError("root " + std::to_string(*root_) + " is not a tree vertex");
}

LabeledTree LabeledTree::with_root(std::optional<int> root) const {
  return LabeledTree(edges_, root);
}

std::vector<int> LabeledTree::vertices() const {
  std::vector<int> vs;
  for (const auto& e : edges_) {
    vs.push_back(e.a);
    vs.push_back(e.b);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<int> LabeledTree::incident_labels(int v) const {
  std::vector<int> out;
  for (int l = 0; l < size(); ++l)
    if (edges_[l].touches(v)) out.push_back(l);
  return out;
}

CanonicalTree canonical_form(const LabeledTree& t) {
  CanonicalTree c;
  for (int v : t.vertices()) c.sets.push_back(t.incident_labels(v));
  std::sort(c.sets.begin(), c.sets.end());
  if (t.root()) c.root_set = t.incident_labels(*t.root());
  return c;
}

LabeledTree tree_from_canonical(const CanonicalTree& c) {
  const int n = static_cast<int>(c.sets.size()) - 1;
  if (n < 1) throw InvariantError("canonical tree needs at least two vertex sets");
  std::vector<std::vector<int>> ends(n);
  for (int v = 0; v <= n; ++v) {
    for (int l : c.sets[v]) {
      if (l < 0 || l >= n) throw InvariantError("label out of range in canonical tree");
      ends[l].push_back(v);
    }
  }
  std::vector<TreeEdge> edges;
  for (int l = 0; l < n; ++l) {
    if (ends[l].size() != 2) throw InvariantError("label must occur in exactly two vertex sets");
    edges.push_back(make_edge(ends[l][0], ends[l][1]));
  }
  std::optional<int> root;
  if (c.root_set) {
    auto it = std::find(c.sets.begin(), c.sets.end(), *c.root_set);
    if (it == c.sets.end()) throw InvariantError("root set not among vertex sets");
    root = static_cast<int>(it - c.sets.begin());
  }
  return LabeledTree(std::move(edges), root);
}

bool same_tree(const LabeledTree& a, const LabeledTree& b) {
  return canonical_form(a) == canonical_form(b);
}

LabeledTree bush_tree(int n, std::optional<int> root) {
  std::vector<TreeEdge> edges;
  for (int k = 0; k < n; ++k) edges.push_back({0, k + 1});
  return LabeledTree(std::move(edges), root);
}

LabeledTree path_tree(int n, std::optional<int> root) {
  std::vector<TreeEdge> edges;
  for (int k = 0; k < n; ++k) edges.push_back({k, k + 1});
  return LabeledTree(std::move(edges), root);
}

bool is_bush(const LabeledTree& t) {
  if (t.size() == 1) return true;
  const auto& e0 = t.edge(0);
  for (int centre : {e0.a, e0.b}) {
    bool all = true;
    for (const auto& e : t.edges()) all = all && e.touches(centre);
    if (all) return true;
  }
  return false;
}

LabeledTree act_generator(const LabeledTree& t, BraidGenerator g) {
  const int n = t.size();
  auto edges = t.edges();
  switch (g.kind) {
    case Kind::Lambda:
      for (int l = 0; l < n; ++l) edges[(l + 1) % n] = t.edge(l);
      return LabeledTree(std::move(edges), t.root());
    case Kind::LambdaInv:
      for (int l = 0; l < n; ++l) edges[(l + n - 1) % n] = t.edge(l);
      return LabeledTree(std::move(edges), t.root());
    case Kind::U:
    case Kind::UInv:
      break;
  }
  const int k = g.index;
  if (k < 1 || k > n - 1) throw RankError("u" + std::to_string(k) + " out of range for tree");
  const TreeEdge lo = t.edge(k - 1), hi = t.edge(k);
  int shared = -1;
  if (hi.touches(lo.a))
    shared = lo.a;
  else if (hi.touches(lo.b))
    shared = lo.b;
  if (shared < 0) {
    std::swap(edges[k - 1], edges[k]);
    return LabeledTree(std::move(edges), t.root());
  }
  // e_{k-1} = AB, e_k = AC  ->  e_k = AB, e_{k-1} = BC.  This rewrite has
  // order three, so the inverse is the rewrite applied twice.
  const int turns = g.kind == Kind::U ? 1 : 2;
  for (int i = 0; i < turns; ++i) {
    const TreeEdge ab = edges[k - 1], ac = edges[k];
    const int a = ab.touches(ac.a) ? ac.a : ac.b;
    const int b = ab.other(a), c = ac.other(a);
    edges[k] = make_edge(a, b);
    edges[k - 1] = make_edge(b, c);
  }
  return LabeledTree(std::move(edges), t.root());
}

LabeledTree act_word(const LabeledTree& t, const BraidWord& w) {
  if (w.rank() != t.size()) throw RankError("braid word rank differs from tree size");
  LabeledTree out = t;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out = act_generator(out, *it);
  return out;
}

long complexity(const LabeledTree& t) {
  auto o = orient(t);
  std::map<int, long> depth{{*t.root(), 0}};
  // Edges are discovered in BFS/DFS order from the root, so resolve by
  // repeated passes; N is small.
  bool progress = true;
  while (progress) {
    progress = false;
    for (int l = 0; l < t.size(); ++l) {
      if (depth.count(o.lower[l]) || !depth.count(o.upper[l])) continue;
      depth[o.lower[l]] = depth[o.upper[l]] + 1;
      progress = true;
    }
  }
  long total = 0;
  for (auto [v, d] : depth) total += d;
  return total;
}

EdgePair classify_pair(const LabeledTree& rooted, int k) {
  auto o = orient(rooted);
  const int lo = k - 1, hi = k;
  if (o.upper[lo] == o.upper[hi]) return EdgePair::Brothers;
  if (o.lower[lo] == o.upper[hi]) return EdgePair::LowerIsParent;
  if (o.lower[hi] == o.upper[lo]) return EdgePair::UpperIsParent;
  return EdgePair::Nonadjacent;
}

namespace {

class BushReducer {
 public:
  explicit BushReducer(const LabeledTree& t) : tree_(t), n_(t.size()) {}

  BushReduction run() {
    const int root = *tree_.root();
    BushReduction result{BraidWord(n_), root, {}};
    const int max_steps = 64 * n_ * n_ * n_ + 64;
    int steps = 0;
    while (!all_at_root()) {
      const long before = complexity(tree_);
      result.complexities.push_back(before);
      outer_step();
      if (complexity(tree_) >= before)
        throw std::logic_error("bush reduction failed to lower the complexity");
      if (++steps > max_steps) throw std::logic_error("bush reduction did not terminate");
    }
    result.complexities.push_back(complexity(tree_));
    // applied_ holds generators in application order; the leftmost letter
    // of an action word acts last.
    std::reverse(applied_.begin(), applied_.end());
    result.word = BraidWord(n_, std::move(applied_));
    return result;
  }

 private:
  bool all_at_root() const {
    for (const auto& e : tree_.edges())
      if (!e.touches(*tree_.root())) return false;
    return true;
  }

  void apply(int k, int times = 1) {
    for (int i = 0; i < times; ++i) {
      tree_ = act_generator(tree_, BraidGenerator::u(k));
      applied_.push_back(BraidGenerator::u(k));
    }
  }

  // Acts with u_k on the pair (e_{k-1}, e_k) and reports whether the
  // complexity dropped.
  bool advance(int k) {
    switch (classify_pair(tree_, k)) {
      case EdgePair::Nonadjacent: apply(k); return false;
      case EdgePair::LowerIsParent: apply(k); return true;
      case EdgePair::UpperIsParent: apply(k, 2); return true;
      case EdgePair::Brothers: break;
    }
    throw std::logic_error("bush reduction reached a brother pair");
  }

  std::vector<int> children(const Orientation& o, int label) const {
    std::vector<int> out;
    for (int l = 0; l < n_; ++l)
      if (o.upper[l] == o.lower[label]) out.push_back(l);
    return out;
  }

  void outer_step() {
    auto o = orient(tree_);
    int k = -1;
    for (int l = 0; l + 1 < n_ && k < 0; ++l)
      if (!children(o, l).empty()) k = l;
    const int guard = 4 * n_ + 4;
    if (k >= 0) {
      // Some e_k with k < N-1 has a child: walk a child label to k+1.
      for (int i = 0; i < guard; ++i) {
        o = orient(tree_);
        auto kids = children(o, k);
        if (std::find(kids.begin(), kids.end(), k + 1) != kids.end()) {
          advance(k + 1);
          return;
        }
        int below = -1;
        for (int s : kids)
          if (s < k + 1) below = std::max(below, s);
        if (below >= 0) {
          if (advance(below + 1)) return;
        } else {
          const int s = *std::min_element(kids.begin(), kids.end());
          if (advance(s)) return;
        }
      }
    } else {
      // Only e_{N-1} has children.
      const int top = n_ - 1;
      for (int i = 0; i < guard; ++i) {
        o = orient(tree_);
        auto kids = children(o, top);
        if (std::find(kids.begin(), kids.end(), top - 1) != kids.end()) {
          advance(top);
          return;
        }
        const int s = *std::max_element(kids.begin(), kids.end());
        if (advance(s + 1)) return;
      }
    }
    throw std::logic_error("bush reduction inner loop did not terminate");
  }

  LabeledTree tree_;
  int n_;
  std::vector<BraidGenerator> applied_;
};

}  // namespace

BushReduction reduce_to_bush(const LabeledTree& t) {
  if (is_bush(t)) {
    const int centre = t.size() == 1 ? t.edge(0).a
                       : t.edge(1).touches(t.edge(0).a) ? t.edge(0).a : t.edge(0).b;
    return {BraidWord(t.size()), centre, {static_cast<long>(t.size())}};
  }
  int root = 0;
  std::vector<int> best;
  bool first = true;
  for (int v : t.vertices()) {
    auto labels = t.incident_labels(v);
    if (first || labels < best) {
      best = labels;
      root = v;
      first = false;
    }
  }
  return BushReducer(t.with_root(root)).run();
}

BraidWord canonicalize_to_bush(const LabeledTree& t) { return reduce_to_bush(t).word; }

namespace {

// Trees with labels 0..k-1 on vertices 0..k, as edge lists; k = 0 is the
// single vertex.
using EdgeList = std::vector<TreeEdge>;

std::vector<EdgeList> trees_with_edges(int k, std::map<int, std::vector<EdgeList>>& memo) {
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  std::vector<EdgeList> out;
  if (k == 0) {
    out.push_back({});
  } else {
    // Removing edge k-1 leaves two subtrees whose labels split {0..k-2}.
    std::set<CanonicalTree> seen;
    const int rest = k - 1;
    for (unsigned mask = 0; mask < (1u << rest); ++mask) {
      std::vector<int> left, right;
      for (int l = 0; l < rest; ++l) ((mask >> l) & 1u ? left : right).push_back(l);
      auto lefts = trees_with_edges(static_cast<int>(left.size()), memo);
      auto rights = trees_with_edges(static_cast<int>(right.size()), memo);
      const int offset = static_cast<int>(left.size()) + 1;
      for (const auto& lt : lefts) {
        for (const auto& rt : rights) {
          for (int lv = 0; lv < offset; ++lv) {
            for (int rv = 0; rv <= static_cast<int>(right.size()); ++rv) {
              EdgeList edges(k);
              for (std::size_t i = 0; i < left.size(); ++i) edges[left[i]] = lt[i];
              for (std::size_t i = 0; i < right.size(); ++i)
                edges[right[i]] = make_edge(rt[i].a + offset, rt[i].b + offset);
              edges[k - 1] = make_edge(lv, rv + offset);
              seen.insert(canonical_form(LabeledTree(edges)));
            }
          }
        }
      }
    }
    for (const auto& c : seen) out.push_back(tree_from_canonical(c).edges());
  }
  memo[k] = out;
  return out;
}

}  // namespace

std::vector<LabeledTree> enumerate_trees(int n, int max_n) {
  if (n < 1) throw RankError("tree enumeration needs N >= 1");
  if (n > max_n)
    throw GuardError("enumerating trees with " + std::to_string(n) + " edges exceeds the limit " +
                     std::to_string(max_n));
  std::map<int, std::vector<EdgeList>> memo;
  std::vector<LabeledTree> out;
  for (auto& edges : trees_with_edges(n, memo)) out.emplace_back(std::move(edges));
  return out;
}

std::string to_string(const LabeledTree& t) {
  std::ostringstream out;
  for (int l = 0; l < t.size(); ++l) out << l << ": " << t.edge(l).a << ' ' << t.edge(l).b << '\n';
  if (t.root()) out << "root: " << *t.root() << '\n';
  return out.str();
}

LabeledTree parse_tree(std::string_view text) {
  std::map<int, TreeEdge> edges;
  std::optional<int> root;
  int line_no = 0;
  for (auto raw : detail::split_lines(text)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto where = "tree line " + std::to_string(line_no) + ": ";
    auto kl = detail::split_keyed(line);
    if (!kl) throw ParseError(where + "expected '<label>: <a> <b>'");
    if (kl->key == "root") {
      std::optional<int> v;
      if (kl->values.size() == 1) v = detail::to_int(kl->values[0]);
      if (!v) throw ParseError(where + "expected 'root: <vertex>'");
      root = v;
      continue;
    }
    auto label = detail::to_int(kl->key);
    if (!label || *label < 0) throw ParseError(where + "bad label '" + std::string(kl->key) + "'");
    if (kl->values.size() != 2) throw ParseError(where + "expected two vertices");
    auto a = detail::to_int(kl->values[0]), b = detail::to_int(kl->values[1]);
    if (!a || !b) throw ParseError(where + "vertex ids must be integers");
    if (!edges.emplace(*label, TreeEdge{*a, *b}).second)
      throw ParseError(where + "duplicate label " + std::to_string(*label));
  }
  std::vector<TreeEdge> by_label;
  for (auto& [label, e] : edges) {
    if (label != static_cast<int>(by_label.size()))
      throw ParseError("tree labels must be exactly 0..N-1");
    by_label.push_back(e);
  }
  try {
    return LabeledTree(std::move(by_label), root);
  } catch (const InvariantError& e) {
    throw ParseError(std::string("invalid tree: ") + e.what());
  }
}

std::string to_dot(const LabeledTree& t) {
  std::ostringstream out;
  out << "graph tree {\n";
  for (int v : t.vertices()) {
    out << "  v" << v << " [label=\"" << v << "\"";
    if (t.root() && *t.root() == v) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (int l = 0; l < t.size(); ++l)
    out << "  v" << t.edge(l).a << " -- v" << t.edge(l).b << " [label=\"" << l << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace bcn
