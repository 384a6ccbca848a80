#include "bcn/covering.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "bcn/errors.hpp"
#include "text_util.hpp"

namespace bcn {

TreeLikeCovering::TreeLikeCovering(std::vector<TreeEdge> transpositions, int base) : base_(base) {
  // LabeledTree enforces the spanning-tree condition.
  LabeledTree tree(std::move(transpositions), base);
  transpositions_ = tree.edges();
}

std::vector<int> TreeLikeCovering::sheets() const {
  std::set<int> s;
  for (const auto& e : transpositions_) {
    s.insert(e.a);
    s.insert(e.b);
  }
  return {s.begin(), s.end()};
}

int TreeLikeCovering::move(int sheet, int label) const {
  const auto& e = transpositions_.at(label);
  return e.touches(sheet) ? e.other(sheet) : sheet;
}

LabeledTree tree_from_covering(const TreeLikeCovering& c) {
  return LabeledTree(c.transpositions(), c.base());
}

TreeLikeCovering covering_from_tree(const LabeledTree& t) {
  if (!t.root()) throw InvariantError("covering needs a rooted tree");
  return TreeLikeCovering(t.edges(), *t.root());
}

bool membership(const TreeLikeCovering& c, const FreeWord& w) {
  if (w.rank() != c.size()) throw RankError("word rank differs from covering rank");
  int sheet = c.base();
  for (const auto& l : w.letters()) sheet = c.move(sheet, l.gen);
  return sheet == c.base();
}

std::vector<FreeWord> generators(const TreeLikeCovering& c) {
  const int n = c.size();
  // Path words from the base along the tree, and the label of the last edge.
  std::map<int, std::vector<Letter>> path{{c.base(), {}}};
  std::map<int, int> last{{c.base(), -1}};
  std::vector<int> frontier{c.base()};
  while (!frontier.empty()) {
    int v = frontier.back();
    frontier.pop_back();
    for (int k = 0; k < n; ++k) {
      const auto& e = c.transposition(k);
      if (!e.touches(v) || path.count(e.other(v))) continue;
      int u = e.other(v);
      path[u] = path[v];
      path[u].push_back({k, 1});
      last[u] = k;
      frontier.push_back(u);
    }
  }

  std::vector<FreeWord> out;
  std::set<FreeWord> seen;
  for (const auto& [v, tau] : path) {
    for (int e = 0; e < n; ++e) {
      bool touches = c.transposition(e).touches(v);
      if (touches && last[v] == e) continue;
      std::vector<Letter> raw = tau;
      raw.push_back({e, 1});
      if (touches) raw.push_back({e, 1});
      for (auto it = tau.rbegin(); it != tau.rend(); ++it) raw.push_back(it->inverse());
      auto w = FreeWord::reduce(raw, n);
      if (seen.insert(w).second) out.push_back(std::move(w));
    }
  }
  return out;
}

FoldedGraph::FoldedGraph(const std::vector<FreeWord>& gens, int rank) : rank_(rank) {
  // Petal graph: one closed path at vertex 0 per word.
  struct Edge {
    int from, gen, to;
  };
  std::vector<Edge> edges;
  int count = 1;
  for (const auto& w : gens) {
    if (w.rank() != rank) throw RankError("generator rank differs from fold rank");
    int at = 0;
    auto letters = w.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      int next = i + 1 == letters.size() ? 0 : count++;
      const auto& l = letters[i];
      if (l.exp > 0)
        edges.push_back({at, l.gen, next});
      else
        edges.push_back({next, l.gen, at});
      at = next;
    }
  }

  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    // Keep the smaller id as representative so the base stays 0.
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  };

  // Fold to a fixed point: two edges with the same label leaving (or
  // entering) one vertex have their other endpoints identified.
  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::pair<int, int>, int> fwd, bwd;
    for (const auto& e : edges) {
      int a = find(e.from), b = find(e.to);
      auto [f, fnew] = fwd.emplace(std::pair{a, e.gen}, b);
      if (!fnew) changed |= unite(f->second, b);
      auto [r, rnew] = bwd.emplace(std::pair{b, e.gen}, a);
      if (!rnew) changed |= unite(r->second, a);
    }
  }

  std::map<int, int> index;
  for (int v = 0; v < count; ++v) index.emplace(find(v), static_cast<int>(index.size()));
  out_.assign(index.size(), std::vector<int>(2 * rank, -1));
  for (const auto& e : edges) {
    int a = index[find(e.from)], b = index[find(e.to)];
    out_[a][2 * e.gen] = b;
    out_[b][2 * e.gen + 1] = a;
  }
}

int FoldedGraph::edge_count() const {
  int total = 0;
  for (const auto& row : out_)
    for (int g = 0; g < rank_; ++g) total += row[2 * g] >= 0;
  return total;
}

int FoldedGraph::target(int v, Letter l) const { return out_.at(v).at(slot(l)); }

bool FoldedGraph::contains(const FreeWord& w) const {
  if (w.rank() != rank_) throw RankError("word rank differs from folded graph rank");
  int v = 0;
  for (const auto& l : w.letters()) {
    v = target(v, l);
    if (v < 0) return false;
  }
  return v == 0;
}

bool FoldedGraph::is_covering() const {
  for (const auto& row : out_)
    if (std::find(row.begin(), row.end(), -1) != row.end()) return false;
  return true;
}

FoldedGraph fold(const std::vector<FreeWord>& gens, int rank) { return FoldedGraph(gens, rank); }

TreeLikeCovering act_on_covering(const BraidWord& w, const TreeLikeCovering& c) {
  if (w.rank() != c.size()) throw RankError("braid word rank differs from covering rank");
  return covering_from_tree(act_word(tree_from_covering(c), w));
}

bool ActReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ActCheck& c) { return c.member; });
}

ActReport verify_act_theorem(const BraidWord& w, const TreeLikeCovering& c) {
  ActReport report{act_on_covering(w, c), {}};
  auto f = to_automorphism(w);
  for (auto& g : generators(c)) {
    auto image = apply_automorphism(f, g);
    bool member = membership(report.image, image);
    report.checks.push_back({std::move(g), std::move(image), member});
  }
  return report;
}

std::string to_string(const TreeLikeCovering& c) {
  std::ostringstream out;
  out << "base: " << c.base() << '\n';
  for (int k = 0; k < c.size(); ++k)
    out << k << ": " << c.transposition(k).a << ' ' << c.transposition(k).b << '\n';
  return out.str();
}

TreeLikeCovering parse_covering(std::string_view text) {
  std::map<int, TreeEdge> pairs;
  std::optional<int> base;
  int line_no = 0;
  for (auto raw : detail::split_lines(text)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto where = "covering line " + std::to_string(line_no) + ": ";
    auto kl = detail::split_keyed(line);
    if (!kl) throw ParseError(where + "expected '<label>: <sheet> <sheet>'");
    if (kl->key == "base") {
      std::optional<int> v;
      if (kl->values.size() == 1) v = detail::to_int(kl->values[0]);
      if (!v) throw ParseError(where + "expected 'base: <sheet>'");
      base = v;
      continue;
    }
    auto label = detail::to_int(kl->key);
    if (!label || *label < 0) throw ParseError(where + "bad label '" + std::string(kl->key) + "'");
    if (kl->values.size() != 2) throw ParseError(where + "expected two sheets");
    auto a = detail::to_int(kl->values[0]), b = detail::to_int(kl->values[1]);
    if (!a || !b) throw ParseError(where + "sheet ids must be integers");
    if (!pairs.emplace(*label, TreeEdge{*a, *b}).second)
      throw ParseError(where + "duplicate label " + std::to_string(*label));
  }
  if (!base) throw ParseError("covering has no 'base:' line");
  std::vector<TreeEdge> by_label;
  for (auto& [label, e] : pairs) {
    if (label != static_cast<int>(by_label.size()))
      throw ParseError("covering labels must be exactly 0..N-1");
    by_label.push_back(e);
  }
  try {
    return TreeLikeCovering(std::move(by_label), *base);
  } catch (const InvariantError& e) {
    throw ParseError(std::string("invalid covering: ") + e.what());
  }
}

std::string to_dot(const TreeLikeCovering& c) {
  std::ostringstream out;
  out << "digraph covering {\n";
  for (int v : c.sheets()) {
    out << "  v" << v << " [label=\"" << v << "\"";
    if (v == c.base()) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (int v : c.sheets())
    for (int k = 0; k < c.size(); ++k)
      out << "  v" << v << " -> v" << c.move(v, k) << " [label=\"s" << k << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace bcn
