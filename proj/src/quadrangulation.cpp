#include "bcn/quadrangulation.hpp"

#include <algorithm>
#include <cmath>
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

int mod(int a, int m) { return ((a % m) + m) % m; }

std::pair<int, int> chord(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

// Strictly interleaved endpoints on the circle.
bool crosses(std::pair<int, int> p, std::pair<int, int> q) {
  if (p.first == q.first || p.first == q.second || p.second == q.first || p.second == q.second)
    return false;
  auto inside = [&](int x) { return p.first < x && x < p.second; };
  return inside(q.first) != inside(q.second);
}

std::array<int, 2> blacks_of(const Face& f) {
  std::array<int, 2> out{};
  int i = 0;
  for (int v : f)
    if (!is_white(v)) out[i++] = v;
  return out;
}

Face sorted_face(Face f) {
  std::sort(f.begin(), f.end());
  return f;
}

void require_monotone(const Quadrangulation& q) {
  if (!is_monotone(q)) throw InvariantError("quadrangulation is not monotone");
}

// Boundary flip of one face. The face ABCD with boundary sides AB and CD
// (A, C white; B, D black) becomes PBQD, where P follows B and Q follows D
// in the direction A -> B. The other faces keep their vertices while the
// polygon is re-cut: the cyclic vertex order B, P..C, D, Q..A becomes
// B, Q..A, D, P..C, laid out from B's index in the same direction. The black
// diagonal BD is kept, and flipping the same face twice is the identity.
// B is whichever black endpoint is followed by the shorter arc; on a tie both
// choices give the same layout.
Quadrangulation flip(const Quadrangulation& q, int label) {
  const int m = q.polygon_size();
  const Face& f = q.face(label);
  auto is_side = [m](int a, int b) { return mod(b - a, m) == 1 || mod(a - b, m) == 1; };
  const std::array<std::pair<int, int>, 4> sides{
      {{f[0], f[1]}, {f[1], f[2]}, {f[2], f[3]}, {f[3], f[0]}}};
  std::array<bool, 4> boundary{};
  for (int i = 0; i < 4; ++i) boundary[i] = is_side(sides[i].first, sides[i].second);
  const bool pair02 = boundary[0] && boundary[2];
  const bool pair13 = boundary[1] && boundary[3];
  if (pair02 && pair13) return q;  // N = 1: the face is the whole polygon
  if (!pair02 && !pair13)
    throw InvariantError("face " + std::to_string(label) + " has no opposite boundary sides");
  const auto side = pair02 ? sides[0] : sides[1];
  const int first_black = is_white(side.first) ? side.second : side.first;
  const int first_white = is_white(side.first) ? side.first : side.second;
  const int dir = mod(first_black - first_white, m) == 1 ? 1 : -1;
  const int other_black = [&] {
    for (int v : f)
      if (!is_white(v) && v != first_black) return v;
    return -1;
  }();
  // Anchor at the black vertex followed by the shorter arc; the inverse flip
  // sees the same arcs and so picks the same anchor.
  auto arc = [&](int from, int to) { return mod(dir * (to - from), m); };
  const bool keep_first = arc(first_black, other_black) <= arc(other_black, first_black);
  const int b = keep_first ? first_black : other_black;
  const int d = keep_first ? other_black : first_black;

  // Walk from B in direction dir: B, P..C, D, Q..A.
  std::vector<int> walk;
  for (int i = 0; i < m; ++i) walk.push_back(mod(b + dir * i, m));
  const auto d_at = std::find(walk.begin(), walk.end(), d) - walk.begin();
  std::vector<int> cycle{b};
  cycle.insert(cycle.end(), walk.begin() + d_at + 1, walk.end());  // Q..A
  cycle.push_back(d);
  cycle.insert(cycle.end(), walk.begin() + 1, walk.begin() + d_at);  // P..C
  std::vector<int> new_index(m);
  for (int i = 0; i < m; ++i) new_index[cycle[i]] = mod(b + dir * i, m);

  const int p = walk[1], qv = walk[(d_at + 1) % m];
  auto faces = q.faces();
  faces[label] = {b, p, d, qv};
  for (auto& face : faces) {
    for (int& v : face) v = new_index[v];
    face = sorted_face(face);
  }
  return Quadrangulation(q.size(), std::move(faces));
}

// Rewrites the adjacent faces k-1 (black diagonal AB) and k (black diagonal
// AC) of a hexagon into face k with diagonal AB and face k-1 with diagonal
// BC, i.e. turns the hexagon's inner diagonal onto B.
Quadrangulation rotate_hexagon(const Quadrangulation& q, int k, int shared) {
  auto faces = q.faces();
  const auto lo = blacks_of(faces[k - 1]);
  const int b = lo[0] == shared ? lo[1] : lo[0];
  std::set<int> hex_set(faces[k - 1].begin(), faces[k - 1].end());
  hex_set.insert(faces[k].begin(), faces[k].end());
  if (hex_set.size() != 6) throw InvariantError("adjacent faces do not form a hexagon");
  std::vector<int> hex(hex_set.begin(), hex_set.end());
  const int i = static_cast<int>(std::find(hex.begin(), hex.end(), b) - hex.begin());
  const Face first = sorted_face({hex[i], hex[(i + 1) % 6], hex[(i + 2) % 6], hex[(i + 3) % 6]});
  const Face second = sorted_face({hex[(i + 3) % 6], hex[(i + 4) % 6], hex[(i + 5) % 6], hex[i]});
  const bool first_has_a = std::find(first.begin(), first.end(), shared) != first.end();
  faces[k] = first_has_a ? first : second;
  faces[k - 1] = first_has_a ? second : first;
  return Quadrangulation(q.size(), std::move(faces));
}

}  // namespace

Quadrangulation::Quadrangulation(int n, std::vector<Face> faces_by_label)
    : n_(n), faces_(std::move(faces_by_label)) {
  if (n < 1) throw InvariantError("a quadrangulation needs N >= 1");
  if (static_cast<int>(faces_.size()) != n)
    throw InvariantError("expected " + std::to_string(n) + " faces");
  const int m = polygon_size();
  std::map<std::pair<int, int>, int> edge_use;
  for (auto& f : faces_) {
    f = sorted_face(f);
    for (int v : f)
      if (v < 0 || v >= m) throw InvariantError("face vertex out of range");
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InvariantError("face repeats a vertex");
    for (int i = 0; i < 4; ++i) {
      if (is_white(f[i]) == is_white(f[(i + 1) % 4]))
        throw InvariantError("face colors do not alternate");
      ++edge_use[chord(f[i], f[(i + 1) % 4])];
    }
  }
  std::vector<std::pair<int, int>> chords;
  for (auto [e, uses] : edge_use) {
    const bool side = e.second - e.first == 1 || (e.first == 0 && e.second == m - 1);
    if (side && uses != 1) throw InvariantError("boundary side covered more than once");
    if (!side) {
      if (uses != 2) throw InvariantError("interior edge not shared by exactly two faces");
      chords.push_back(e);
    }
  }
  int sides = 0;
  for (auto [e, uses] : edge_use)
    if (e.second - e.first == 1 || (e.first == 0 && e.second == m - 1)) ++sides;
  if (sides != m) throw InvariantError("faces do not cover the polygon boundary");
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j)
      if (crosses(chords[i], chords[j])) throw InvariantError("interior edges cross");
}

bool is_monotone(const Quadrangulation& q) {
  const int m = q.polygon_size();
  for (int v = 0; v < m; ++v) {
    // (fan position, label) for faces at v; fan position is the smallest
    // counterclockwise offset of another face vertex as seen from v.
    std::vector<std::pair<int, int>> fan;
    for (int l = 0; l < q.size(); ++l) {
      const Face& f = q.face(l);
      if (std::find(f.begin(), f.end(), v) == f.end()) continue;
      int pos = m;
      for (int x : f)
        if (x != v) pos = std::min(pos, mod(x - v, m));
      fan.emplace_back(pos, l);
    }
    std::sort(fan.begin(), fan.end());
    for (std::size_t i = 1; i < fan.size(); ++i) {
      const bool increasing = fan[i].second > fan[i - 1].second;
      if (increasing != is_white(v)) return false;
    }
  }
  return true;
}

Quadrangulation trivial_quadrangulation(int n) {
  const int m = 2 * n + 2;
  std::vector<Face> faces(n);
  for (int j = 1; j <= n; ++j) faces[n - j] = {1, 2 * j, 2 * j + 1, (2 * j + 2) % m};
  return Quadrangulation(n, std::move(faces));
}

Quadrangulation act_generator(const Quadrangulation& q, BraidGenerator g) {
  require_monotone(q);
  const int n = q.size();
  switch (g.kind) {
    case Kind::Lambda: {
      std::vector<Face> faces(n);
      for (int l = 0; l < n; ++l) faces[(l + 1) % n] = q.face(l);
      return flip(Quadrangulation(n, std::move(faces)), 0);
    }
    case Kind::LambdaInv: {
      auto flipped = flip(q, 0);
      std::vector<Face> faces(n);
      for (int l = 0; l < n; ++l) faces[(l + n - 1) % n] = flipped.face(l);
      return Quadrangulation(n, std::move(faces));
    }
    case Kind::U:
    case Kind::UInv:
      break;
  }
  const int k = g.index;
  if (k < 1 || k > n - 1) throw RankError("u" + std::to_string(k) + " out of range");
  const auto lo = blacks_of(q.face(k - 1)), hi = blacks_of(q.face(k));
  int shared = -1;
  for (int x : lo)
    if (x == hi[0] || x == hi[1]) shared = x;
  if (shared < 0) {
    auto faces = q.faces();
    std::swap(faces[k - 1], faces[k]);
    return Quadrangulation(n, std::move(faces));
  }
  auto once = rotate_hexagon(q, k, shared);
  if (g.kind == Kind::U) return once;
  // The hexagon rewrite has order three.
  const auto lo2 = blacks_of(once.face(k - 1)), hi2 = blacks_of(once.face(k));
  int shared2 = lo2[0] == hi2[0] || lo2[0] == hi2[1] ? lo2[0] : lo2[1];
  return rotate_hexagon(once, k, shared2);
}

Quadrangulation act_word(const Quadrangulation& q, const BraidWord& w) {
  if (w.rank() != q.size()) throw RankError("braid word rank differs from quadrangulation size");
  Quadrangulation out = q;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out = act_generator(out, *it);
  return out;
}

LabeledTree to_tree(const Quadrangulation& q) {
  std::vector<TreeEdge> edges;
  for (const auto& f : q.faces()) {
    auto b = blacks_of(f);
    edges.push_back({b[0], b[1]});
  }
  return LabeledTree(std::move(edges));
}

namespace {

// Black vertices of the quadrangulation in counterclockwise order. At every
// tree vertex the incident edges appear counterclockwise by decreasing
// label, and the boundary gap sits between the smallest and largest label.
void layout(const LabeledTree& t, int v, int parent_label, std::vector<int>& out) {
  std::vector<int> labels = t.incident_labels(v);
  std::sort(labels.rbegin(), labels.rend());
  auto place_child = [&](int l) { layout(t, t.edge(l).other(v), l, out); };
  if (parent_label < 0) {
    out.push_back(v);
    for (int l : labels) place_child(l);
    return;
  }
  for (int l : labels)
    if (l < parent_label) place_child(l);
  out.push_back(v);
  for (int l : labels)
    if (l > parent_label) place_child(l);
}

std::vector<int> tree_path(const LabeledTree& t, int from, int to) {
  // Labels along the unique path from `from` to `to`.
  std::map<int, std::pair<int, int>> via;  // vertex -> (previous vertex, label)
  std::vector<int> stack{from};
  via[from] = {from, -1};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int l = 0; l < t.size(); ++l) {
      if (!t.edge(l).touches(v)) continue;
      int w = t.edge(l).other(v);
      if (via.count(w)) continue;
      via[w] = {v, l};
      stack.push_back(w);
    }
  }
  std::vector<int> labels;
  for (int v = to; v != from; v = via.at(v).first) labels.push_back(via.at(v).second);
  return labels;
}

}  // namespace

Quadrangulation from_tree(const LabeledTree& t) {
  const int n = t.size();
  std::vector<int> order;
  layout(t, t.vertices().front(), -1, order);
  std::map<int, int> position;
  for (int i = 0; i <= n; ++i) position[order[i]] = 2 * i + 1;
  std::vector<std::vector<int>> whites(n);
  for (int i = 0; i <= n; ++i) {
    const int w = 2 * i;
    const int left = order[mod(i - 1, n + 1)], right = order[i];
    for (int l : tree_path(t, left, right)) whites[l].push_back(w);
  }
  std::vector<Face> faces;
  for (int l = 0; l < n; ++l) {
    if (whites[l].size() != 2) throw std::logic_error("tree layout gave an edge without two sides");
    faces.push_back({position[t.edge(l).a], position[t.edge(l).b], whites[l][0], whites[l][1]});
  }
  return canonical_rotation(Quadrangulation(n, std::move(faces)));
}

Quadrangulation rotate(const Quadrangulation& q, int shift) {
  if (shift % 2 != 0) throw InvariantError("rotation must preserve colors (even shift)");
  const int m = q.polygon_size();
  auto faces = q.faces();
  for (auto& f : faces)
    for (int& v : f) v = mod(v + shift, m);
  return Quadrangulation(q.size(), std::move(faces));
}

Quadrangulation canonical_rotation(const Quadrangulation& q) {
  Quadrangulation best = q;
  for (int s = 2; s < q.polygon_size(); s += 2) best = std::min(best, rotate(q, s));
  return best;
}

bool equal(const Quadrangulation& a, const Quadrangulation& b) { return a == b; }

bool equal_up_to_rotation(const Quadrangulation& a, const Quadrangulation& b) {
  if (a.size() != b.size()) return false;
  return canonical_rotation(a) == canonical_rotation(b);
}

bool equal(const Quadrangulation& a, const Quadrangulation& b, Equality mode) {
  return mode == Equality::Strict ? equal(a, b) : equal_up_to_rotation(a, b);
}

namespace {

// Every dissection into quadrangles of the polygon on the vertices lo..hi.
std::vector<std::vector<Face>> dissections(int lo, int hi,
                                           std::map<std::pair<int, int>, std::vector<std::vector<Face>>>& memo) {
  if (hi - lo == 1) return {{}};
  if (auto it = memo.find({lo, hi}); it != memo.end()) return it->second;
  std::vector<std::vector<Face>> out;
  for (int a = lo + 1; a < hi; a += 2) {
    for (int b = a + 1; b < hi; b += 2) {
      auto left = dissections(lo, a, memo), middle = dissections(a, b, memo),
           right = dissections(b, hi, memo);
      for (const auto& x : left)
        for (const auto& y : middle)
          for (const auto& z : right) {
            std::vector<Face> faces{Face{lo, a, b, hi}};
            faces.insert(faces.end(), x.begin(), x.end());
            faces.insert(faces.end(), y.begin(), y.end());
            faces.insert(faces.end(), z.begin(), z.end());
            out.push_back(std::move(faces));
          }
    }
  }
  memo[{lo, hi}] = out;
  return out;
}

}  // namespace

std::vector<Quadrangulation> enumerate_monotone(int n, int max_n) {
  if (n < 1) throw RankError("enumeration needs N >= 1");
  if (n > max_n)
    throw GuardError("enumerating quadrangulations with N = " + std::to_string(n) +
                     " exceeds the limit " + std::to_string(max_n));
  std::map<std::pair<int, int>, std::vector<std::vector<Face>>> memo;
  std::set<Quadrangulation> found;
  for (const auto& faces : dissections(0, 2 * n + 1, memo)) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<Face> labeled(n);
      for (int i = 0; i < n; ++i) labeled[perm[i]] = faces[i];
      Quadrangulation q(n, std::move(labeled));
      if (is_monotone(q)) found.insert(q);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {found.begin(), found.end()};
}

std::string to_string(const Quadrangulation& q) {
  std::ostringstream out;
  out << "n: " << q.size() << '\n';
  for (int l = 0; l < q.size(); ++l) {
    const auto& f = q.face(l);
    out << l << ": " << f[0] << ' ' << f[1] << ' ' << f[2] << ' ' << f[3] << '\n';
  }
  return out.str();
}

Quadrangulation parse_quadrangulation(std::string_view text) {
  std::optional<int> n;
  std::map<int, Face> faces;
  int line_no = 0;
  for (auto raw : detail::split_lines(text)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto where = "quadrangulation line " + std::to_string(line_no) + ": ";
    auto kl = detail::split_keyed(line);
    if (!kl) throw ParseError(where + "expected '<key>: <values>'");
    if (kl->key == "n") {
      if (kl->values.size() == 1) n = detail::to_int(kl->values[0]);
      if (!n || *n < 1) throw ParseError(where + "expected 'n: <N>'");
      continue;
    }
    auto label = detail::to_int(kl->key);
    if (!label || *label < 0) throw ParseError(where + "bad label '" + std::string(kl->key) + "'");
    if (kl->values.size() != 4) throw ParseError(where + "a face needs four vertices");
    Face f{};
    for (int i = 0; i < 4; ++i) {
      auto v = detail::to_int(kl->values[i]);
      if (!v) throw ParseError(where + "bad vertex '" + std::string(kl->values[i]) + "'");
      f[i] = *v;
    }
    if (!faces.emplace(*label, f).second) throw ParseError(where + "duplicate label");
  }
  if (!n) throw ParseError("quadrangulation: missing 'n: <N>' line");
  std::vector<Face> by_label;
  for (auto& [label, f] : faces) {
    if (label != static_cast<int>(by_label.size()))
      throw ParseError("quadrangulation labels must be exactly 0..N-1");
    by_label.push_back(f);
  }
  try {
    return Quadrangulation(*n, std::move(by_label));
  } catch (const InvariantError& e) {
    throw ParseError(std::string("invalid quadrangulation: ") + e.what());
  }
}

namespace {

std::pair<double, double> corner(int v, int m) {
  const double pi = std::acos(-1.0);
  const double angle = 2.0 * pi * v / m;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

std::string to_dot(const Quadrangulation& q) {
  const int m = q.polygon_size();
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << "graph quadrangulation {\n  layout=neato;\n  node [shape=circle, fixedsize=true, width=0.3];\n";
  for (int v = 0; v < m; ++v) {
    auto [x, y] = corner(v, m);
    out << "  p" << v << " [label=\"" << v << "\", pos=\"" << 3 * x << ',' << 3 * y << "!\""
        << (is_white(v) ? "" : ", style=filled, fillcolor=black, fontcolor=white") << "];\n";
  }
  std::set<std::pair<int, int>> drawn;
  for (const auto& f : q.faces())
    for (int i = 0; i < 4; ++i) drawn.insert(chord(f[i], f[(i + 1) % 4]));
  for (auto [a, b] : drawn) out << "  p" << a << " -- p" << b << ";\n";
  for (int l = 0; l < q.size(); ++l) {
    double cx = 0, cy = 0;
    for (int v : q.face(l)) {
      auto [x, y] = corner(v, m);
      cx += 0.75 * x;
      cy += 0.75 * y;
    }
    out << "  f" << l << " [label=\"" << l << "\", shape=plaintext, pos=\"" << cx << ',' << cy
        << "!\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_svg(const Quadrangulation& q) {
  const int m = q.polygon_size();
  auto px = [](double c) { return 150.0 + 120.0 * c; };
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"300\" height=\"300\">\n";
  std::set<std::pair<int, int>> drawn;
  for (const auto& f : q.faces())
    for (int i = 0; i < 4; ++i) drawn.insert(chord(f[i], f[(i + 1) % 4]));
  for (auto [a, b] : drawn) {
    auto [x1, y1] = corner(a, m);
    auto [x2, y2] = corner(b, m);
    out << "  <line x1=\"" << px(x1) << "\" y1=\"" << px(-y1) << "\" x2=\"" << px(x2) << "\" y2=\""
        << px(-y2) << "\" stroke=\"black\"/>\n";
  }
  for (int v = 0; v < m; ++v) {
    auto [x, y] = corner(v, m);
    out << "  <circle cx=\"" << px(x) << "\" cy=\"" << px(-y) << "\" r=\"5\" stroke=\"black\" fill=\""
        << (is_white(v) ? "white" : "black") << "\"/>\n";
  }
  for (int l = 0; l < q.size(); ++l) {
    double cx = 0, cy = 0;
    for (int v : q.face(l)) {
      auto [x, y] = corner(v, m);
      cx += x / 4;
      cy += y / 4;
    }
    out << "  <text x=\"" << px(cx) << "\" y=\"" << px(-cy) << "\" text-anchor=\"middle\">" << l
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace bcn
