#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "bcn/braid.hpp"
#include "bcn/tree.hpp"

namespace bcn {

using Face = std::array<int, 4>;

/// Tiling of the (2N+2)-gon, vertices 0..2N+1 counterclockwise, by N
/// quadrangles labeled 0..N-1. Even vertices are white, odd are black.
/// faces()[label] lists the face's vertices in increasing order, which for a
/// convex polygon is counterclockwise starting from the smallest index.
class Quadrangulation {
 public:
  /// Validates that the faces tile the polygon with alternating colors.
  Quadrangulation(int n, std::vector<Face> faces_by_label);

  int size() const { return n_; }
  int polygon_size() const { return 2 * n_ + 2; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int label) const { return faces_.at(label); }

  friend auto operator<=>(const Quadrangulation&, const Quadrangulation&) = default;

 private:
  int n_;
  std::vector<Face> faces_;
};

enum class Equality { Strict, Rotational };

inline bool is_white(int vertex) { return vertex % 2 == 0; }

/// At every polygon vertex the counterclockwise fan order of the incident
/// faces must agree with the label order at white vertices and reverse it
/// at black vertices.
bool is_monotone(const Quadrangulation& q);

/// All faces share the black vertex 1; face (1, 2j, 2j+1, 2j+2) carries
/// label N-j.
Quadrangulation trivial_quadrangulation(int n);

/// Throws InvariantError on non-monotone input.
Quadrangulation act_generator(const Quadrangulation& q, BraidGenerator g);
/// Leftmost letter acts last.
Quadrangulation act_word(const Quadrangulation& q, const BraidWord& w);

/// Tree of black diagonals; vertex ids are the black polygon indices.
LabeledTree to_tree(const Quadrangulation& q);
/// The monotone quadrangulation whose black-diagonal tree is t, in canonical
/// rotation.
Quadrangulation from_tree(const LabeledTree& t);

/// Color-preserving rotation by an even number of positions.
Quadrangulation rotate(const Quadrangulation& q, int shift);
/// Lexicographically smallest among all color-preserving rotations.
Quadrangulation canonical_rotation(const Quadrangulation& q);
bool equal(const Quadrangulation& a, const Quadrangulation& b);
bool equal_up_to_rotation(const Quadrangulation& a, const Quadrangulation& b);
bool equal(const Quadrangulation& a, const Quadrangulation& b, Equality mode);

inline constexpr int kDefaultMaxQuadEnumerate = 5;
/// Every monotone quadrangulation (strictly distinct), sorted.
std::vector<Quadrangulation> enumerate_monotone(int n, int max_n = kDefaultMaxQuadEnumerate);

/// `n: N` then one `label: v0 v1 v2 v3` line per face.
std::string to_string(const Quadrangulation& q);
Quadrangulation parse_quadrangulation(std::string_view text);
std::string to_dot(const Quadrangulation& q);
std::string to_svg(const Quadrangulation& q);

}  // namespace bcn
