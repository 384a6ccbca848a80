#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "bcn/free_group.hpp"

namespace bcn {

/// Generator of the braid-cyclic group BC_N: the rotation lambda, the braid
/// generators u_1..u_{N-1} (1-based, as in the classical presentation), and
/// their inverses.
struct BraidGenerator {
  enum class Kind { Lambda, LambdaInv, U, UInv };
  Kind kind = Kind::Lambda;
  int index = 0;  // 1..N-1 for U/UInv, unused (0) for Lambda/LambdaInv

  static BraidGenerator lambda() { return {Kind::Lambda, 0}; }
  static BraidGenerator lambda_inv() { return {Kind::LambdaInv, 0}; }
  static BraidGenerator u(int k) { return {Kind::U, k}; }
  static BraidGenerator u_inv(int k) { return {Kind::UInv, k}; }

  bool is_lambda() const { return kind == Kind::Lambda || kind == Kind::LambdaInv; }
  bool is_inverse() const { return kind == Kind::LambdaInv || kind == Kind::UInv; }
  BraidGenerator inverse() const;

  friend auto operator<=>(const BraidGenerator&, const BraidGenerator&) = default;
};

/// All generators and inverses for rank N, in a fixed order:
/// L, L', u1, u1', u2, u2', ...
std::vector<BraidGenerator> all_generators(int rank);

/// Word in the generators of BC_N. No normal form: equality of group
/// elements is semantic, see words_equal.
class BraidWord {
 public:
  explicit BraidWord(int rank = 0, std::vector<BraidGenerator> letters = {});

  int rank() const { return rank_; }
  const std::vector<BraidGenerator>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Repeated letter, e.g. power(L, N).
  static BraidWord power(int rank, BraidGenerator g, int times);

  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

 private:
  int rank_;
  std::vector<BraidGenerator> letters_;
};

BraidWord concat(const BraidWord& a, const BraidWord& b);
inline BraidWord operator*(const BraidWord& a, const BraidWord& b) { return concat(a, b); }

/// Group inverse: reversed word with every letter inverted.
BraidWord inverse(const BraidWord& w);

/// Cancels adjacent g g^-1 pairs. Purely cosmetic; never changes the element.
BraidWord cancel_adjacent(const BraidWord& w);

/// The anti-automorphism fixing every u_k and sending lambda to lambda^-1.
BraidWord inv(const BraidWord& w);

FreeAutomorphism generator_automorphism(BraidGenerator g, int rank);

/// Image in Aut(F_N); the leftmost letter is applied last.
FreeAutomorphism to_automorphism(const BraidWord& w);

/// Semantic equality through the faithful representation in Aut(F_N).
bool words_equal(const BraidWord& a, const BraidWord& b);

/// Induced permutation of the labels 0..N-1: u_k swaps k-1 and k, lambda is
/// i -> i+1 mod N. perm[i] is the image of i.
std::vector<int> label_permutation(const BraidWord& w);

/// One instance of a defining relation lhs = rhs of BC_N.
struct RelationInstance {
  std::string name;
  BraidWord lhs;
  BraidWord rhs;
};

/// Every instance of: lambda^N = 1; lambda u_k = u_{k+1} lambda;
/// u_k u_l = u_l u_k for |k-l| >= 2; u_k u_{k+1} u_k = u_{k+1} u_k u_{k+1}.
std::vector<RelationInstance> relation_instances(int rank);

struct RelationCheck {
  std::string name;
  bool holds = false;
};

struct RelationReport {
  int rank = 0;
  std::vector<RelationCheck> checks;
  bool all_hold() const;
};

/// Verifies every relation instance as an identity of automorphisms of F_N.
RelationReport check_relations(int rank);

/// `L u1 u3' L'`; the empty word is written `1`.
std::string to_string(const BraidWord& w);
std::string to_string(BraidGenerator g);
BraidWord parse_braid_word(std::string_view text, int rank);

}  // namespace bcn
