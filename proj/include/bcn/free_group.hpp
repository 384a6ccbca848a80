#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bcn {

/// One signed letter s_gen^exp of a free group, exp is +1 or -1.
struct Letter {
  int gen = 0;
  int exp = 1;

  Letter inverse() const { return {gen, -exp}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the free generators s_0..s_{rank-1}.
///
/// Every constructor reduces, so two FreeWords denote the same group element
/// iff they compare equal.
class FreeWord {
 public:
  explicit FreeWord(int rank = 0);

  /// Free reduction of an arbitrary letter sequence (stack scan).
  static FreeWord reduce(std::span<const Letter> raw, int rank);
  static FreeWord generator(int gen, int rank, int exp = 1);

  int rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_;
  std::vector<Letter> letters_;
};

FreeWord multiply(const FreeWord& a, const FreeWord& b);
FreeWord invert(const FreeWord& a);
inline FreeWord operator*(const FreeWord& a, const FreeWord& b) { return multiply(a, b); }

/// Automorphism of F_rank given by the images of the free generators.
/// Acts on the left: compose(f, g) applies g first.
class FreeAutomorphism {
 public:
  explicit FreeAutomorphism(std::vector<FreeWord> images);

  static FreeAutomorphism identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const FreeWord& image(int gen) const { return images_.at(gen); }
  const std::vector<FreeWord>& images() const { return images_; }

  friend auto operator<=>(const FreeAutomorphism&, const FreeAutomorphism&) = default;

 private:
  std::vector<FreeWord> images_;
};

FreeWord apply_automorphism(const FreeAutomorphism& f, const FreeWord& w);
FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g);
bool automorphisms_equal(const FreeAutomorphism& f, const FreeAutomorphism& g);

/// `s1 s0' s1`; the empty word is written `1`.
std::string to_string(const FreeWord& w);
FreeWord parse_free_word(std::string_view text, int rank);

}  // namespace bcn
