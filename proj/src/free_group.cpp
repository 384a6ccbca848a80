#include "bcn/free_group.hpp"

#include <cctype>
#include <sstream>

#include "bcn/errors.hpp"
#include "text_util.hpp"

namespace bcn {

namespace {

void check_same_rank(int a, int b) {
  if (a != b)
    throw RankError("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 0) throw RankError("negative rank");
}

FreeWord FreeWord::reduce(std::span<const Letter> raw, int rank) {
  FreeWord out(rank);
  out.letters_.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.gen < 0 || l.gen >= rank)
      throw RankError("generator s" + std::to_string(l.gen) + " out of range for rank " +
                      std::to_string(rank));
    if (l.exp != 1 && l.exp != -1) throw RankError("letter exponent must be +1 or -1");
    if (!out.letters_.empty() && out.letters_.back() == l.inverse())
      out.letters_.pop_back();
    else
      out.letters_.push_back(l);
  }
  return out;
}

FreeWord FreeWord::generator(int gen, int rank, int exp) {
  Letter l{gen, exp};
  return reduce(std::span<const Letter>(&l, 1), rank);
}

FreeWord multiply(const FreeWord& a, const FreeWord& b) {
  check_same_rank(a.rank(), b.rank());
  std::vector<Letter> raw(a.letters().begin(), a.letters().end());
  raw.insert(raw.end(), b.letters().begin(), b.letters().end());
  return FreeWord::reduce(raw, a.rank());
}

FreeWord invert(const FreeWord& a) {
  std::vector<Letter> raw;
  raw.reserve(a.length());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) raw.push_back(it->inverse());
  return FreeWord::reduce(raw, a.rank());
}

FreeAutomorphism::FreeAutomorphism(std::vector<FreeWord> images) : images_(std::move(images)) {
  for (const auto& w : images_) check_same_rank(w.rank(), rank());
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  std::vector<FreeWord> images;
  images.reserve(rank);
  for (int k = 0; k < rank; ++k) images.push_back(FreeWord::generator(k, rank));
  return FreeAutomorphism(std::move(images));
}

FreeWord apply_automorphism(const FreeAutomorphism& f, const FreeWord& w) {
  check_same_rank(f.rank(), w.rank());
  std::vector<Letter> raw;
  for (const Letter& l : w.letters()) {
    auto img = f.image(l.gen).letters();
    if (l.exp > 0) {
      raw.insert(raw.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) raw.push_back(it->inverse());
    }
  }
  return FreeWord::reduce(raw, w.rank());
}

FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g) {
  check_same_rank(f.rank(), g.rank());
  std::vector<FreeWord> images;
  images.reserve(g.rank());
  for (const auto& img : g.images()) images.push_back(apply_automorphism(f, img));
  return FreeAutomorphism(std::move(images));
}

bool automorphisms_equal(const FreeAutomorphism& f, const FreeAutomorphism& g) {
  check_same_rank(f.rank(), g.rank());
  return f == g;
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) out << ' ';
    first = false;
    out << 's' << l.gen;
    if (l.exp < 0) out << '\'';
  }
  return out.str();
}

FreeWord parse_free_word(std::string_view text, int rank) {
  auto tokens = detail::split_ws(text);
  if (tokens.size() == 1 && tokens[0] == "1") return FreeWord(rank);
  std::vector<Letter> raw;
  for (auto tok : tokens) {
    std::string_view body = tok;
    int exp = 1;
    if (!body.empty() && body.back() == '\'') {
      exp = -1;
      body.remove_suffix(1);
    }
    if (body.size() < 2 || body.front() != 's')
      throw ParseError("bad free-group token '" + std::string(tok) + "'");
    auto gen = detail::to_int(body.substr(1));
    if (!gen || *gen < 0 || *gen >= rank)
      throw ParseError("bad free-group token '" + std::string(tok) + "' for rank " +
                       std::to_string(rank));
    raw.push_back({*gen, exp});
  }
  return FreeWord::reduce(raw, rank);
}

}  // namespace bcn
