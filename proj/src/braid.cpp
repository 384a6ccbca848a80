#include "bcn/braid.hpp"

#include <numeric>
#include <sstream>

#include "bcn/errors.hpp"
#include "text_util.hpp"

namespace bcn {

namespace {

using Kind = BraidGenerator::Kind;

void validate(BraidGenerator g, int rank) {
  if (g.is_lambda()) return;
  if (g.index < 1 || g.index > rank - 1)
    throw RankError("u" + std::to_string(g.index) + " out of range for rank " +
                    std::to_string(rank));
}

FreeWord word_of(int rank, std::initializer_list<Letter> letters) {
  return FreeWord::reduce(std::vector<Letter>(letters), rank);
}

}  // namespace

BraidGenerator BraidGenerator::inverse() const {
  switch (kind) {
    case Kind::Lambda: return lambda_inv();
    case Kind::LambdaInv: return lambda();
    case Kind::U: return u_inv(index);
    case Kind::UInv: return u(index);
  }
  return *this;
}

std::vector<BraidGenerator> all_generators(int rank) {
  std::vector<BraidGenerator> gens{BraidGenerator::lambda(), BraidGenerator::lambda_inv()};
  for (int k = 1; k < rank; ++k) {
    gens.push_back(BraidGenerator::u(k));
    gens.push_back(BraidGenerator::u_inv(k));
  }
  return gens;
}

BraidWord::BraidWord(int rank, std::vector<BraidGenerator> letters)
    : rank_(rank), letters_(std::move(letters)) {
  if (rank < 0) throw RankError("negative rank");
  for (auto g : letters_) validate(g, rank_);
}

BraidWord BraidWord::power(int rank, BraidGenerator g, int times) {
  return BraidWord(rank, std::vector<BraidGenerator>(static_cast<std::size_t>(times), g));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.rank() != b.rank()) throw RankError("rank mismatch in braid word product");
  auto letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.rank(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<BraidGenerator> letters;
  letters.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    letters.push_back(it->inverse());
  return BraidWord(w.rank(), std::move(letters));
}

BraidWord cancel_adjacent(const BraidWord& w) {
  std::vector<BraidGenerator> out;
  for (auto g : w.letters()) {
    if (!out.empty() && out.back() == g.inverse())
      out.pop_back();
    else
      out.push_back(g);
  }
  return BraidWord(w.rank(), std::move(out));
}

BraidWord inv(const BraidWord& w) {
  std::vector<BraidGenerator> letters;
  letters.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    letters.push_back(it->is_lambda() ? it->inverse() : *it);
  return BraidWord(w.rank(), std::move(letters));
}

FreeAutomorphism generator_automorphism(BraidGenerator g, int rank) {
  validate(g, rank);
  std::vector<FreeWord> images;
  images.reserve(rank);
  for (int l = 0; l < rank; ++l) images.push_back(FreeWord::generator(l, rank));
  const int k = g.index;
  switch (g.kind) {
    case Kind::Lambda:
      for (int l = 0; l < rank; ++l) images[l] = FreeWord::generator((l + 1) % rank, rank);
      break;
    case Kind::LambdaInv:
      for (int l = 0; l < rank; ++l) images[l] = FreeWord::generator((l + rank - 1) % rank, rank);
      break;
    case Kind::U:
      // s_{k-1} -> s_k,  s_k -> s_k^-1 s_{k-1} s_k
      images[k - 1] = FreeWord::generator(k, rank);
      images[k] = word_of(rank, {{k, -1}, {k - 1, 1}, {k, 1}});
      break;
    case Kind::UInv:
      // s_k -> s_{k-1},  s_{k-1} -> s_{k-1} s_k s_{k-1}^-1
      images[k] = FreeWord::generator(k - 1, rank);
      images[k - 1] = word_of(rank, {{k - 1, 1}, {k, 1}, {k - 1, -1}});
      break;
  }
  return FreeAutomorphism(std::move(images));
}

FreeAutomorphism to_automorphism(const BraidWord& w) {
  auto result = FreeAutomorphism::identity(w.rank());
  for (auto g : w.letters()) result = compose(result, generator_automorphism(g, w.rank()));
  return result;
}

bool words_equal(const BraidWord& a, const BraidWord& b) {
  if (a.rank() != b.rank()) throw RankError("rank mismatch in words_equal");
  return to_automorphism(a) == to_automorphism(b);
}

std::vector<int> label_permutation(const BraidWord& w) {
  const int n = w.rank();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Leftmost letter acts last, so fold from the right.
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    for (int& p : perm) {
      switch (it->kind) {
        case Kind::Lambda: p = (p + 1) % n; break;
        case Kind::LambdaInv: p = (p + n - 1) % n; break;
        case Kind::U:
        case Kind::UInv:
          if (p == it->index - 1)
            p = it->index;
          else if (p == it->index)
            p = it->index - 1;
          break;
      }
    }
  }
  return perm;
}

std::vector<RelationInstance> relation_instances(int n) {
  using G = BraidGenerator;
  std::vector<RelationInstance> out;
  auto word = [n](std::vector<G> gs) { return BraidWord(n, std::move(gs)); };
  out.push_back({"L^" + std::to_string(n) + " = 1", BraidWord::power(n, G::lambda(), n), word({})});
  for (int k = 1; k <= n - 2; ++k) {
    out.push_back({"L u" + std::to_string(k) + " = u" + std::to_string(k + 1) + " L",
                   word({G::lambda(), G::u(k)}), word({G::u(k + 1), G::lambda()})});
  }
  for (int k = 1; k <= n - 1; ++k) {
    for (int l = k + 2; l <= n - 1; ++l) {
      out.push_back({"u" + std::to_string(k) + " u" + std::to_string(l) + " = u" +
                         std::to_string(l) + " u" + std::to_string(k),
                     word({G::u(k), G::u(l)}), word({G::u(l), G::u(k)})});
    }
  }
  for (int k = 1; k <= n - 2; ++k) {
    const auto a = std::to_string(k), b = std::to_string(k + 1);
    out.push_back({"u" + a + " u" + b + " u" + a + " = u" + b + " u" + a + " u" + b,
                   word({G::u(k), G::u(k + 1), G::u(k)}),
                   word({G::u(k + 1), G::u(k), G::u(k + 1)})});
  }
  return out;
}

bool RelationReport::all_hold() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

RelationReport check_relations(int rank) {
  if (rank < 2) throw RankError("relation check needs rank >= 2");
  RelationReport report{rank, {}};
  for (const auto& rel : relation_instances(rank))
    report.checks.push_back({rel.name, words_equal(rel.lhs, rel.rhs)});
  return report;
}

std::string to_string(BraidGenerator g) {
  switch (g.kind) {
    case Kind::Lambda: return "L";
    case Kind::LambdaInv: return "L'";
    case Kind::U: return "u" + std::to_string(g.index);
    case Kind::UInv: return "u" + std::to_string(g.index) + "'";
  }
  return "?";
}

std::string to_string(const BraidWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (auto g : w.letters()) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out;
}

BraidWord parse_braid_word(std::string_view text, int rank) {
  auto tokens = detail::split_ws(text);
  std::vector<BraidGenerator> letters;
  if (tokens.size() == 1 && tokens[0] == "1") return BraidWord(rank);
  for (auto tok : tokens) {
    std::string_view body = tok;
    bool inverse = false;
    if (!body.empty() && body.back() == '\'') {
      inverse = true;
      body.remove_suffix(1);
    }
    if (body == "L") {
      letters.push_back(inverse ? BraidGenerator::lambda_inv() : BraidGenerator::lambda());
      continue;
    }
    std::optional<int> k;
    if (body.size() >= 2 && body.front() == 'u') k = detail::to_int(body.substr(1));
    if (!k || *k < 1 || *k > rank - 1)
      throw ParseError("bad braid token '" + std::string(tok) + "' for rank " +
                       std::to_string(rank));
    letters.push_back(inverse ? BraidGenerator::u_inv(*k) : BraidGenerator::u(*k));
  }
  return BraidWord(rank, std::move(letters));
}

}  // namespace bcn
