#include "bcn/orbit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "bcn/errors.hpp"

namespace bcn {

namespace {

// Images of every (frontier state, generator) pair. Workers write disjoint
// slots, so the merge below sees the same data for any job count.
template <class State>
std::vector<State> level_images(const std::vector<const State*>& frontier,
                                const std::vector<BraidGenerator>& gens, int jobs) {
  const std::size_t total = frontier.size() * gens.size();
  std::vector<std::optional<State>> slots(total);
  auto work = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i)
      slots[i] = act_generator(*frontier[i / gens.size()], gens[i % gens.size()]);
  };
  std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, total / 64));
  if (workers <= 1) {
    work(0, total);
  } else {
    std::vector<std::jthread> pool;
    std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(work, std::min(total, w * chunk), std::min(total, (w + 1) * chunk));
  }
  std::vector<State> out;
  out.reserve(total);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

template <class State, class KeyFn>
OrbitResult<State> bfs(const State& start, int rank, KeyFn key, const OrbitOptions& options) {
  using Key = decltype(key(start));
  const auto gens = all_generators(rank);
  std::vector<State> elements{start};
  std::vector<BraidWord> words{BraidWord(rank)};
  std::vector<Key> keys{key(start)};
  std::map<Key, std::size_t> index{{keys[0], 0}};
  std::set<BraidWord> schreier;

  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<const State*> states;
    for (auto i : frontier) states.push_back(&elements[i]);
    auto images = level_images(states, gens, options.jobs);
    std::vector<std::size_t> next;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      const std::size_t x = frontier[f];
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto& image = images[f * gens.size() + g];
        auto k = key(image);
        auto it = index.find(k);
        BraidWord step(rank, {gens[g]});
        if (it == index.end()) {
          if (elements.size() >= options.max_orbit)
            throw GuardError("orbit exceeds the limit of " + std::to_string(options.max_orbit) +
                             " elements");
          index.emplace(k, elements.size());
          next.push_back(elements.size());
          elements.push_back(std::move(image));
          words.push_back(step * words[x]);
          keys.push_back(std::move(k));
        } else if (options.schreier) {
          auto s = cancel_adjacent(inverse(words[it->second]) * step * words[x]);
          if (!s.empty()) schreier.insert(std::move(s));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
  OrbitResult<State> result;
  for (auto i : order) {
    result.elements.push_back(std::move(elements[i]));
    result.transversal.push_back(std::move(words[i]));
  }
  result.schreier_generators.assign(schreier.begin(), schreier.end());
  return result;
}

}  // namespace

OrbitResult<LabeledTree> orbit(const LabeledTree& start, const OrbitOptions& options) {
  return bfs(start.with_root(std::nullopt), start.size(),
             [](const LabeledTree& t) { return canonical_form(t); }, options);
}

OrbitResult<Quadrangulation> orbit(const Quadrangulation& start, const OrbitOptions& options) {
  if (!is_monotone(start)) throw InvariantError("orbit start is not monotone");
  if (options.equality == Equality::Strict)
    return bfs(start, start.size(), [](const Quadrangulation& q) { return q; }, options);
  return bfs(start, start.size(), [](const Quadrangulation& q) { return canonical_rotation(q); },
             options);
}

bool is_liftable(const BraidWord& w, Equality equality) {
  auto q0 = trivial_quadrangulation(w.rank());
  return equal(act_word(q0, inv(w)), q0, equality);
}

BraidWord lambda_word(int rank) { return BraidWord(rank, {BraidGenerator::lambda()}); }

BraidWord u_product(int rank) {
  std::vector<BraidGenerator> letters;
  for (int k = 1; k < rank; ++k) letters.push_back(BraidGenerator::u(k));
  return BraidWord(rank, std::move(letters));
}

std::size_t stabilizer_index(int rank, const OrbitOptions& options) {
  auto o = options;
  o.schreier = false;
  return orbit(trivial_quadrangulation(rank), o).size();
}

OrbitComparison compare_equalities(int rank, const OrbitOptions& options) {
  auto o = options;
  o.schreier = false;
  OrbitComparison c{rank, 0, 0, 0};
  o.equality = Equality::Strict;
  c.strict_size = stabilizer_index(rank, o);
  o.equality = Equality::Rotational;
  c.rotational_size = stabilizer_index(rank, o);
  c.tree_size = orbit(to_tree(trivial_quadrangulation(rank)), o).size();
  return c;
}

std::string to_string(const ProbeWord& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << (w[i].is_u ? 'U' : 'L');
    if (w[i].exp != 1) out << '^' << w[i].exp;
  }
  return out.str();
}

BraidWord expand(const ProbeWord& w, int rank) {
  BraidWord out(rank);
  const auto l = lambda_word(rank), u = u_product(rank);
  for (const auto& s : w) {
    auto piece = s.is_u ? u : l;
    if (s.exp < 0) piece = inverse(piece);
    for (int i = 0; i < std::abs(s.exp); ++i) out = out * piece;
  }
  return out;
}

namespace {

class Prober {
 public:
  Prober(int rank, int max_len, Equality equality)
      : rank_(rank), max_len_(max_len), equality_(equality), q0_(trivial_quadrangulation(rank)) {
    report_.rank = rank;
    report_.max_len = max_len;
    report_.equality = equality;
    // Syllables L^a for a in Z_N \ {0}, written with the shorter exponent.
    for (int a = 1; a < rank; ++a) {
      int e = a <= rank - a ? a : a - rank;
      syllables_.push_back({false, e});
    }
    for (int b = 1; b <= max_len; ++b) {
      syllables_.push_back({true, b});
      syllables_.push_back({true, -b});
    }
    seen_.emplace(FreeAutomorphism::identity(rank), ProbeWord{});
  }

  ProbeReport run() {
    ProbeWord w;
    walk(w, 0, FreeAutomorphism::identity(rank_), q0_);
    return std::move(report_);
  }

  const std::map<FreeAutomorphism, ProbeWord>& seen() const { return seen_; }

 private:
  void walk(ProbeWord& w, int len, const FreeAutomorphism& f, const Quadrangulation& q) {
    for (const auto& s : syllables_) {
      int cost = std::abs(s.exp);
      if (len + cost > max_len_) continue;
      if (!w.empty() && w.back().is_u == s.is_u) continue;
      auto word = expand({s}, rank_);
      auto g = compose(f, to_automorphism(word));
      auto r = act_word(q, inv(word));
      w.push_back(s);
      ++report_.words;
      if (!equal(r, q0_, equality_)) report_.not_liftable.push_back(w);
      auto [it, fresh] = seen_.emplace(g, w);
      if (!fresh) {
        if (it->second.empty())
          report_.identities.push_back(w);
        else
          report_.collisions.emplace_back(it->second, w);
      }
      walk(w, len + cost, g, r);
      w.pop_back();
    }
  }

  int rank_, max_len_;
  Equality equality_;
  Quadrangulation q0_;
  std::vector<ProbeSyllable> syllables_;
  std::map<FreeAutomorphism, ProbeWord> seen_;
  ProbeReport report_;
};

}  // namespace

ProbeReport conjecture_probe(int rank, int max_len, const OrbitOptions& options) {
  if (max_len < 0) throw GuardError("max_len must be nonnegative");
  Prober prober(rank, max_len, options.equality);
  auto report = prober.run();
  auto o = options;
  o.schreier = true;
  auto stab = orbit(trivial_quadrangulation(rank), o);
  report.schreier_total = stab.schreier_generators.size();
  for (const auto& s : stab.schreier_generators)
    report.schreier_expressible += prober.seen().count(to_automorphism(inv(s)));
  return report;
}

}  // namespace bcn
