// bcn: command-line front end for the braid-cyclic group actions.
//
// Exit codes: 0 success, 1 a check failed or internal error, 2 malformed
// input (parse, rank or invariant errors, bad usage), 3 resource guard.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "bcn/braid.hpp"
#include "bcn/covering.hpp"
#include "bcn/errors.hpp"
#include "bcn/free_group.hpp"
#include "bcn/orbit.hpp"
#include "bcn/quadrangulation.hpp"
#include "bcn/tree.hpp"

using namespace bcn;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

struct Config {
  int n = 0;
  bool strict = false;
  int jobs = 1;
  std::size_t max_orbit = kDefaultMaxOrbit;
  std::size_t max_word = 100000;
  std::string format = "text";
  unsigned seed = 1;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// --n is optional when the rank can be read off the input, but must agree.
int resolve_rank(const Config& cfg, int detected) {
  if (cfg.n != 0 && cfg.n != detected)
    throw RankError("--n " + std::to_string(cfg.n) + " but the input has rank " +
                    std::to_string(detected));
  return detected;
}

int require_rank(const Config& cfg) {
  if (cfg.n < 1) throw ParseError("--n <rank> is required");
  return cfg.n;
}

BraidWord read_word(const Config& cfg, const std::string& text, int rank) {
  auto w = parse_braid_word(text, rank);
  if (w.length() > cfg.max_word)
    throw GuardError("word longer than --max-word " + std::to_string(cfg.max_word));
  return w;
}

Equality equality(const Config& cfg) { return cfg.strict ? Equality::Strict : Equality::Rotational; }
const char* equality_name(Equality e) { return e == Equality::Strict ? "strict" : "rotational"; }

void require_format(const Config& cfg, std::initializer_list<std::string_view> allowed) {
  for (auto f : allowed)
    if (cfg.format == f) return;
  throw ParseError("--format " + cfg.format + " is not supported by this command");
}

json tree_json(const LabeledTree& t) {
  json edges = json::array();
  for (const auto& e : t.edges()) edges.push_back({e.a, e.b});
  json out{{"edges", edges}};
  if (t.root()) out["root"] = *t.root();
  return out;
}

json quad_json(const Quadrangulation& q) {
  json faces = json::array();
  for (const auto& f : q.faces()) faces.push_back(f);
  return {{"n", q.size()}, {"faces", faces}};
}

void print_tree(const Config& cfg, const LabeledTree& t) {
  require_format(cfg, {"text", "dot", "ndjson"});
  if (cfg.format == "dot")
    std::cout << to_dot(t);
  else if (cfg.format == "ndjson")
    std::cout << tree_json(t).dump() << '\n';
  else
    std::cout << to_string(t);
}

void print_quad(const Config& cfg, const Quadrangulation& q) {
  require_format(cfg, {"text", "dot", "ndjson"});
  if (cfg.format == "dot")
    std::cout << to_dot(q);
  else if (cfg.format == "ndjson")
    std::cout << quad_json(q).dump() << '\n';
  else
    std::cout << to_string(q);
}

void print_covering(const Config& cfg, const TreeLikeCovering& c) {
  require_format(cfg, {"text", "dot"});
  std::cout << (cfg.format == "dot" ? to_dot(c) : to_string(c));
}

template <class State, class ToText, class ToJson>
void print_orbit(const Config& cfg, const char* of, const OrbitResult<State>& o, ToText text,
                 ToJson to_json) {
  require_format(cfg, {"text", "ndjson"});
  const bool quad = std::string_view(of) == "quad";
  if (cfg.format == "ndjson") {
    json summary{{"type", "summary"}, {"of", of}, {"n", cfg.n}};
    if (quad) summary["equality"] = equality_name(equality(cfg));
    summary["size"] = o.size();
    summary["schreier"] = o.schreier_generators.size();
    std::cout << summary.dump() << '\n';
    for (std::size_t i = 0; i < o.size(); ++i)
      std::cout << json{{"type", "element"},
                        {"index", i},
                        {"word", to_string(o.transversal[i])},
                        {"object", to_json(o.elements[i])}}
                       .dump()
                << '\n';
    for (std::size_t i = 0; i < o.schreier_generators.size(); ++i)
      std::cout << json{{"type", "schreier"}, {"index", i}, {"word", to_string(o.schreier_generators[i])}}
                       .dump()
                << '\n';
    return;
  }
  std::cout << "orbit: " << of << "\nn: " << cfg.n << '\n';
  if (quad) std::cout << "equality: " << equality_name(equality(cfg)) << '\n';
  std::cout << "size: " << o.size() << "\nschreier: " << o.schreier_generators.size() << '\n';
  for (std::size_t i = 0; i < o.size(); ++i)
    std::cout << "\nelement " << i << ": " << to_string(o.transversal[i]) << '\n' << text(o.elements[i]);
  if (!o.schreier_generators.empty()) std::cout << '\n';
  for (std::size_t i = 0; i < o.schreier_generators.size(); ++i)
    std::cout << "schreier " << i << ": " << to_string(o.schreier_generators[i]) << '\n';
}

std::vector<FreeWord> read_free_words(const std::string& text, int rank) {
  std::vector<FreeWord> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_free_word(line, rank));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

TreeLikeCovering random_covering(std::mt19937& rng, int n) {
  // Random recursive tree with shuffled labels; not uniform, which is fine
  // for spot checks.
  std::vector<TreeEdge> edges;
  for (int v = 1; v <= n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.push_back({parent(rng), v});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  std::uniform_int_distribution<int> base(0, n);
  return TreeLikeCovering(edges, base(rng));
}

BraidWord random_braid_word(std::mt19937& rng, int n, int max_len) {
  auto gens = all_generators(n);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::vector<BraidGenerator> letters;
  for (int i = len(rng); i > 0; --i) letters.push_back(gens[pick(rng)]);
  return BraidWord(n, std::move(letters));
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Braid-cyclic group actions on free groups, trees, quadrangulations and coverings",
               "bcn"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--n", cfg.n, "Rank N")->check(CLI::PositiveNumber);
  app.add_flag("--strict", cfg.strict, "Compare quadrangulations strictly instead of up to rotation");
  app.add_option("--jobs", cfg.jobs, "Worker threads for orbit computations")->check(CLI::PositiveNumber);
  app.add_option("--max-orbit", cfg.max_orbit, "Largest orbit before giving up")->check(CLI::PositiveNumber);
  app.add_option("--max-word", cfg.max_word, "Longest accepted braid word")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "dot", "ndjson"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");

  std::string word, input, of = "tree";
  bool count_only = false;
  int max_len = 6, random_count = 0;

  auto with_word = [&](CLI::App* sub) {
    sub->add_option("word", word, "Braid word, e.g. \"L u1 u2'\"")->required();
    sub->add_option("input", input, "Input file, default standard input");
    return sub;
  };
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Input file, default standard input");
    return sub;
  };

  auto* act_tree = with_word(app.add_subcommand("act-tree", "Apply a braid word to a tree"));
  auto* act_quad = with_word(app.add_subcommand("act-quad", "Apply a braid word to a monotone quadrangulation"));
  auto* act_cover = with_word(app.add_subcommand("act-cover", "Apply a braid word to a tree-like covering"));
  auto* to_tree_cmd = with_input(app.add_subcommand("to-tree", "Tree of black diagonals of a quadrangulation"));
  auto* from_tree_cmd = with_input(app.add_subcommand("from-tree", "Monotone quadrangulation of a tree"));
  auto* liftable = app.add_subcommand("liftable", "Whether a braid word is liftable");
  liftable->add_option("word", word, "Braid word")->required();
  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of the bush tree or the trivial quadrangulation");
  orbit_cmd->add_option("--of", of, "tree or quad")->check(CLI::IsMember({"tree", "quad"}));
  orbit_cmd->add_flag("--count-only", count_only, "Print only the orbit size");
  with_input(orbit_cmd)->description("Orbit of a start object (default: bush tree or trivial quadrangulation)");
  auto* compare_cmd = app.add_subcommand("compare-equalities",
                                         "Strict and rotational orbit sizes of the trivial quadrangulation");
  auto* canonicalize = with_input(app.add_subcommand("canonicalize", "Braid word carrying a tree to the bush"));
  auto* check_relations_cmd = app.add_subcommand("check-relations", "Check the defining relations");
  auto* enumerate = app.add_subcommand("enumerate-trees", "All trees with N labeled edges");
  enumerate->add_flag("--count-only", count_only, "Print only the count");
  auto* membership_cmd = app.add_subcommand("membership", "Whether a free word lies in a covering's subgroup");
  membership_cmd->add_option("word", word, "Free word, e.g. \"s0 s1'\"")->required();
  with_input(membership_cmd);
  auto* generators_cmd = with_input(app.add_subcommand("generators", "Subgroup generators of a covering"));
  auto* fold_cmd = with_input(app.add_subcommand("fold", "Stallings folding of free words, one per line"));
  auto* verify_cmd = app.add_subcommand("verify-covering-action",
                                        "Check that a braid word maps the covering subgroup correctly");
  verify_cmd->add_option("word", word, "Braid word");
  verify_cmd->add_option("input", input, "Covering file, default standard input");
  verify_cmd->add_option("--random", random_count, "Check this many random (word, covering) pairs instead");
  auto* probe = app.add_subcommand("conjecture-probe", "Heuristic probe of the liftable subgroup");
  probe->add_option("--max-len", max_len, "Longest probed word")->check(CLI::NonNegativeNumber);
  auto* export_dot = with_input(app.add_subcommand("export-dot", "DOT drawing of a tree, quadrangulation or covering"));
  export_dot->add_option("--of", of, "tree, quad or cover")->check(CLI::IsMember({"tree", "quad", "cover"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  OrbitOptions orbit_options;
  orbit_options.equality = equality(cfg);
  orbit_options.jobs = cfg.jobs;
  orbit_options.max_orbit = cfg.max_orbit;

  try {
    if (act_tree->parsed()) {
      auto t = parse_tree(read_input(input));
      int n = resolve_rank(cfg, t.size());
      print_tree(cfg, act_word(t, read_word(cfg, word, n)));
    } else if (act_quad->parsed()) {
      auto q = parse_quadrangulation(read_input(input));
      int n = resolve_rank(cfg, q.size());
      print_quad(cfg, act_word(q, read_word(cfg, word, n)));
    } else if (act_cover->parsed()) {
      auto c = parse_covering(read_input(input));
      int n = resolve_rank(cfg, c.size());
      print_covering(cfg, act_on_covering(read_word(cfg, word, n), c));
    } else if (to_tree_cmd->parsed()) {
      auto q = parse_quadrangulation(read_input(input));
      resolve_rank(cfg, q.size());
      print_tree(cfg, to_tree(q));
    } else if (from_tree_cmd->parsed()) {
      auto t = parse_tree(read_input(input));
      resolve_rank(cfg, t.size());
      print_quad(cfg, from_tree(t));
    } else if (liftable->parsed()) {
      int n = require_rank(cfg);
      std::cout << (is_liftable(read_word(cfg, word, n), equality(cfg)) ? "true" : "false") << '\n';
    } else if (orbit_cmd->parsed()) {
      orbit_options.schreier = !count_only;
      auto text_tree = [](const LabeledTree& t) { return to_string(t); };
      auto text_quad = [](const Quadrangulation& q) { return to_string(q); };
      if (of == "tree") {
        auto start = input.empty() ? bush_tree(require_rank(cfg)) : parse_tree(read_input(input));
        cfg.n = resolve_rank(cfg, start.size());
        auto o = orbit(start, orbit_options);
        if (count_only)
          std::cout << o.size() << '\n';
        else
          print_orbit(cfg, "tree", o, text_tree, tree_json);
      } else {
        auto start = input.empty() ? trivial_quadrangulation(require_rank(cfg))
                                   : parse_quadrangulation(read_input(input));
        cfg.n = resolve_rank(cfg, start.size());
        auto o = orbit(start, orbit_options);
        if (count_only)
          std::cout << o.size() << '\n';
        else
          print_orbit(cfg, "quad", o, text_quad, quad_json);
      }
    } else if (compare_cmd->parsed()) {
      require_format(cfg, {"text", "ndjson"});
      auto c = compare_equalities(require_rank(cfg), orbit_options);
      if (cfg.format == "ndjson") {
        std::cout << json{{"n", c.rank},
                          {"strict", c.strict_size},
                          {"rotational", c.rotational_size},
                          {"tree", c.tree_size},
                          {"agree", c.agree()}}
                         .dump()
                  << '\n';
      } else {
        std::cout << "n: " << c.rank << "\nstrict: " << c.strict_size << "\nrotational: " << c.rotational_size
                  << "\ntree: " << c.tree_size << "\nagree: " << (c.agree() ? "true" : "false") << '\n';
      }
    } else if (canonicalize->parsed()) {
      auto t = parse_tree(read_input(input));
      resolve_rank(cfg, t.size());
      auto r = reduce_to_bush(t);
      std::cout << "word: " << to_string(r.word) << "\nroot: " << r.root << "\ncomplexity:";
      for (long c : r.complexities) std::cout << ' ' << c;
      std::cout << '\n';
    } else if (check_relations_cmd->parsed()) {
      int n = require_rank(cfg);
      auto report = check_relations(n);
      bool ok = report.all_hold();
      // Also on every tree when that is cheap.
      std::size_t tree_failures = 0;
      if (n <= 6) {
        for (const auto& t : enumerate_trees(n))
          for (const auto& rel : relation_instances(n))
            tree_failures += !same_tree(act_word(t, rel.lhs), act_word(t, rel.rhs));
      }
      for (const auto& c : report.checks)
        if (!c.holds) std::cout << "fails: " << c.name << '\n';
      if (tree_failures) std::cout << "tree failures: " << tree_failures << '\n';
      ok = ok && tree_failures == 0;
      std::cout << (ok ? "all relations hold" : "relations fail") << '\n';
      return ok ? 0 : kExitFailed;
    } else if (enumerate->parsed()) {
      auto trees = enumerate_trees(require_rank(cfg));
      if (count_only) {
        std::cout << trees.size() << '\n';
      } else {
        require_format(cfg, {"text", "ndjson"});
        for (std::size_t i = 0; i < trees.size(); ++i) {
          if (cfg.format == "ndjson") {
            json rec{{"index", i}};
            rec.update(tree_json(trees[i]));
            std::cout << rec.dump() << '\n';
          } else {
            std::cout << (i ? "\n" : "") << to_string(trees[i]);
          }
        }
      }
    } else if (membership_cmd->parsed()) {
      auto c = parse_covering(read_input(input));
      int n = resolve_rank(cfg, c.size());
      std::cout << (membership(c, parse_free_word(word, n)) ? "true" : "false") << '\n';
    } else if (generators_cmd->parsed()) {
      auto c = parse_covering(read_input(input));
      resolve_rank(cfg, c.size());
      for (const auto& g : generators(c)) std::cout << to_string(g) << '\n';
    } else if (fold_cmd->parsed()) {
      int n = require_rank(cfg);
      auto g = fold(read_free_words(read_input(input), n), n);
      std::cout << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count()
                << "\nrank: " << g.subgroup_rank() << "\ncovering: " << (g.is_covering() ? "true" : "false")
                << '\n';
    } else if (verify_cmd->parsed()) {
      if (random_count > 0) {
        int n = require_rank(cfg);
        std::mt19937 rng(cfg.seed);
        int failures = 0;
        for (int i = 0; i < random_count; ++i) {
          auto c = random_covering(rng, n);
          auto w = random_braid_word(rng, n, 15);
          if (!verify_act_theorem(w, c).pass()) {
            ++failures;
            std::cout << "fails: " << to_string(w) << " on\n" << to_string(c);
          }
        }
        std::cout << random_count - failures << '/' << random_count << " passed\n";
        return failures ? kExitFailed : 0;
      }
      if (word.empty()) throw ParseError("a braid word or --random <count> is required");
      auto c = parse_covering(read_input(input));
      int n = resolve_rank(cfg, c.size());
      auto report = verify_act_theorem(read_word(cfg, word, n), c);
      for (const auto& check : report.checks)
        std::cout << to_string(check.generator) << " -> " << to_string(check.image) << ": "
                  << (check.member ? "ok" : "NOT IN SUBGROUP") << '\n';
      std::cout << (report.pass() ? "pass" : "fail") << '\n';
      return report.pass() ? 0 : kExitFailed;
    } else if (probe->parsed()) {
      require_format(cfg, {"text", "ndjson"});
      int n = require_rank(cfg);
      if (max_len > 12) throw GuardError("--max-len above 12 is too expensive");
      auto r = conjecture_probe(n, max_len, orbit_options);
      if (cfg.format == "ndjson") {
        std::cout << json{{"type", "summary"},
                          {"heuristic", true},
                          {"n", r.rank},
                          {"max_len", r.max_len},
                          {"equality", equality_name(r.equality)},
                          {"words", r.words},
                          {"not_liftable", r.not_liftable.size()},
                          {"identities", r.identities.size()},
                          {"collisions", r.collisions.size()},
                          {"schreier_total", r.schreier_total},
                          {"schreier_expressible", r.schreier_expressible}}
                         .dump()
                  << '\n';
        for (const auto& w : r.not_liftable)
          std::cout << json{{"type", "not_liftable"}, {"word", to_string(w)}}.dump() << '\n';
        for (const auto& w : r.identities)
          std::cout << json{{"type", "identity"}, {"word", to_string(w)}}.dump() << '\n';
        for (const auto& [a, b] : r.collisions)
          std::cout << json{{"type", "collision"}, {"first", to_string(a)}, {"second", to_string(b)}}.dump()
                    << '\n';
      } else {
        std::cout << "heuristic probe: evidence only, proves nothing\n"
                  << "n: " << r.rank << "\nmax-len: " << r.max_len << "\nequality: " << equality_name(r.equality)
                  << "\nwords: " << r.words << "\nnot liftable: " << r.not_liftable.size()
                  << "\nidentities: " << r.identities.size() << "\ncollisions: " << r.collisions.size()
                  << "\nschreier expressible: " << r.schreier_expressible << '/' << r.schreier_total << '\n';
        for (const auto& w : r.not_liftable) std::cout << "not liftable: " << to_string(w) << '\n';
        for (const auto& w : r.identities) std::cout << "identity: " << to_string(w) << '\n';
        for (const auto& [a, b] : r.collisions) std::cout << "collision: " << to_string(a) << " = " << to_string(b) << '\n';
      }
    } else if (export_dot->parsed()) {
      auto text = read_input(input);
      if (of == "tree")
        std::cout << to_dot(parse_tree(text));
      else if (of == "quad")
        std::cout << to_dot(parse_quadrangulation(text));
      else
        std::cout << to_dot(parse_covering(text));
    }
  } catch (const GuardError& e) {
    std::cerr << "bcn: " << e.what() << '\n';
    return kExitGuard;
  } catch (const ParseError& e) {
    std::cerr << "bcn: parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    // RankError and InvariantError: well-formed text describing a bad object.
    std::cerr << "bcn: invalid input: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "bcn: " << e.what() << '\n';
    return kExitFailed;
  }
  return 0;
}
