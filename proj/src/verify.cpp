#include "domgame/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

#include "domgame/corpus.hpp"
#include "domgame/errors.hpp"
#include "domgame/formulas.hpp"
#include "domgame/reduced.hpp"
#include "domgame/solver.hpp"
#include "domgame/strategies.hpp"

namespace domgame::verify {

namespace {

// Check tallies in first-seen order so reports are deterministic.
class Tally {
 public:
  void record(const std::string& name, bool ok, std::string detail = {}) {
    auto& c = entry(name);
    ++c.cases;
    if (!ok) {
      ++c.failures;
      counterexamples.push_back(name + ": " + detail);
    }
  }
  CheckSummary& entry(const std::string& name) {
    for (auto& c : checks)
      if (c.name == name) return c;
    checks.push_back({name, 0, 0});
    return checks.back();
  }
  void merge(const Tally& other) {
    for (const auto& c : other.checks) {
      auto& mine = entry(c.name);
      mine.cases += c.cases;
      mine.failures += c.failures;
    }
    counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
  }

  std::vector<CheckSummary> checks;
  std::vector<std::string> counterexamples;
  std::vector<std::string> warnings;
};

struct SpecOutcome {
  std::vector<VerifyRow> rows;
  Tally tally;
};

std::string show(std::int64_t a) { return std::to_string(a); }

// Dominator covers two new vertices whenever it can, Staller one whenever it
// can; in complete multipartite play both are always possible after the
// opening move of a nonterminal position.
bool two_one_compliant(const Transcript& t) {
  std::size_t before = 0;
  for (int i = 0; i < t.length(); ++i) {
    const std::size_t gained = t.covered_after[i].size() - before;
    before = t.covered_after[i].size();
    const bool dominator_turn = (i % 2 == 0) == (t.starter == Player::Dominator);
    if (dominator_turn && gained != 2) return false;
    if (!dominator_turn && i > 0 && gained != 1) return false;
  }
  return true;
}

SpecOutcome verify_spec(const MultipartiteSpec& spec, const VerifyOptions& opt) {
  SpecOutcome out;
  Tally& tally = out.tally;
  const std::string name = spec.to_string();

  std::shared_ptr<ReducedSolver> solver;
  try {
    solver = std::make_shared<ReducedSolver>(spec, ReducedOptions{opt.reduced_cap, MoveFilter::Unrestricted});
  } catch (const SizeCapError& e) {
    tally.warnings.push_back("skipped " + name + ": " + e.what());
    return out;
  }
  const MultipartiteGraph mg = build_complete_multipartite(spec);
  const bool general = spec.vertex_count() <= opt.general_vertex_cap;
  std::unique_ptr<EdgeGame> game;
  std::unique_ptr<EdgeGameSolver> general_solver;
  if (general) {
    game = std::make_unique<EdgeGame>(mg.graph);
    general_solver = std::make_unique<EdgeGameSolver>(*game, SolverOptions{opt.general_vertex_cap, true});
  }

  for (Player starter : {Player::Dominator, Player::Staller}) {
    VerifyRow row;
    row.spec = name;
    row.starter = starter;
    // Oracles first; formulas are evaluated only afterwards.
    const int oracle = solver->value(ReducedState::fresh(spec, starter));
    row.oracle_reduced = oracle;
    if (general) {
      row.oracle_general = general_solver->value(0, starter);
      tally.record("reduced-equals-general", *row.oracle_general == oracle,
                   name + " " + player_code(starter) + ": reduced " + show(oracle) + " general " +
                       show(*row.oracle_general));
    }

    if (starter == Player::Dominator) {
      std::int64_t formula = formulas::gamma_multipartite(spec) + (opt.inject_mutant ? 1 : 0);
      row.formula = formula;
      tally.record("closed-form-dominator-start", formula == oracle,
                   name + ": formula " + show(formula) + " oracle " + show(oracle));

      ReducedSolver two_one(spec, ReducedOptions{opt.reduced_cap, MoveFilter::TwoOne});
      const int filtered = two_one.value(ReducedState::fresh(spec, starter));
      tally.record("two-one-filter-preserves-value", filtered == oracle,
                   name + ": filtered " + show(filtered) + " oracle " + show(oracle));

      const auto bound = formulas::upper_bound_matching(
          mg.graph, [&] {
            std::vector<int> top;
            for (int v = spec.offset(spec.class_count() - 1); v < spec.vertex_count(); ++v) top.push_back(v);
            return top;
          }(),
          build_max_matching(spec.without_largest()).edges);
      tally.record("matching-upper-bound", bound >= oracle,
                   name + ": bound " + show(bound) + " oracle " + show(oracle));

      if (spec.vertex_count() <= kMaxEngineVertices) {
        const Transcript semi =
            play_game(mg, StrategyKind::OptimalDominator, StrategyKind::SemiGreedyStaller, starter, solver);
        const Transcript match =
            play_game(mg, StrategyKind::MatchingDominator, StrategyKind::OptimalStaller, starter, solver);
        row.play_opt_semi = semi.length();
        row.play_match_opt = match.length();
        tally.record("semi-greedy-staller-optimal", semi.length() == oracle,
                     name + ": play " + show(semi.length()) + " oracle " + show(oracle));
        tally.record("matching-dominator-optimal", match.length() == oracle,
                     name + ": play " + show(match.length()) + " oracle " + show(oracle));
        tally.record("two-one-compliance", two_one_compliant(semi) && two_one_compliant(match), name);
        const int left = spec.vertex_count() - static_cast<int>(semi.covered_after.back().size());
        tally.record("odd-length-when-two-uncovered", left < 2 || semi.length() % 2 == 1,
                     name + ": length " + show(semi.length()) + " with " + show(left) + " uncovered");
        if (left >= 2)
          tally.record("lower-bound-governs", formulas::lower_bound_expression(spec) == oracle,
                       name + ": lower bound " + show(formulas::lower_bound_expression(spec)));
        else
          tally.record("two-thirds-governs",
                       formulas::ceil_div(2 * std::int64_t{spec.vertex_count()}, 3) - 1 == oracle, name);
      }
    } else {
      const std::int64_t formula = formulas::gamma_prime_multipartite(spec);
      row.formula = formula;
      tally.record("closed-form-staller-start", formula == oracle,
                   name + ": formula " + show(formula) + " oracle " + show(oracle));
      const std::int64_t rec = formulas::gamma_prime_via_recursion(spec);
      tally.record("staller-start-recursion", rec == formula,
                   name + ": recursion " + show(rec) + " formula " + show(formula));
      if (spec.class_count() >= 4) {
        const std::int64_t me = formulas::gamma_prime_mu_eta(spec);
        tally.record("mu-eta-form-agrees", me == formula, name + ": mu/eta " + show(me) + " formula " + show(formula));
      }
    }

    row.agree = (!row.formula || *row.formula == oracle) && (!row.oracle_general || *row.oracle_general == oracle) &&
                (!row.play_opt_semi || *row.play_opt_semi == oracle) &&
                (!row.play_match_opt || *row.play_match_opt == oracle);
    out.rows.push_back(row);
  }
  return out;
}

std::string describe_edges(const Graph& g) {
  std::ostringstream s;
  s << "n=" << g.vertex_count() << " E={";
  for (std::size_t i = 0; i < g.edges().size(); ++i) s << (i ? " " : "") << g.edge(static_cast<int>(i)).u << '-' << g.edge(static_cast<int>(i)).v;
  s << '}';
  return s.str();
}

void graph_checks(const VerifyOptions& opt, Tally& tally) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> size_dist(2, std::max(2, opt.continuation_max_vertices));
  std::uniform_real_distribution<double> density(0.2, 0.9);
  std::bernoulli_distribution half(0.5);
  for (int trial = 0; trial < opt.continuation_trials; ++trial) {
    const Graph g = corpus::random_graph(rng, size_dist(rng), density(rng));
    std::vector<int> a, b;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!half(rng)) continue;
      b.push_back(e);
      if (half(rng)) a.push_back(e);
    }
    for (Player p : {Player::Dominator, Player::Staller})
      tally.record("continuation-principle", check_continuation(g, a, b, p),
                   describe_edges(g) + " mover " + player_code(p));
  }

  for (const Graph& g : corpus::connected_graphs(opt.filter_corpus_vertices, opt.filter_corpus_edges)) {
    EdgeGame game(g);
    EdgeGameSolver plain(game);
    EdgeGameSolver filtered(game, SolverOptions{20, true, MoveFilter::DominatorTwoNew});
    for (Player p : {Player::Dominator, Player::Staller}) {
      const int a = plain.value(0, p), b = filtered.value(0, p);
      tally.record("dominator-two-new-filter", a == b,
                   describe_edges(g) + " " + player_code(p) + ": " + show(a) + " vs " + show(b));
    }
  }

  for (const Graph& g : corpus::connected_graphs(opt.line_graph_corpus_edges + 1, opt.line_graph_corpus_edges)) {
    const Graph lg = line_graph(g);
    for (Player p : {Player::Dominator, Player::Staller}) {
      const int edge_value = solve_edge_game(g, {}, p).value;
      const int vertex_value = solve_vertex_game(lg, 0, p).value;
      tally.record("line-graph-equivalence", edge_value == vertex_value,
                   describe_edges(g) + " " + player_code(p) + ": edge " + show(edge_value) + " vertex " +
                       show(vertex_value));
    }
  }

  for (const Graph& g : corpus::connected_graphs(opt.recognition_corpus_vertices, 64)) {
    if (g.edge_count() < 2) continue;
    const bool diam_one = vertex_edge_diameter(g) == 1;
    const bool recognized = recognize_complete_multipartite(g).has_value();
    tally.record("diameter-one-iff-multipartite", diam_one == recognized, describe_edges(g));
  }
  const Graph tree = corpus::example_tree();
  tally.record("example-tree-diameter",
               vertex_edge_diameter(tree) == 3 && !recognize_complete_multipartite(tree).has_value(),
               describe_edges(tree));
}

}  // namespace

int default_threads() {
  if (const char* env = std::getenv("DOMGAME_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

VerifyReport run_verify(const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto specs = corpus::sorted_specs(options.min_classes, options.max_classes, options.max_size);
  std::vector<SpecOutcome> outcomes(specs.size());

  const int workers =
      std::max(1, std::min<int>(options.threads > 0 ? options.threads : default_threads(), static_cast<int>(specs.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::string> failures(workers);
  auto work = [&](int id) {
    try {
      for (std::size_t i = next++; i < specs.size(); i = next++) outcomes[i] = verify_spec(specs[i], options);
    } catch (const std::exception& e) {
      failures[id] = e.what();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  for (const auto& f : failures)
    if (!f.empty()) throw Error("verification worker failed: " + f);

  Tally tally;
  VerifyReport report;
  for (auto& o : outcomes) {
    tally.merge(o.tally);
    report.rows.insert(report.rows.end(), o.rows.begin(), o.rows.end());
  }
  if (options.graph_checks) graph_checks(options, tally);

  report.checks = std::move(tally.checks);
  report.counterexamples = std::move(tally.counterexamples);
  report.warnings = std::move(tally.warnings);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

template <class T>
std::string cell(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

template <class T>
nlohmann::json jcell(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string to_csv(const VerifyReport& report) {
  std::ostringstream out;
  out << "spec,starter,formula,oracle_reduced,oracle_general,play_opt_semi,play_match_opt,agree\n";
  for (const auto& r : report.rows) {
    out << '"' << r.spec << "\"," << player_code(r.starter) << ',' << cell(r.formula) << ','
        << cell(r.oracle_reduced) << ',' << cell(r.oracle_general) << ',' << cell(r.play_opt_semi) << ','
        << cell(r.play_match_opt) << ',' << (r.agree ? "true" : "false") << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"spec", r.spec},
                    {"starter", std::string(1, player_code(r.starter))},
                    {"formula", jcell(r.formula)},
                    {"oracle_reduced", jcell(r.oracle_reduced)},
                    {"oracle_general", jcell(r.oracle_general)},
                    {"play_opt_semi", jcell(r.play_opt_semi)},
                    {"play_match_opt", jcell(r.play_match_opt)},
                    {"agree", r.agree}});
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}});
  return {{"rows", rows},
          {"checks", checks},
          {"counterexamples", report.counterexamples},
          {"warnings", report.warnings},
          {"elapsed_seconds", report.elapsed_seconds},
          {"passed", report.passed()}};
}

}  // namespace domgame::verify
