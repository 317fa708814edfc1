// domgame: command-line front end for the edge domination game solvers.
//
// Exit codes: 0 success, 1 other failure, 2 usage or parse error, 3 size cap
// exceeded, 4 move filter infeasible, 5 verification counterexample.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "domgame/corpus.hpp"
#include "domgame/errors.hpp"
#include "domgame/formulas.hpp"
#include "domgame/game.hpp"
#include "domgame/graph.hpp"
#include "domgame/kernels.hpp"
#include "domgame/reduced.hpp"
#include "domgame/solver.hpp"
#include "domgame/strategies.hpp"
#include "domgame/verify.hpp"

using namespace domgame;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInfeasible = 4;
constexpr int kExitCounterexample = 5;

Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

// "0-1,2-3" -> edge indices of g.
std::vector<int> parse_dominated(const Graph& g, const std::string& text) {
  std::vector<int> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("dominated edge '" + item + "' must be u-v");
    int u = 0, v = 0;
    try {
      u = std::stoi(item.substr(0, dash));
      v = std::stoi(item.substr(dash + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("dominated edge '" + item + "' must be u-v");
    }
    auto idx = g.edge_index(u, v);
    if (!idx) throw std::invalid_argument("dominated edge '" + item + "' is not an edge");
    out.push_back(*idx);
  }
  return out;
}

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

json solve_json(const SolveResult& r, const char* solver, const Graph* g) {
  json out{{"value", r.value},
           {"statesExplored", r.states_explored},
           {"memoHits", r.memo_hits},
           {"solver", solver},
           {"bestMove", nullptr}};
  if (r.best_move) out["bestMove"] = g ? edge_json(g->edge(*r.best_move)) : json(*r.best_move);
  return out;
}

struct SolveArgs {
  std::string spec, graph, starter = "D", variant = "edge", filter = "none", dominated;
  bool general = false;
  int cap = 20;
};

int run_solve(const SolveArgs& a) {
  if (a.spec.empty() == a.graph.empty()) throw std::invalid_argument("give exactly one of --spec or --graph");
  const Player starter = parse_player(a.starter);
  const MoveFilter filter = parse_move_filter(a.filter);
  SolverOptions options{a.cap, true, filter};

  if (a.variant == "vertex") {
    if (!a.dominated.empty()) throw std::invalid_argument("--dominated applies to the edge game");
    const Graph g = a.graph.empty() ? build_complete_multipartite(MultipartiteSpec::parse(a.spec)).graph
                                    : read_graph(a.graph);
    std::cout << solve_json(solve_vertex_game(g, 0, starter, options), "vertex", nullptr).dump() << '\n';
    return kExitOk;
  }
  if (a.variant != "edge") throw std::invalid_argument("--variant must be edge or vertex");

  if (!a.spec.empty() && !a.general && a.dominated.empty()) {
    const MultipartiteSpec spec = MultipartiteSpec::parse(a.spec);
    ReducedSolver solver(spec, ReducedOptions{10'000'000, filter});
    const auto fresh = ReducedState::fresh(spec, starter);
    const auto r = solver.solve(fresh);
    json out{{"value", r.value},
             {"statesExplored", r.states_explored},
             {"memoHits", r.memo_hits},
             {"solver", "reduced"},
             {"bestMove", nullptr}};
    if (r.best_move) {
      out["bestMove"] = spec.vertex_count() <= kMaxEngineVertices ? edge_json(lift_move(spec, 0, *r.best_move))
                                                                  : json(r.best_move->to_string());
      out["bestReducedMove"] = r.best_move->to_string();
    }
    std::cout << out.dump() << '\n';
    return kExitOk;
  }
  const Graph g = a.graph.empty() ? build_complete_multipartite(MultipartiteSpec::parse(a.spec)).graph
                                  : read_graph(a.graph);
  const auto dominated = parse_dominated(g, a.dominated);
  std::cout << solve_json(solve_edge_game(g, dominated, starter, options), "general", &g).dump() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and verification harness for the edge domination game"};
  app.require_subcommand(1);

  std::string spec_text;
  bool staller_start = false;
  auto* formula = app.add_subcommand("formula", "closed-form game domination number of K_m");
  formula->add_option("spec", spec_text, "class sizes, e.g. 2,2,6,6")->required();
  formula->add_flag("--staller-start", staller_start, "Staller moves first");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "exact game value by minimax");
  solve->add_option("--spec", solve_args.spec, "complete multipartite class sizes");
  solve->add_option("--graph", solve_args.graph, "edge-list file");
  solve->add_option("--starter", solve_args.starter, "D or S")->capture_default_str();
  solve->add_option("--variant", solve_args.variant, "edge or vertex game")->capture_default_str();
  solve->add_option("--filter", solve_args.filter, "none | two-new | two-one")->capture_default_str();
  solve->add_option("--dominated", solve_args.dominated, "pre-dominated edges, e.g. 0-1,2-3");
  solve->add_flag("--general", solve_args.general, "use the unreduced solver for --spec");
  solve->add_option("--cap", solve_args.cap, "vertex cap of the general solver")->capture_default_str();

  std::string play_spec, dominator = "optimal", staller = "semi-greedy", play_starter = "D";
  bool transcript = false;
  auto* play = app.add_subcommand("play", "play a game between two strategies");
  play->add_option("--spec", play_spec, "class sizes")->required();
  play->add_option("--dominator", dominator, "optimal | matching")->capture_default_str();
  play->add_option("--staller", staller, "optimal | semi-greedy | greedy")->capture_default_str();
  play->add_option("--starter", play_starter, "D or S")->capture_default_str();
  play->add_flag("--transcript", transcript, "emit the full transcript");

  verify::VerifyOptions vopt;
  std::string oracles = "reduced,general", format = "csv", output;
  auto* ver = app.add_subcommand("verify", "sweep specs and cross-check formulas, oracles and strategies");
  ver->add_option("--max-n", vopt.max_classes, "largest class count")->capture_default_str();
  ver->add_option("--max-m", vopt.max_size, "largest class size")->capture_default_str();
  ver->add_option("--min-n", vopt.min_classes, "smallest class count")->capture_default_str();
  ver->add_option("--oracles", oracles, "reduced[,general]")->capture_default_str();
  ver->add_option("--seed", vopt.seed, "seed for randomized checks")->capture_default_str();
  ver->add_option("--threads", vopt.threads, "worker threads (default DOMGAME_THREADS)");
  ver->add_option("--format", format, "csv or json")->capture_default_str();
  ver->add_option("--output", output, "write the report here instead of stdout");
  ver->add_flag("--no-graph-checks", [&](std::int64_t) { vopt.graph_checks = false; }, "skip general-graph checks");
  ver->add_flag("--inject-mutant", vopt.inject_mutant, "harness self-test: off-by-one formula");

  int sweep_max_n = 4, sweep_max_m = 4, sweep_min_n = 2;
  auto* sweep = app.add_subcommand("sweep", "tabulate formulas and reduced values");
  sweep->add_option("--max-n", sweep_max_n)->capture_default_str();
  sweep->add_option("--max-m", sweep_max_m)->capture_default_str();
  sweep->add_option("--min-n", sweep_min_n)->capture_default_str();

  std::string diam_file, recog_file;
  auto* diam = app.add_subcommand("diam", "vertex-edge diameter of a graph file");
  diam->add_option("file", diam_file)->required();
  auto* recog = app.add_subcommand("recognize", "recognize a complete multipartite graph");
  recog->add_option("file", recog_file)->required();

  app.add_subcommand("simd", "report the active kernel backend");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (formula->parsed()) {
      const MultipartiteSpec spec = MultipartiteSpec::parse(spec_text);
      const auto f = staller_start ? formulas::gamma_prime_multipartite_detail(spec)
                                   : formulas::gamma_multipartite_detail(spec);
      std::cout << json{{"spec", spec.to_string()},
                        {"starter", staller_start ? "S" : "D"},
                        {"value", f.value},
                        {"branch", formulas::branch_name(f.branch)}}
                       .dump()
                << '\n';
      return kExitOk;
    }
    if (solve->parsed()) return run_solve(solve_args);
    if (play->parsed()) {
      const MultipartiteGraph mg = build_complete_multipartite(MultipartiteSpec::parse(play_spec));
      const Transcript t = play_game(mg, parse_strategy(dominator, Player::Dominator),
                                     parse_strategy(staller, Player::Staller), parse_player(play_starter));
      json out = transcript ? to_json(t) : json{{"starter", std::string(1, player_code(t.starter))}, {"length", t.length()}};
      out["spec"] = mg.spec.to_string();
      std::cout << out.dump() << '\n';
      return kExitOk;
    }
    if (ver->parsed()) {
      if (oracles.find("general") == std::string::npos) vopt.general_vertex_cap = 0;
      if (format != "csv" && format != "json") throw std::invalid_argument("--format must be csv or json");
      const auto report = verify::run_verify(vopt);
      const std::string text = format == "csv" ? verify::to_csv(report) : verify::to_json(report).dump(2) + "\n";
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream(output) << text;
      }
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
      for (const auto& c : report.checks)
        std::cerr << (c.failures ? "FAIL " : "ok   ") << c.name << " (" << c.cases << " cases, " << c.failures
                  << " failures)\n";
      for (const auto& c : report.counterexamples) std::cerr << "counterexample: " << c << '\n';
      return report.passed() ? kExitOk : kExitCounterexample;
    }
    if (sweep->parsed()) {
      std::cout << "spec,gamma,gamma_prime,reduced_D,reduced_S\n";
      for (const auto& spec : corpus::sorted_specs(std::max(2, sweep_min_n), sweep_max_n, sweep_max_m)) {
        ReducedSolver solver(spec);
        std::cout << '"' << spec.to_string() << "\"," << formulas::gamma_multipartite(spec) << ','
                  << formulas::gamma_prime_multipartite(spec) << ','
                  << solver.value(ReducedState::fresh(spec, Player::Dominator)) << ','
                  << solver.value(ReducedState::fresh(spec, Player::Staller)) << '\n';
      }
      return kExitOk;
    }
    if (diam->parsed()) {
      const Graph g = read_graph(diam_file);
      std::cout << vertex_edge_diameter(g) << '\n';
      return kExitOk;
    }
    if (recog->parsed()) {
      const Graph g = read_graph(recog_file);
      if (auto spec = recognize_complete_multipartite(g))
        std::cout << spec->to_string() << '\n';
      else
        std::cout << "not complete multipartite\n";
      return kExitOk;
    }
    std::cout << kernels::backend_name(kernels::active_backend()) << '\n';
    return kExitOk;
  } catch (const SizeCapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const FilterInfeasibleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidSpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UndefinedDiameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
