#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "domgame/game.hpp"
#include "domgame/graph.hpp"

namespace domgame::verify {

struct VerifyOptions {
  int min_classes = 2;
  int max_classes = 4;
  int max_size = 4;
  std::uint64_t seed = 1;
  int threads = 0;                 ///< 0: DOMGAME_THREADS, else hardware concurrency
  int general_vertex_cap = 9;      ///< reduced vs. general comparison up to this |V|
  std::int64_t reduced_cap = 10'000'000;
  int continuation_trials = 1000;  ///< random (G, A ⊆ B) triples
  int continuation_max_vertices = 7;
  int filter_corpus_vertices = 7;  ///< DominatorTwoNew check over connected graphs
  int filter_corpus_edges = 12;
  int line_graph_corpus_edges = 6;
  int recognition_corpus_vertices = 6;
  bool graph_checks = true;        ///< run the general-graph checks
  bool inject_mutant = false;      ///< add 1 to the Dominator-start formula
};

/// One sweep row: a spec and a starting player.
struct VerifyRow {
  std::string spec;
  Player starter = Player::Dominator;
  std::optional<std::int64_t> formula;
  std::optional<int> oracle_reduced;
  std::optional<int> oracle_general;
  std::optional<int> play_opt_semi;
  std::optional<int> play_match_opt;
  bool agree = true;
};

struct CheckSummary {
  std::string name;
  long cases = 0;
  long failures = 0;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  std::vector<CheckSummary> checks;
  std::vector<std::string> counterexamples;
  std::vector<std::string> warnings;
  double elapsed_seconds = 0;

  bool passed() const { return counterexamples.empty(); }
};

/// Worker count: DOMGAME_THREADS when set and positive, else hardware
/// concurrency (at least 1).
int default_threads();

VerifyReport run_verify(const VerifyOptions& options);

/// Columns: spec,starter,formula,oracle_reduced,oracle_general,play_opt_semi,play_match_opt,agree.
std::string to_csv(const VerifyReport& report);
nlohmann::json to_json(const VerifyReport& report);

}  // namespace domgame::verify
