#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "domgame/game.hpp"
#include "domgame/graph.hpp"
#include "domgame/reduced.hpp"

namespace domgame {

enum class StrategyKind {
  OptimalDominator,
  MatchingDominator,
  OptimalStaller,
  SemiGreedyStaller,
  GreedyStaller,
};

/// CLI names: optimal | matching | semi-greedy | greedy. Throws
/// std::invalid_argument for unknown names or a name that does not fit the
/// role (matching is Dominator-only, the greedy variants Staller-only).
StrategyKind parse_strategy(std::string_view name, Player role);
const char* strategy_name(StrategyKind kind);

struct Matching {
  std::vector<Edge> edges;
};

/// Greedy maximum matching of the complete multipartite graph `spec`
/// (vertices in block layout): repeatedly pair the lowest unmatched vertices
/// of the two classes with the most unmatched vertices, lower class index on
/// ties. Size is min(floor(s / 2), s - max class), s the vertex count.
Matching build_max_matching(const MultipartiteSpec& spec);

/// Per-class uncovered counts of a concrete position.
std::vector<int> uncovered_by_class(const MultipartiteSpec& spec, VertexMask covered);

/// Class a semi-greedy Staller covers next, from the per-class uncovered
/// counts. Classes are ranked by (uncovered, index); with l_n the top and
/// l_{n-1} the runner-up: a strict leader is chosen; on a tie the next
/// ranked class is chosen when it still has uncovered vertices, otherwise
/// l_n. Returns -1 when no class has uncovered vertices.
int semi_greedy_target(std::span<const int> uncovered);

/// One-new-vertex edge into `target`: lowest uncovered vertex of the class,
/// partner the lowest covered vertex of the lowest-index other class
/// holding one. Returns nullopt without such a partner.
std::optional<Edge> cover_one_edge(const MultipartiteSpec& spec, VertexMask covered, int target);

// Move rules. Each requires a nonterminal position with the owner to move.
Edge semi_greedy_move(const MultipartiteGraph& mg, const EdgeGameState& s);
Edge greedy_staller_move(const MultipartiteGraph& mg, const EdgeGameState& s);
Edge matching_dominator_move(const MultipartiteGraph& mg, const Matching& matching, const EdgeGameState& s);

/// A player strategy for complete multipartite play.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual Edge choose(const EdgeGameState& s) = 0;
  virtual StrategyKind kind() const = 0;
};

/// Reduced-solver-backed strategies share `solver`, which must be built for
/// the same spec. Pass nullptr to let the strategy own one.
std::unique_ptr<Strategy> make_strategy(StrategyKind kind, const MultipartiteGraph& mg,
                                        std::shared_ptr<ReducedSolver> solver = nullptr);

/// Plays from the fresh position until no legal move remains. Throws
/// IllegalMoveError naming the strategy and position when a strategy
/// returns an illegal edge.
Transcript play_game(const MultipartiteGraph& mg, Strategy& dominator, Strategy& staller, Player starter);

/// Convenience wrapper building both strategies with a shared solver.
Transcript play_game(const MultipartiteGraph& mg, StrategyKind dominator, StrategyKind staller,
                     Player starter, std::shared_ptr<ReducedSolver> solver = nullptr);

/// Shortest play-out of `staller` against every Dominator that plays
/// value-optimal moves, restricted to two-new moves when one exists. All
/// optimal Dominator choices are explored, so the result is below the game
/// value exactly when some optimal Dominator line beats `staller`. The
/// Staller strategy must depend only on the position.
int shortest_vs_optimal_dominators(const MultipartiteGraph& mg, StrategyKind staller, Player starter,
                                   std::shared_ptr<ReducedSolver> solver = nullptr);

}  // namespace domgame
