#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domgame/game.hpp"

namespace domgame {

/// Restrictions on the move sets searched by the exact solver.
///
/// DominatorTwoNew: on Dominator turns, when some legal move covers two new
/// vertices, only such moves are considered.
/// TwoOne: Dominator must cover exactly two new vertices and Staller exactly
/// one; a nonterminal position where this leaves no move is reported as
/// FilterInfeasibleError.
enum class MoveFilter { Unrestricted, DominatorTwoNew, TwoOne };

MoveFilter parse_move_filter(std::string_view text);
const char* move_filter_name(MoveFilter f);

struct SolveResult {
  int value = 0;                  ///< moves remaining under optimal play
  std::optional<int> best_move;   ///< edge or vertex index; present iff value > 0
  std::uint64_t states_explored = 0;
  std::uint64_t memo_hits = 0;
};

struct SolverOptions {
  int vertex_cap = 20;
  bool memoize = true;
  MoveFilter filter = MoveFilter::Unrestricted;
};

inline constexpr int kHardVertexCap = 26;

/// Memoized minimax over covered-vertex sets.
///
/// With the pre-dominated set A fixed, an edge is dominated iff it lies in A
/// or has a covered endpoint, so (covered set, mover) is a complete state key
/// for every A.
class EdgeGameSolver {
 public:
  /// Throws SizeCapError when |V| exceeds options.vertex_cap.
  EdgeGameSolver(const EdgeGame& game, SolverOptions options = {});

  SolveResult solve(const EdgeGameState& state);
  int value(VertexMask covered, Player to_move);

  /// Moves the filter admits at a position, canonical order.
  std::vector<int> candidate_moves(VertexMask covered, Player to_move) const;

  std::uint64_t states_explored() const { return states_explored_; }
  std::uint64_t memo_hits() const { return memo_hits_; }

 private:
  int search(VertexMask covered, Player to_move);
  std::size_t key(VertexMask covered, Player p) const {
    return (static_cast<std::size_t>(covered) << 1) | (p == Player::Staller ? 1u : 0u);
  }

  const EdgeGame& game_;
  SolverOptions options_;
  std::vector<std::int8_t> memo_;
  std::uint64_t states_explored_ = 0;
  std::uint64_t memo_hits_ = 0;
};

SolveResult solve_edge_game(const Graph& g, std::span<const int> predominated, Player to_move,
                            SolverOptions options = {});

class VertexGameSolver {
 public:
  VertexGameSolver(const VertexGame& game, SolverOptions options = {});

  SolveResult solve(VertexMask dominated, Player to_move);
  int value(VertexMask dominated, Player to_move);

 private:
  int search(VertexMask dominated, Player to_move);

  const VertexGame& game_;
  SolverOptions options_;
  std::vector<std::int8_t> memo_;
  std::uint64_t states_explored_ = 0;
  std::uint64_t memo_hits_ = 0;
};

SolveResult solve_vertex_game(const Graph& g, VertexMask dominated, Player to_move,
                              SolverOptions options = {});

/// value(G_A) >= value(G_B) for the given mover. Requires A ⊆ B ⊆ E(g);
/// throws std::invalid_argument otherwise.
bool check_continuation(const Graph& g, std::span<const int> a, std::span<const int> b,
                        Player to_move);

}  // namespace domgame
