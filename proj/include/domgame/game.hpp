#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "domgame/graph.hpp"
#include "domgame/kernels.hpp"

namespace domgame {

enum class Player { Dominator, Staller };

inline Player opponent(Player p) { return p == Player::Dominator ? Player::Staller : Player::Dominator; }
inline char player_code(Player p) { return p == Player::Dominator ? 'D' : 'S'; }
/// Accepts "D"/"S" and "dominator"/"staller" (case-insensitive).
Player parse_player(std::string_view text);

using VertexMask = std::uint64_t;
inline constexpr int kMaxEngineVertices = 64;

inline VertexMask vertex_bit(int v) { return VertexMask{1} << v; }
inline VertexMask all_vertices(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }
std::vector<int> mask_to_vertices(VertexMask m);

/// Position of an edge domination game.
///
/// Dominated edges are those with a covered endpoint plus the pre-dominated
/// set A of the owning EdgeGame; `residual_dominated` lists the members of A
/// that have no covered endpoint yet.
struct EdgeGameState {
  VertexMask covered = 0;
  std::vector<int> residual_dominated;
  Player to_move = Player::Dominator;
  int moves_made = 0;
};

/// Rules of the edge domination game on a fixed graph with a fixed
/// pre-dominated edge set. Immutable and safe to share between threads.
class EdgeGame {
 public:
  /// Throws SizeCapError when the graph has more than 64 vertices.
  explicit EdgeGame(Graph graph, std::vector<int> predominated = {});

  const Graph& graph() const { return graph_; }
  const std::vector<int>& predominated() const { return predominated_; }
  bool is_predominated(int edge) const { return predominated_flag_[edge]; }

  EdgeGameState initial_state(Player starter) const;

  bool is_dominated(const EdgeGameState& s, int edge) const;

  /// Legal edge indices in canonical order, from the bitmask kernels.
  std::vector<int> legal_moves(const EdgeGameState& s) const;
  /// Reference implementation: scans N[e] for an undominated edge.
  std::vector<int> legal_moves_direct(const EdgeGameState& s) const;

  bool is_legal(const EdgeGameState& s, int edge) const;
  bool is_terminal(const EdgeGameState& s) const;
  int new_vertex_count(const EdgeGameState& s, int edge) const;

  /// Throws IllegalMoveError naming the violated condition.
  EdgeGameState apply_move(const EdgeGameState& s, int edge) const;

  /// Kernel input; exposed for the solver.
  const kernels::EdgeTable& table() const { return table_; }
  void move_masks(VertexMask covered, kernels::EdgeMoveMasks& out) const;

 private:
  Graph graph_;
  std::vector<int> predominated_;
  std::vector<bool> predominated_flag_;
  kernels::EdgeTable table_;
};

/// Completed or partial play record.
struct Transcript {
  Player starter = Player::Dominator;
  std::vector<Edge> moves;
  std::vector<std::vector<int>> covered_after;

  int length() const { return static_cast<int>(moves.size()); }
};

nlohmann::json to_json(const Transcript& t);

/// Vertex domination game on a graph with at most 64 vertices.
class VertexGame {
 public:
  explicit VertexGame(const Graph& graph);

  int vertex_count() const { return static_cast<int>(closed_.size()); }
  VertexMask closed_neighborhood(int v) const { return closed_[v]; }

  std::vector<int> legal_moves(VertexMask dominated) const;
  bool is_terminal(VertexMask dominated) const;
  /// Throws IllegalMoveError when N[v] is already dominated.
  VertexMask apply(VertexMask dominated, int v) const;

  std::span<const kernels::Mask> closed() const { return closed_; }

 private:
  std::vector<kernels::Mask> closed_;
};

}  // namespace domgame
