#pragma once

// Exact solver for complete multipartite graphs on the quotient of game
// positions by class symmetry. A position is described by the number of
// covered vertices in each class; which vertices inside a class are covered
// does not affect play.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domgame/game.hpp"
#include "domgame/graph.hpp"
#include "domgame/solver.hpp"

namespace domgame {

struct ClassCount {
  int size = 0;
  int covered = 0;

  friend auto operator<=>(const ClassCount&, const ClassCount&) = default;
  friend bool operator==(const ClassCount&, const ClassCount&) = default;
};

/// Canonical form keeps `classes` sorted lexicographically by (size, covered).
struct ReducedState {
  std::vector<ClassCount> classes;
  Player to_move = Player::Dominator;

  static ReducedState fresh(const MultipartiteSpec& spec, Player to_move);
  ReducedState canonical() const;
  bool is_terminal() const;
  int covered_total() const;

  friend bool operator==(const ReducedState&, const ReducedState&) = default;
};

/// Class indices refer to positions in the state's canonical class order.
struct ReducedMove {
  enum class Kind { CoverTwo, CoverOne };
  Kind kind = Kind::CoverTwo;
  int first = 0;
  int second = -1;  ///< only for CoverTwo; first < second

  static ReducedMove cover_two(int i, int j) { return {Kind::CoverTwo, std::min(i, j), std::max(i, j)}; }
  static ReducedMove cover_one(int i) { return {Kind::CoverOne, i, -1}; }

  std::string to_string() const;
  friend bool operator==(const ReducedMove&, const ReducedMove&) = default;
};

/// Legal moves of a canonical state: CoverTwo pairs in lexicographic order,
/// then CoverOne classes ascending.
std::vector<ReducedMove> reduced_moves(const ReducedState& s);
bool is_legal(const ReducedState& s, const ReducedMove& m);
/// Successor in canonical form; the mover flips.
ReducedState apply_reduced(const ReducedState& s, const ReducedMove& m);
/// Distinct canonical successors, sorted.
std::vector<ReducedState> reduced_successors(const ReducedState& s);

struct ReducedOptions {
  std::int64_t state_cap = 10'000'000;  ///< bound on prod(m_i + 1)
  MoveFilter filter = MoveFilter::Unrestricted;
};

struct ReducedResult {
  int value = 0;
  std::optional<ReducedMove> best_move;
  std::uint64_t states_explored = 0;
  std::uint64_t memo_hits = 0;
};

/// Memoized minimax over canonical reduced states of one spec.
///
/// The memo is a dense table indexed by the mixed-radix code of the
/// canonical covered counts. Not thread-safe; use one instance per worker.
class ReducedSolver {
 public:
  /// Throws SizeCapError when prod(m_i + 1) exceeds options.state_cap.
  explicit ReducedSolver(MultipartiteSpec spec, ReducedOptions options = {});

  const MultipartiteSpec& spec() const { return spec_; }

  int value(const ReducedState& s);
  ReducedResult solve(const ReducedState& s);

  /// Best move with ties broken CoverTwo first, then lexicographically.
  /// Throws std::invalid_argument on a terminal state.
  ReducedMove best_move(const ReducedState& s);
  /// Best move among those of the given kind; falls back to all moves when
  /// none of that kind is legal.
  ReducedMove best_move_preferring(const ReducedState& s, ReducedMove::Kind kind);

  std::uint64_t states_explored() const { return states_explored_; }
  std::uint64_t memo_hits() const { return memo_hits_; }

 private:
  int search(std::vector<int>& covered, Player to_move);
  std::vector<ReducedMove> candidates(const ReducedState& s) const;
  void check_state(const ReducedState& s) const;

  MultipartiteSpec spec_;
  ReducedOptions options_;
  std::vector<std::int64_t> stride_;
  std::vector<int> group_end_;  ///< end of the equal-size run containing i
  std::vector<std::int16_t> memo_;
  std::uint64_t states_explored_ = 0;
  std::uint64_t memo_hits_ = 0;
};

SolveResult reduced_value(const MultipartiteSpec& spec, Player starter, ReducedOptions options = {});
ReducedMove reduced_best_move(const ReducedState& s);

/// Reduced image of a concrete covered set.
ReducedState project_state(const MultipartiteSpec& spec, VertexMask covered, Player to_move);

/// Concrete edge realizing m: lowest uncovered vertex of each named class;
/// for CoverOne the partner is the lowest covered vertex of the
/// lowest-index other class that holds one. Classes are matched to
/// canonical positions by a stable sort on (size, covered).
Edge lift_move(const MultipartiteSpec& spec, VertexMask covered, const ReducedMove& m);
/// Inverse of lift_move on the canonical positions.
ReducedMove project_move(const MultipartiteSpec& spec, VertexMask covered, const Edge& e);

/// Concrete class index for each canonical position of project_state.
std::vector<int> canonical_class_order(const MultipartiteSpec& spec, VertexMask covered);

}  // namespace domgame
