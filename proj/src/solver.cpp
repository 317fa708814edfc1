#include "domgame/solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "domgame/errors.hpp"

namespace domgame {

MoveFilter parse_move_filter(std::string_view text) {
  if (text == "none" || text == "unrestricted") return MoveFilter::Unrestricted;
  if (text == "two-new" || text == "dominator-two-new") return MoveFilter::DominatorTwoNew;
  if (text == "two-one" || text == "2-1") return MoveFilter::TwoOne;
  throw std::invalid_argument("unknown move filter '" + std::string(text) + "'");
}

const char* move_filter_name(MoveFilter f) {
  switch (f) {
    case MoveFilter::Unrestricted: return "none";
    case MoveFilter::DominatorTwoNew: return "two-new";
    case MoveFilter::TwoOne: return "two-one";
  }
  return "?";
}

namespace {

void check_cap(int vertices, int cap) {
  if (cap > kHardVertexCap)
    throw SizeCapError("vertex cap above hard limit " + std::to_string(kHardVertexCap),
                       kHardVertexCap);
  if (vertices > cap)
    throw SizeCapError("graph has " + std::to_string(vertices) +
                           " vertices, exact solver cap is " + std::to_string(cap),
                       cap);
}

std::vector<int> collect(const std::vector<std::uint64_t>& words, int limit) {
  std::vector<int> out;
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::uint64_t bits = words[w]; bits; bits &= bits - 1) {
      int i = static_cast<int>(w * 64) + std::countr_zero(bits);
      if (i < limit) out.push_back(i);
    }
  }
  return out;
}

std::string describe(VertexMask covered, Player p) {
  std::string s = std::string("mover ") + player_code(p) + ", covered {";
  bool first = true;
  for (int v : mask_to_vertices(covered)) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

}  // namespace

EdgeGameSolver::EdgeGameSolver(const EdgeGame& game, SolverOptions options)
    : game_(game), options_(options) {
  check_cap(game_.graph().vertex_count(), options_.vertex_cap);
  if (options_.memoize)
    memo_.assign(std::size_t{2} << game_.graph().vertex_count(), std::int8_t{-1});
}

std::vector<int> EdgeGameSolver::candidate_moves(VertexMask covered, Player to_move) const {
  kernels::EdgeMoveMasks masks;
  game_.move_masks(covered, masks);
  const int m = game_.graph().edge_count();
  const bool any_legal =
      std::any_of(masks.legal.begin(), masks.legal.end(), [](std::uint64_t w) { return w != 0; });
  if (!any_legal || options_.filter == MoveFilter::Unrestricted) return collect(masks.legal, m);

  std::vector<std::uint64_t> restricted(masks.legal.size());
  bool any = false;
  for (std::size_t w = 0; w < restricted.size(); ++w) {
    if (to_move == Player::Dominator)
      restricted[w] = masks.legal[w] & masks.two_new[w];
    else if (options_.filter == MoveFilter::TwoOne)
      restricted[w] = masks.legal[w] & ~masks.two_new[w];
    else
      restricted[w] = masks.legal[w];
    any = any || restricted[w] != 0;
  }
  if (any) return collect(restricted, m);
  if (options_.filter == MoveFilter::DominatorTwoNew) return collect(masks.legal, m);
  throw FilterInfeasibleError(std::string("filter ") + move_filter_name(options_.filter) +
                              " leaves no move at " + describe(covered, to_move));
}

int EdgeGameSolver::search(VertexMask covered, Player to_move) {
  if (options_.memoize) {
    std::int8_t cached = memo_[key(covered, to_move)];
    if (cached >= 0) {
      ++memo_hits_;
      return cached;
    }
  }
  ++states_explored_;
  const auto moves = candidate_moves(covered, to_move);
  int best = 0;
  if (!moves.empty()) {
    best = to_move == Player::Dominator ? INT32_MAX : -1;
    for (int e : moves) {
      const Edge& edge = game_.graph().edge(e);
      int v = search(covered | vertex_bit(edge.u) | vertex_bit(edge.v), opponent(to_move));
      best = to_move == Player::Dominator ? std::min(best, v) : std::max(best, v);
    }
    best += 1;
  }
  if (options_.memoize) memo_[key(covered, to_move)] = static_cast<std::int8_t>(best);
  return best;
}

int EdgeGameSolver::value(VertexMask covered, Player to_move) { return search(covered, to_move); }

SolveResult EdgeGameSolver::solve(const EdgeGameState& state) {
  const std::uint64_t explored0 = states_explored_, hits0 = memo_hits_;
  SolveResult result;
  const auto moves = candidate_moves(state.covered, state.to_move);
  ++states_explored_;
  if (!moves.empty()) {
    int best = -1;
    for (int e : moves) {
      const Edge& edge = game_.graph().edge(e);
      int v = search(state.covered | vertex_bit(edge.u) | vertex_bit(edge.v), opponent(state.to_move));
      const bool better = best < 0 || (state.to_move == Player::Dominator ? v < best : v > best);
      if (better) {
        best = v;
        result.best_move = e;
      }
    }
    result.value = best + 1;
  }
  result.states_explored = states_explored_ - explored0;
  result.memo_hits = memo_hits_ - hits0;
  return result;
}

SolveResult solve_edge_game(const Graph& g, std::span<const int> predominated, Player to_move,
                            SolverOptions options) {
  check_cap(g.vertex_count(), options.vertex_cap);
  EdgeGame game(g, std::vector<int>(predominated.begin(), predominated.end()));
  EdgeGameSolver solver(game, options);
  return solver.solve(game.initial_state(to_move));
}

VertexGameSolver::VertexGameSolver(const VertexGame& game, SolverOptions options)
    : game_(game), options_(options) {
  check_cap(game_.vertex_count(), options_.vertex_cap);
  if (options_.memoize) memo_.assign(std::size_t{2} << game_.vertex_count(), std::int8_t{-1});
}

int VertexGameSolver::search(VertexMask dominated, Player to_move) {
  const std::size_t k = (static_cast<std::size_t>(dominated) << 1) | (to_move == Player::Staller);
  if (options_.memoize && memo_[k] >= 0) {
    ++memo_hits_;
    return memo_[k];
  }
  ++states_explored_;
  const auto moves = game_.legal_moves(dominated);
  int best = 0;
  if (!moves.empty()) {
    best = to_move == Player::Dominator ? INT32_MAX : -1;
    for (int v : moves) {
      int child = search(dominated | game_.closed_neighborhood(v), opponent(to_move));
      best = to_move == Player::Dominator ? std::min(best, child) : std::max(best, child);
    }
    best += 1;
  }
  if (options_.memoize) memo_[k] = static_cast<std::int8_t>(best);
  return best;
}

int VertexGameSolver::value(VertexMask dominated, Player to_move) { return search(dominated, to_move); }

SolveResult VertexGameSolver::solve(VertexMask dominated, Player to_move) {
  const std::uint64_t explored0 = states_explored_, hits0 = memo_hits_;
  SolveResult result;
  ++states_explored_;
  int best = -1;
  for (int v : game_.legal_moves(dominated)) {
    int child = search(dominated | game_.closed_neighborhood(v), opponent(to_move));
    if (best < 0 || (to_move == Player::Dominator ? child < best : child > best)) {
      best = child;
      result.best_move = v;
    }
  }
  result.value = best < 0 ? 0 : best + 1;
  result.states_explored = states_explored_ - explored0;
  result.memo_hits = memo_hits_ - hits0;
  return result;
}

SolveResult solve_vertex_game(const Graph& g, VertexMask dominated, Player to_move,
                              SolverOptions options) {
  check_cap(g.vertex_count(), options.vertex_cap);
  VertexGame game(g);
  VertexGameSolver solver(game, options);
  return solver.solve(dominated & all_vertices(g.vertex_count()), to_move);
}

bool check_continuation(const Graph& g, std::span<const int> a, std::span<const int> b,
                        Player to_move) {
  std::vector<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  for (int e : sb)
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("B is not a subset of E(G)");
  if (!std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
    throw std::invalid_argument("A is not a subset of B");
  const int va = solve_edge_game(g, sa, to_move).value;
  const int vb = solve_edge_game(g, sb, to_move).value;
  return va >= vb;
}

}  // namespace domgame
