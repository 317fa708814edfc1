#include "domgame/strategies.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "domgame/errors.hpp"

namespace domgame {

StrategyKind parse_strategy(std::string_view name, Player role) {
  const bool dom = role == Player::Dominator;
  if (name == "optimal") return dom ? StrategyKind::OptimalDominator : StrategyKind::OptimalStaller;
  if (name == "matching" && dom) return StrategyKind::MatchingDominator;
  if (name == "semi-greedy" && !dom) return StrategyKind::SemiGreedyStaller;
  if (name == "greedy" && !dom) return StrategyKind::GreedyStaller;
  throw std::invalid_argument("strategy '" + std::string(name) + "' is not available for " +
                              (dom ? "Dominator" : "Staller"));
}

const char* strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::OptimalDominator: return "optimal-dominator";
    case StrategyKind::MatchingDominator: return "matching";
    case StrategyKind::OptimalStaller: return "optimal-staller";
    case StrategyKind::SemiGreedyStaller: return "semi-greedy";
    case StrategyKind::GreedyStaller: return "greedy";
  }
  return "?";
}

Matching build_max_matching(const MultipartiteSpec& spec) {
  const int n = spec.class_count();
  std::vector<int> next(n), remaining(n);
  for (int c = 0; c < n; ++c) {
    next[c] = spec.offset(c);
    remaining[c] = spec.size(c);
  }
  Matching m;
  while (true) {
    int first = -1, second = -1;
    for (int c = 0; c < n; ++c) {
      if (first < 0 || remaining[c] > remaining[first]) {
        second = first;
        first = c;
      } else if (second < 0 || remaining[c] > remaining[second]) {
        second = c;
      }
    }
    if (second < 0 || remaining[second] == 0) break;
    m.edges.emplace_back(next[first]++, next[second]++);
    --remaining[first];
    --remaining[second];
  }
  return m;
}

std::vector<int> uncovered_by_class(const MultipartiteSpec& spec, VertexMask covered) {
  std::vector<int> out(spec.class_count());
  for (int c = 0; c < spec.class_count(); ++c)
    for (int v = spec.offset(c); v < spec.offset(c + 1); ++v) out[c] += !(covered & vertex_bit(v));
  return out;
}

namespace {

std::vector<int> rank_classes(std::span<const int> uncovered) {
  std::vector<int> order(uncovered.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return uncovered[a] < uncovered[b]; });
  return order;
}

int lowest_uncovered(const MultipartiteSpec& spec, VertexMask covered, int cls) {
  for (int v = spec.offset(cls); v < spec.offset(cls + 1); ++v)
    if (!(covered & vertex_bit(v))) return v;
  return -1;
}

void require_playable(const MultipartiteGraph& mg, const EdgeGameState& s, const char* who) {
  if (mg.spec.vertex_count() > kMaxEngineVertices)
    throw SizeCapError("strategies support at most 64 vertices", kMaxEngineVertices);
  int open = 0;
  for (int u : uncovered_by_class(mg.spec, s.covered)) open += u > 0;
  if (open < 2) throw std::logic_error(std::string(who) + " asked to move in a terminal position");
}

// Lowest canonical edge covering two new vertices.
std::optional<Edge> first_two_new(const Graph& g, VertexMask covered) {
  for (const Edge& e : g.edges())
    if (!(covered & (vertex_bit(e.u) | vertex_bit(e.v)))) return e;
  return std::nullopt;
}

}  // namespace

int semi_greedy_target(std::span<const int> uncovered) {
  const int n = static_cast<int>(uncovered.size());
  if (n == 0) return -1;
  const auto order = rank_classes(uncovered);
  const int top = order[n - 1];
  if (uncovered[top] == 0) return -1;
  if (n == 1) return top;
  const int runner = order[n - 2];
  if (uncovered[top] > uncovered[runner]) return top;
  if (n >= 3 && uncovered[order[n - 3]] > 0) return order[n - 3];
  return top;
}

std::optional<Edge> cover_one_edge(const MultipartiteSpec& spec, VertexMask covered, int target) {
  const int v = lowest_uncovered(spec, covered, target);
  if (v < 0) return std::nullopt;
  for (int c = 0; c < spec.class_count(); ++c) {
    if (c == target) continue;
    for (int w = spec.offset(c); w < spec.offset(c + 1); ++w)
      if (covered & vertex_bit(w)) return Edge(v, w);
  }
  return std::nullopt;
}

Edge semi_greedy_move(const MultipartiteGraph& mg, const EdgeGameState& s) {
  require_playable(mg, s, "semi-greedy Staller");
  const auto uncovered = uncovered_by_class(mg.spec, s.covered);
  if (s.covered == 0) {
    // Opening move of a Staller-start game: no covered partner exists yet.
    const auto order = rank_classes(uncovered);
    const int n = static_cast<int>(order.size());
    return Edge(lowest_uncovered(mg.spec, 0, order[n - 1]), lowest_uncovered(mg.spec, 0, order[n - 2]));
  }
  const int target = semi_greedy_target(uncovered);
  auto e = cover_one_edge(mg.spec, s.covered, target);
  if (!e) throw std::logic_error("semi-greedy Staller found no covered partner");
  return *e;
}

Edge greedy_staller_move(const MultipartiteGraph& mg, const EdgeGameState& s) {
  require_playable(mg, s, "greedy Staller");
  const auto uncovered = uncovered_by_class(mg.spec, s.covered);
  const int target = static_cast<int>(std::max_element(uncovered.begin(), uncovered.end()) - uncovered.begin());
  if (auto e = cover_one_edge(mg.spec, s.covered, target)) return *e;
  return *first_two_new(mg.graph, s.covered);
}

Edge matching_dominator_move(const MultipartiteGraph& mg, const Matching& matching, const EdgeGameState& s) {
  require_playable(mg, s, "matching Dominator");
  for (const Edge& e : matching.edges)
    if (!(s.covered & (vertex_bit(e.u) | vertex_bit(e.v)))) return e;
  if (auto e = first_two_new(mg.graph, s.covered)) return *e;
  // Only one class keeps uncovered vertices would mean a terminal position,
  // so a two-new edge always exists here.
  throw std::logic_error("matching Dominator found no two-new edge");
}

namespace {

class OptimalStrategy final : public Strategy {
 public:
  OptimalStrategy(StrategyKind kind, const MultipartiteGraph& mg, std::shared_ptr<ReducedSolver> solver)
      : kind_(kind), mg_(mg), solver_(std::move(solver)) {}

  Edge choose(const EdgeGameState& s) override {
    require_playable(mg_, s, strategy_name(kind_));
    const auto state = project_state(mg_.spec, s.covered, s.to_move);
    const auto preferred = kind_ == StrategyKind::OptimalDominator ? ReducedMove::Kind::CoverTwo
                                                                  : ReducedMove::Kind::CoverOne;
    return lift_move(mg_.spec, s.covered, solver_->best_move_preferring(state, preferred));
  }
  StrategyKind kind() const override { return kind_; }

 private:
  StrategyKind kind_;
  const MultipartiteGraph& mg_;
  std::shared_ptr<ReducedSolver> solver_;
};

class RuleStrategy final : public Strategy {
 public:
  RuleStrategy(StrategyKind kind, const MultipartiteGraph& mg) : kind_(kind), mg_(mg) {
    if (kind_ == StrategyKind::MatchingDominator && mg_.spec.class_count() >= 2)
      matching_ = build_max_matching(mg_.spec.without_largest());
  }

  Edge choose(const EdgeGameState& s) override {
    switch (kind_) {
      case StrategyKind::MatchingDominator: return matching_dominator_move(mg_, matching_, s);
      case StrategyKind::SemiGreedyStaller: return semi_greedy_move(mg_, s);
      default: return greedy_staller_move(mg_, s);
    }
  }
  StrategyKind kind() const override { return kind_; }

 private:
  StrategyKind kind_;
  const MultipartiteGraph& mg_;
  Matching matching_;
};

}  // namespace

std::unique_ptr<Strategy> make_strategy(StrategyKind kind, const MultipartiteGraph& mg,
                                        std::shared_ptr<ReducedSolver> solver) {
  if (kind == StrategyKind::OptimalDominator || kind == StrategyKind::OptimalStaller) {
    if (!solver) solver = std::make_shared<ReducedSolver>(mg.spec);
    if (!(solver->spec() == mg.spec)) throw std::invalid_argument("solver spec does not match the graph");
    return std::make_unique<OptimalStrategy>(kind, mg, std::move(solver));
  }
  return std::make_unique<RuleStrategy>(kind, mg);
}

Transcript play_game(const MultipartiteGraph& mg, Strategy& dominator, Strategy& staller, Player starter) {
  EdgeGame game(mg.graph);
  EdgeGameState state = game.initial_state(starter);
  Transcript t;
  t.starter = starter;
  while (!game.is_terminal(state)) {
    Strategy& mover = state.to_move == Player::Dominator ? dominator : staller;
    const Edge e = mover.choose(state);
    const auto idx = mg.graph.edge_index(e.u, e.v);
    if (!idx || !game.is_legal(state, *idx)) {
      std::string covered;
      for (int v : mask_to_vertices(state.covered)) covered += (covered.empty() ? "" : ",") + std::to_string(v);
      throw IllegalMoveError(std::string("strategy ") + strategy_name(mover.kind()) + " played illegal edge (" +
                             std::to_string(e.u) + "," + std::to_string(e.v) + ") on " + mg.spec.to_string() +
                             " with covered {" + covered + "}");
    }
    state = game.apply_move(state, *idx);
    t.moves.push_back(e);
    t.covered_after.push_back(mask_to_vertices(state.covered));
  }
  return t;
}

Transcript play_game(const MultipartiteGraph& mg, StrategyKind dominator, StrategyKind staller, Player starter,
                     std::shared_ptr<ReducedSolver> solver) {
  const bool needs_solver = dominator == StrategyKind::OptimalDominator || staller == StrategyKind::OptimalStaller;
  if (needs_solver && !solver) solver = std::make_shared<ReducedSolver>(mg.spec);
  auto d = make_strategy(dominator, mg, solver);
  auto s = make_strategy(staller, mg, solver);
  return play_game(mg, *d, *s, starter);
}

int shortest_vs_optimal_dominators(const MultipartiteGraph& mg, StrategyKind staller, Player starter,
                                   std::shared_ptr<ReducedSolver> solver) {
  if (!solver) solver = std::make_shared<ReducedSolver>(mg.spec);
  auto s = make_strategy(staller, mg, solver);
  EdgeGame game(mg.graph);
  std::unordered_map<std::uint64_t, int> memo;

  auto value_after = [&](const EdgeGameState& st, int idx) {
    const EdgeGameState next = game.apply_move(st, idx);
    return solver->value(project_state(mg.spec, next.covered, next.to_move));
  };

  auto rec = [&](auto&& self, const EdgeGameState& st) -> int {
    if (game.is_terminal(st)) return 0;
    const std::uint64_t key = (st.covered << 1) | (st.to_move == Player::Staller);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int best;
    if (st.to_move == Player::Staller) {
      const Edge e = s->choose(st);
      const auto idx = mg.graph.edge_index(e.u, e.v);
      if (!idx || !game.is_legal(st, *idx))
        throw IllegalMoveError(std::string("strategy ") + strategy_name(staller) + " played an illegal edge");
      best = 1 + self(self, game.apply_move(st, *idx));
    } else {
      const auto legal = game.legal_moves(st);
      std::vector<int> pool;
      for (int idx : legal)
        if (game.new_vertex_count(st, idx) == 2) pool.push_back(idx);
      if (pool.empty()) pool = legal;
      int target = std::numeric_limits<int>::max();
      std::vector<int> values(pool.size());
      for (std::size_t k = 0; k < pool.size(); ++k) target = std::min(target, values[k] = value_after(st, pool[k]));
      best = std::numeric_limits<int>::max();
      for (std::size_t k = 0; k < pool.size(); ++k)
        if (values[k] == target) best = std::min(best, 1 + self(self, game.apply_move(st, pool[k])));
    }
    memo.emplace(key, best);
    return best;
  };
  return rec(rec, game.initial_state(starter));
}

}  // namespace domgame
