#include "domgame/reduced.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "domgame/errors.hpp"

namespace domgame {

ReducedState ReducedState::fresh(const MultipartiteSpec& spec, Player to_move) {
  ReducedState s;
  for (int m : spec.sizes()) s.classes.push_back({m, 0});
  s.to_move = to_move;
  return s;
}

ReducedState ReducedState::canonical() const {
  ReducedState out = *this;
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

bool ReducedState::is_terminal() const {
  int open = 0;
  for (const auto& c : classes) open += c.covered < c.size;
  return open <= 1;
}

int ReducedState::covered_total() const {
  int total = 0;
  for (const auto& c : classes) total += c.covered;
  return total;
}

std::string ReducedMove::to_string() const {
  if (kind == Kind::CoverTwo) return "CoverTwo(" + std::to_string(first) + "," + std::to_string(second) + ")";
  return "CoverOne(" + std::to_string(first) + ")";
}

bool is_legal(const ReducedState& s, const ReducedMove& m) {
  const int n = static_cast<int>(s.classes.size());
  auto open = [&](int i) { return i >= 0 && i < n && s.classes[i].covered < s.classes[i].size; };
  if (m.kind == ReducedMove::Kind::CoverTwo) return m.first != m.second && open(m.first) && open(m.second);
  if (!open(m.first)) return false;
  bool partner = false, target = false;
  for (int k = 0; k < n; ++k) {
    if (k == m.first) continue;
    partner = partner || s.classes[k].covered >= 1;
    target = target || open(k);
  }
  return partner && target;
}

std::vector<ReducedMove> reduced_moves(const ReducedState& s) {
  std::vector<ReducedMove> out;
  const int n = static_cast<int>(s.classes.size());
  if (s.is_terminal()) return out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (is_legal(s, ReducedMove::cover_two(i, j))) out.push_back(ReducedMove::cover_two(i, j));
  for (int i = 0; i < n; ++i)
    if (is_legal(s, ReducedMove::cover_one(i))) out.push_back(ReducedMove::cover_one(i));
  return out;
}

ReducedState apply_reduced(const ReducedState& s, const ReducedMove& m) {
  if (!is_legal(s, m)) throw IllegalMoveError("illegal reduced move " + m.to_string());
  ReducedState next = s;
  ++next.classes[m.first].covered;
  if (m.kind == ReducedMove::Kind::CoverTwo) ++next.classes[m.second].covered;
  next.to_move = opponent(s.to_move);
  return next.canonical();
}

std::vector<ReducedState> reduced_successors(const ReducedState& s) {
  std::vector<ReducedState> out;
  for (const auto& m : reduced_moves(s)) {
    ReducedState next = apply_reduced(s, m);
    if (std::find(out.begin(), out.end(), next) == out.end()) out.push_back(std::move(next));
  }
  std::sort(out.begin(), out.end(),
            [](const ReducedState& a, const ReducedState& b) { return a.classes < b.classes; });
  return out;
}

ReducedSolver::ReducedSolver(MultipartiteSpec spec, ReducedOptions options)
    : spec_(std::move(spec)), options_(options) {
  const int n = spec_.class_count();
  stride_.resize(n);
  std::int64_t total = 1;
  for (int i = n - 1; i >= 0; --i) {
    stride_[i] = total;
    total *= spec_.size(i) + 1;
    if (total > options_.state_cap)
      throw SizeCapError("reduced state space of " + spec_.to_string() + " exceeds cap " +
                             std::to_string(options_.state_cap),
                         options_.state_cap);
  }
  group_end_.resize(n);
  for (int i = n - 1; i >= 0; --i)
    group_end_[i] = (i + 1 < n && spec_.size(i + 1) == spec_.size(i)) ? group_end_[i + 1] : i + 1;
  memo_.assign(static_cast<std::size_t>(total) * 2, std::int16_t{-1});
}

void ReducedSolver::check_state(const ReducedState& s) const {
  if (static_cast<int>(s.classes.size()) != spec_.class_count())
    throw std::invalid_argument("reduced state does not match solver spec");
  for (int i = 0; i < spec_.class_count(); ++i) {
    const auto& c = s.classes[i];
    if (c.size != spec_.size(i) || c.covered < 0 || c.covered > c.size)
      throw std::invalid_argument("reduced state does not match solver spec");
  }
}

std::vector<ReducedMove> ReducedSolver::candidates(const ReducedState& s) const {
  auto moves = reduced_moves(s);
  if (moves.empty() || options_.filter == MoveFilter::Unrestricted) return moves;
  std::vector<ReducedMove> kept;
  const auto wanted = (s.to_move == Player::Dominator) ? ReducedMove::Kind::CoverTwo
                                                       : ReducedMove::Kind::CoverOne;
  if (s.to_move == Player::Staller && options_.filter == MoveFilter::DominatorTwoNew) return moves;
  for (const auto& m : moves)
    if (m.kind == wanted) kept.push_back(m);
  if (!kept.empty()) return kept;
  if (options_.filter == MoveFilter::DominatorTwoNew) return moves;
  throw FilterInfeasibleError(std::string("filter ") + move_filter_name(options_.filter) +
                              " leaves no move in reduced position of " + spec_.to_string());
}

int ReducedSolver::search(std::vector<int>& covered, Player to_move) {
  const int n = spec_.class_count();
  std::int64_t code = 0;
  for (int i = 0; i < n; ++i) code += covered[i] * stride_[i];
  const std::size_t slot = static_cast<std::size_t>(code) * 2 + (to_move == Player::Staller);
  if (memo_[slot] >= 0) {
    ++memo_hits_;
    return memo_[slot];
  }
  ++states_explored_;

  int open = 0, holders = 0;
  for (int i = 0; i < n; ++i) {
    open += covered[i] < spec_.size(i);
    holders += covered[i] > 0;
  }

  int best = 0;
  if (open >= 2) {
    const bool dom = to_move == Player::Dominator;
    best = dom ? INT32_MAX : -1;
    bool any = false;
    // Apply a move to a copy, restore canonical order inside the equal-size
    // run, recurse.
    auto visit = [&](int i, int j) {
      std::vector<int> next = covered;
      ++next[i];
      if (j >= 0) ++next[j];
      for (int k : {i, j}) {
        if (k < 0) continue;
        int start = k;
        while (start > 0 && group_end_[start - 1] == group_end_[k]) --start;
        std::sort(next.begin() + start, next.begin() + group_end_[k]);
      }
      int v = search(next, opponent(to_move));
      best = dom ? std::min(best, v) : std::max(best, v);
      any = true;
    };
    // Skipping a class whose left neighbour has the same (size, covered)
    // avoids re-visiting symmetric successors.
    auto same_as_prev = [&](int i) {
      return i > 0 && spec_.size(i - 1) == spec_.size(i) && covered[i - 1] == covered[i];
    };
    const bool want_two = !(options_.filter == MoveFilter::TwoOne && !dom);
    const bool two_only = options_.filter != MoveFilter::Unrestricted && dom;
    if (want_two) {
      for (int i = 0; i < n; ++i) {
        if (covered[i] >= spec_.size(i) || same_as_prev(i)) continue;
        for (int j = i + 1; j < n; ++j) {
          if (covered[j] >= spec_.size(j)) continue;
          if (j > i + 1 && spec_.size(j - 1) == spec_.size(j) && covered[j - 1] == covered[j]) continue;
          visit(i, j);
        }
      }
    }
    if (!(two_only && any)) {
      if (!(options_.filter == MoveFilter::TwoOne && dom)) {
        for (int i = 0; i < n; ++i) {
          if (covered[i] >= spec_.size(i) || same_as_prev(i)) continue;
          const int partners = holders - (covered[i] > 0);
          const int others_open = open - 1;
          if (partners > 0 && others_open > 0) visit(i, -1);
        }
      }
    }
    if (!any)
      throw FilterInfeasibleError(std::string("filter ") + move_filter_name(options_.filter) +
                                  " leaves no move in reduced position of " + spec_.to_string());
    best += 1;
  }
  memo_[slot] = static_cast<std::int16_t>(best);
  return best;
}

int ReducedSolver::value(const ReducedState& s) {
  const ReducedState c = s.canonical();
  check_state(c);
  std::vector<int> covered;
  for (const auto& cc : c.classes) covered.push_back(cc.covered);
  return search(covered, c.to_move);
}

ReducedResult ReducedSolver::solve(const ReducedState& s) {
  const std::uint64_t explored0 = states_explored_, hits0 = memo_hits_;
  ReducedResult r;
  r.value = value(s);
  if (r.value > 0) r.best_move = best_move(s);
  r.states_explored = states_explored_ - explored0;
  r.memo_hits = memo_hits_ - hits0;
  return r;
}

ReducedMove ReducedSolver::best_move(const ReducedState& s) {
  const ReducedState c = s.canonical();
  check_state(c);
  const auto moves = candidates(c);
  if (moves.empty()) throw std::invalid_argument("best_move on a terminal reduced state");
  const bool dom = c.to_move == Player::Dominator;
  std::optional<ReducedMove> best;
  int best_value = 0;
  for (const auto& m : moves) {
    int v = value(apply_reduced(c, m));
    if (!best || (dom ? v < best_value : v > best_value)) {
      best = m;
      best_value = v;
    }
  }
  return *best;
}

ReducedMove ReducedSolver::best_move_preferring(const ReducedState& s, ReducedMove::Kind kind) {
  const ReducedState c = s.canonical();
  check_state(c);
  auto moves = reduced_moves(c);
  if (moves.empty()) throw std::invalid_argument("best_move on a terminal reduced state");
  std::vector<ReducedMove> kept;
  for (const auto& m : moves)
    if (m.kind == kind) kept.push_back(m);
  if (kept.empty()) kept = moves;
  const bool dom = c.to_move == Player::Dominator;
  std::optional<ReducedMove> best;
  int best_value = 0;
  for (const auto& m : kept) {
    int v = value(apply_reduced(c, m));
    if (!best || (dom ? v < best_value : v > best_value)) {
      best = m;
      best_value = v;
    }
  }
  return *best;
}

SolveResult reduced_value(const MultipartiteSpec& spec, Player starter, ReducedOptions options) {
  ReducedSolver solver(spec, options);
  auto r = solver.solve(ReducedState::fresh(spec, starter));
  SolveResult out;
  out.value = r.value;
  out.states_explored = r.states_explored;
  out.memo_hits = r.memo_hits;
  return out;
}

ReducedMove reduced_best_move(const ReducedState& s) {
  std::vector<int> sizes;
  for (const auto& c : s.classes) sizes.push_back(c.size);
  ReducedSolver solver{MultipartiteSpec(sizes)};
  return solver.best_move(s);
}

std::vector<int> canonical_class_order(const MultipartiteSpec& spec, VertexMask covered) {
  const int n = spec.class_count();
  std::vector<int> counts(n, 0);
  for (int v : mask_to_vertices(covered))
    if (v < spec.vertex_count()) ++counts[spec.class_of(v)];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return ClassCount{spec.size(a), counts[a]} < ClassCount{spec.size(b), counts[b]};
  });
  return order;
}

ReducedState project_state(const MultipartiteSpec& spec, VertexMask covered, Player to_move) {
  if (spec.vertex_count() > kMaxEngineVertices)
    throw SizeCapError("concrete positions support at most 64 vertices", kMaxEngineVertices);
  ReducedState s = ReducedState::fresh(spec, to_move);
  for (int v : mask_to_vertices(covered)) {
    if (v >= spec.vertex_count()) throw std::invalid_argument("covered vertex out of range");
    ++s.classes[spec.class_of(v)].covered;
  }
  return s.canonical();
}

namespace {

int lowest_in_class(const MultipartiteSpec& spec, VertexMask covered, int cls, bool want_covered) {
  for (int v = spec.offset(cls); v < spec.offset(cls + 1); ++v)
    if (((covered & vertex_bit(v)) != 0) == want_covered) return v;
  return -1;
}

}  // namespace

Edge lift_move(const MultipartiteSpec& spec, VertexMask covered, const ReducedMove& m) {
  const auto order = canonical_class_order(spec, covered);
  const int n = spec.class_count();
  if (m.first < 0 || m.first >= n) throw std::logic_error("reduced move class out of range");
  const int a = lowest_in_class(spec, covered, order[m.first], false);
  if (a < 0) throw std::logic_error("lift: class has no uncovered vertex");
  if (m.kind == ReducedMove::Kind::CoverTwo) {
    if (m.second < 0 || m.second >= n || m.second == m.first)
      throw std::logic_error("reduced move class out of range");
    const int b = lowest_in_class(spec, covered, order[m.second], false);
    if (b < 0) throw std::logic_error("lift: class has no uncovered vertex");
    return Edge(a, b);
  }
  for (int cls = 0; cls < n; ++cls) {
    if (cls == order[m.first]) continue;
    if (int partner = lowest_in_class(spec, covered, cls, true); partner >= 0) return Edge(a, partner);
  }
  throw std::logic_error("lift: no covered partner outside the target class");
}

ReducedMove project_move(const MultipartiteSpec& spec, VertexMask covered, const Edge& e) {
  const auto order = canonical_class_order(spec, covered);
  std::vector<int> position(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = static_cast<int>(p);
  const bool u_new = !(covered & vertex_bit(e.u));
  const bool v_new = !(covered & vertex_bit(e.v));
  const int cu = spec.class_of(e.u), cv = spec.class_of(e.v);
  if (cu == cv) throw std::invalid_argument("edge endpoints lie in the same class");
  if (u_new && v_new) return ReducedMove::cover_two(position[cu], position[cv]);
  if (u_new) return ReducedMove::cover_one(position[cu]);
  if (v_new) return ReducedMove::cover_one(position[cv]);
  throw std::invalid_argument("edge covers no new vertex");
}

}  // namespace domgame
