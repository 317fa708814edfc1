#include "domgame/game.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "domgame/errors.hpp"

namespace domgame {

Player parse_player(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "d" || lower == "dominator") return Player::Dominator;
  if (lower == "s" || lower == "staller") return Player::Staller;
  throw std::invalid_argument("unknown player '" + std::string(text) + "'");
}

std::vector<int> mask_to_vertices(VertexMask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

namespace {

std::vector<int> bits_to_indices(const std::vector<std::uint64_t>& words, int limit) {
  std::vector<int> out;
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits) {
      int i = static_cast<int>(w * 64) + std::countr_zero(bits);
      if (i < limit) out.push_back(i);
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace

EdgeGame::EdgeGame(Graph graph, std::vector<int> predominated)
    : graph_(std::move(graph)), predominated_(std::move(predominated)) {
  if (graph_.vertex_count() > kMaxEngineVertices)
    throw SizeCapError("edge game engine supports at most 64 vertices", kMaxEngineVertices);
  std::sort(predominated_.begin(), predominated_.end());
  predominated_.erase(std::unique(predominated_.begin(), predominated_.end()), predominated_.end());
  predominated_flag_.assign(graph_.edge_count(), false);
  for (int e : predominated_) {
    if (e < 0 || e >= graph_.edge_count())
      throw std::invalid_argument("pre-dominated edge index out of range");
    predominated_flag_[e] = true;
  }

  const int m = graph_.edge_count();
  const std::size_t padded = kernels::padded4(m);
  table_.edge_count = m;
  table_.first_bit.assign(padded, 0);
  table_.second_bit.assign(padded, 0);
  table_.first_open.assign(padded, 0);
  table_.second_open.assign(padded, 0);

  std::vector<VertexMask> open(graph_.vertex_count(), 0);
  for (int i = 0; i < m; ++i) {
    if (predominated_flag_[i]) continue;
    const Edge& e = graph_.edge(i);
    open[e.u] |= vertex_bit(e.v);
    open[e.v] |= vertex_bit(e.u);
  }
  for (int i = 0; i < m; ++i) {
    const Edge& e = graph_.edge(i);
    table_.first_bit[i] = vertex_bit(e.u);
    table_.second_bit[i] = vertex_bit(e.v);
    table_.first_open[i] = open[e.u];
    table_.second_open[i] = open[e.v];
  }
}

EdgeGameState EdgeGame::initial_state(Player starter) const {
  return EdgeGameState{0, predominated_, starter, 0};
}

bool EdgeGame::is_dominated(const EdgeGameState& s, int edge) const {
  const Edge& e = graph_.edge(edge);
  return predominated_flag_[edge] || (s.covered & (vertex_bit(e.u) | vertex_bit(e.v))) != 0;
}

void EdgeGame::move_masks(VertexMask covered, kernels::EdgeMoveMasks& out) const {
  kernels::edge_moves(table_, ~covered & all_vertices(graph_.vertex_count()), out);
}

std::vector<int> EdgeGame::legal_moves(const EdgeGameState& s) const {
  kernels::EdgeMoveMasks masks;
  move_masks(s.covered, masks);
  return bits_to_indices(masks.legal, graph_.edge_count());
}

std::vector<int> EdgeGame::legal_moves_direct(const EdgeGameState& s) const {
  std::vector<int> out;
  for (int i = 0; i < graph_.edge_count(); ++i) {
    const Edge& e = graph_.edge(i);
    bool adds = false;
    for (int end : {e.u, e.v})
      for (int f : graph_.incident_edges(end))
        if (!is_dominated(s, f)) adds = true;
    if (adds) out.push_back(i);
  }
  return out;
}

bool EdgeGame::is_legal(const EdgeGameState& s, int edge) const {
  if (edge < 0 || edge >= graph_.edge_count()) return false;
  const VertexMask unc = ~s.covered & all_vertices(graph_.vertex_count());
  return ((table_.first_bit[edge] & unc) && (table_.first_open[edge] & unc)) ||
         ((table_.second_bit[edge] & unc) && (table_.second_open[edge] & unc));
}

bool EdgeGame::is_terminal(const EdgeGameState& s) const {
  kernels::EdgeMoveMasks masks;
  move_masks(s.covered, masks);
  return std::all_of(masks.legal.begin(), masks.legal.end(), [](std::uint64_t w) { return w == 0; });
}

int EdgeGame::new_vertex_count(const EdgeGameState& s, int edge) const {
  const Edge& e = graph_.edge(edge);
  return std::popcount((vertex_bit(e.u) | vertex_bit(e.v)) & ~s.covered);
}

EdgeGameState EdgeGame::apply_move(const EdgeGameState& s, int edge) const {
  if (edge < 0 || edge >= graph_.edge_count())
    throw IllegalMoveError("edge index " + std::to_string(edge) + " is not an edge of the graph");
  if (!is_legal(s, edge)) {
    const Edge& e = graph_.edge(edge);
    throw IllegalMoveError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") dominates no new edge");
  }
  const Edge& e = graph_.edge(edge);
  EdgeGameState next;
  next.covered = s.covered | vertex_bit(e.u) | vertex_bit(e.v);
  for (int r : s.residual_dominated) {
    const Edge& f = graph_.edge(r);
    if (!(next.covered & (vertex_bit(f.u) | vertex_bit(f.v)))) next.residual_dominated.push_back(r);
  }
  next.to_move = opponent(s.to_move);
  next.moves_made = s.moves_made + 1;
  return next;
}

nlohmann::json to_json(const Transcript& t) {
  nlohmann::json moves = nlohmann::json::array();
  for (const Edge& e : t.moves) moves.push_back({e.u, e.v});
  return {{"starter", std::string(1, player_code(t.starter))},
          {"moves", moves},
          {"coveredAfter", t.covered_after},
          {"length", t.length()}};
}

VertexGame::VertexGame(const Graph& graph) {
  if (graph.vertex_count() > kMaxEngineVertices)
    throw SizeCapError("vertex game engine supports at most 64 vertices", kMaxEngineVertices);
  closed_.resize(graph.vertex_count());
  for (int v = 0; v < graph.vertex_count(); ++v) {
    closed_[v] = vertex_bit(v);
    for (int w : graph.neighbors(v)) closed_[v] |= vertex_bit(w);
  }
}

std::vector<int> VertexGame::legal_moves(VertexMask dominated) const {
  std::vector<std::uint64_t> words(kernels::words_for(vertex_count()));
  kernels::vertex_moves(closed_, dominated, words);
  return bits_to_indices(words, vertex_count());
}

bool VertexGame::is_terminal(VertexMask dominated) const {
  return (dominated & all_vertices(vertex_count())) == all_vertices(vertex_count());
}

VertexMask VertexGame::apply(VertexMask dominated, int v) const {
  if (v < 0 || v >= vertex_count()) throw IllegalMoveError("vertex out of range");
  if (!(closed_[v] & ~dominated))
    throw IllegalMoveError("vertex " + std::to_string(v) + " dominates no new vertex");
  return dominated | closed_[v];
}

}  // namespace domgame
