#include <gtest/gtest.h>

#include <random>

#include "domgame/corpus.hpp"
#include "domgame/errors.hpp"
#include "domgame/game.hpp"

using namespace domgame;

namespace {

// Legal iff some edge sharing an endpoint with e (or e itself) is neither
// pre-dominated nor touches a covered vertex.
std::vector<int> legal_by_definition(const Graph& g, const std::vector<int>& a, VertexMask covered) {
  std::vector<bool> in_a(g.edge_count());
  for (int i : a) in_a[i] = true;
  std::vector<int> out;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge e = g.edge(i);
    bool legal = false;
    for (int j = 0; j < g.edge_count() && !legal; ++j) {
      const Edge f = g.edge(j);
      const bool near = f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v;
      const bool undominated = !in_a[j] && !(covered & vertex_bit(f.u)) && !(covered & vertex_bit(f.v));
      legal = near && undominated;
    }
    if (legal) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> predominated_samples(const Graph& g, std::mt19937_64& rng) {
  std::vector<std::vector<int>> out;
  const int m = g.edge_count();
  if (m <= 6) {
    for (int bits = 0; bits < (1 << m); ++bits) {
      std::vector<int> a;
      for (int i = 0; i < m; ++i)
        if (bits >> i & 1) a.push_back(i);
      out.push_back(a);
    }
    return out;
  }
  out.emplace_back();
  for (int k = 0; k < 12; ++k) {
    std::vector<int> a;
    for (int i = 0; i < m; ++i)
      if (rng() % 3 == 0) a.push_back(i);
    out.push_back(a);
  }
  return out;
}

EdgeGameState play(const EdgeGame& game, EdgeGameState s, std::initializer_list<Edge> edges) {
  for (const Edge& e : edges) s = game.apply_move(s, *game.graph().edge_index(e.u, e.v));
  return s;
}

}  // namespace

TEST(EdgeGame, KernelLegalityMatchesDefinitionExhaustively) {
  std::mt19937_64 rng(5);
  long positions = 0;
  for (const Graph& g : corpus::connected_graphs(5, 10)) {
    for (const auto& a : predominated_samples(g, rng)) {
      const EdgeGame game(g, a);
      for (VertexMask covered = 0; covered < (VertexMask{1} << g.vertex_count()); ++covered) {
        EdgeGameState s = game.initial_state(Player::Dominator);
        s.covered = covered;
        const auto expected = legal_by_definition(g, a, covered);
        ASSERT_EQ(game.legal_moves(s), expected);
        ASSERT_EQ(game.legal_moves_direct(s), expected);
        for (int e : expected) ASSERT_GE(game.new_vertex_count(s, e), 1);
        ++positions;
      }
    }
  }
  EXPECT_GT(positions, 10000);
}

TEST(EdgeGame, SingleEdge) {
  const EdgeGame game(complete_graph(2));
  auto s = game.initial_state(Player::Dominator);
  EXPECT_FALSE(game.is_terminal(s));
  EXPECT_EQ(game.legal_moves(s), std::vector<int>{0});
  s = game.apply_move(s, 0);
  EXPECT_EQ(s.covered, 3u);
  EXPECT_EQ(s.moves_made, 1);
  EXPECT_EQ(s.to_move, Player::Staller);
  EXPECT_TRUE(game.is_terminal(s));
}

TEST(EdgeGame, TriangleEndsAfterOneMove) {
  const EdgeGame game(complete_graph(3));
  for (int e = 0; e < 3; ++e) {
    const auto s = game.apply_move(game.initial_state(Player::Dominator), e);
    EXPECT_TRUE(game.legal_moves(s).empty());
    EXPECT_TRUE(game.is_terminal(s));
    EXPECT_EQ(std::popcount(s.covered), 2);
  }
}

TEST(EdgeGame, ExampleTreeStopsWithUncoveredVertices) {
  const EdgeGame game(corpus::example_tree());
  const auto s = play(game, game.initial_state(Player::Dominator), {Edge(2, 3), Edge(3, 4)});
  EXPECT_TRUE(game.legal_moves(s).empty());
  EXPECT_TRUE(game.is_terminal(s));
  EXPECT_EQ(7 - std::popcount(s.covered), 4);
}

TEST(EdgeGame, FourCycleDisjointMoves) {
  const auto mg = build_complete_multipartite(MultipartiteSpec({2, 2}));
  const EdgeGame game(mg.graph);
  const auto s = play(game, game.initial_state(Player::Dominator), {Edge(0, 2), Edge(1, 3)});
  EXPECT_TRUE(game.is_terminal(s));
  EXPECT_EQ(s.covered, 0xFu);
  EXPECT_EQ(s.moves_made, 2);
}

TEST(EdgeGame, LargeMultipartiteNotTerminalAfterOneMove) {
  const auto mg = build_complete_multipartite(MultipartiteSpec({2, 2, 6, 6}));
  const EdgeGame game(mg.graph);
  const auto start = game.initial_state(Player::Dominator);
  for (int e = 0; e < mg.graph.edge_count(); ++e) EXPECT_FALSE(game.is_terminal(game.apply_move(start, e)));
}

TEST(EdgeGame, IllegalMovesThrow) {
  const EdgeGame game(complete_graph(3));
  const auto s = game.apply_move(game.initial_state(Player::Dominator), 0);
  EXPECT_THROW(game.apply_move(s, 1), IllegalMoveError);
  EXPECT_THROW(game.apply_move(s, 7), IllegalMoveError);
  EXPECT_THROW(game.apply_move(s, -1), IllegalMoveError);
}

TEST(EdgeGame, PredominatedEdgesAndResidual) {
  // Path 0-1-2-3 with the middle edge pre-dominated.
  const EdgeGame game(path_graph(4), {1});
  auto s = game.initial_state(Player::Dominator);
  EXPECT_TRUE(game.is_dominated(s, 1));
  EXPECT_FALSE(game.is_dominated(s, 0));
  EXPECT_EQ(s.residual_dominated, std::vector<int>{1});
  s = game.apply_move(s, 0);
  EXPECT_TRUE(s.residual_dominated.empty());
  EXPECT_EQ(game.legal_moves(s), (std::vector<int>{1, 2}));
  s = game.apply_move(s, 2);
  EXPECT_TRUE(game.is_terminal(s));
}

TEST(EdgeGame, CoveredIncreasesByOneOrTwo) {
  std::mt19937_64 rng(9);
  for (const Graph& g : corpus::connected_graphs(6, 9)) {
    const EdgeGame game(g);
    for (int trial = 0; trial < 5; ++trial) {
      auto s = game.initial_state(Player::Staller);
      while (!game.is_terminal(s)) {
        const auto legal = game.legal_moves(s);
        const int before = std::popcount(s.covered);
        s = game.apply_move(s, legal[rng() % legal.size()]);
        const int gained = std::popcount(s.covered) - before;
        ASSERT_TRUE(gained == 1 || gained == 2);
      }
    }
  }
}

TEST(EdgeGame, RejectsLargeGraphs) { EXPECT_THROW(EdgeGame(path_graph(65)), SizeCapError); }

TEST(Transcript, JsonShape) {
  Transcript t;
  t.starter = Player::Staller;
  t.moves = {Edge(0, 1)};
  t.covered_after = {{0, 1}};
  const auto j = to_json(t);
  EXPECT_EQ(j["starter"], "S");
  EXPECT_EQ(j["length"], 1);
  EXPECT_EQ(j["moves"][0], nlohmann::json::array({0, 1}));
  EXPECT_EQ(j["coveredAfter"][0], nlohmann::json::array({0, 1}));
}

TEST(Players, Parse) {
  EXPECT_EQ(parse_player("D"), Player::Dominator);
  EXPECT_EQ(parse_player("staller"), Player::Staller);
  EXPECT_EQ(parse_player("Dominator"), Player::Dominator);
  EXPECT_THROW(parse_player("x"), std::invalid_argument);
  EXPECT_EQ(opponent(Player::Dominator), Player::Staller);
}

TEST(VertexGame, Basics) {
  const VertexGame game(complete_graph(2));
  EXPECT_EQ(game.legal_moves(0), (std::vector<int>{0, 1}));
  const VertexMask d = game.apply(0, 0);
  EXPECT_EQ(d, 3u);
  EXPECT_TRUE(game.is_terminal(d));
  EXPECT_THROW(game.apply(d, 1), IllegalMoveError);
}

TEST(VertexGame, LegalityMatchesDefinition) {
  for (const Graph& g : corpus::connected_graphs(5, 10)) {
    const VertexGame game(g);
    for (VertexMask d = 0; d < (VertexMask{1} << g.vertex_count()); ++d) {
      std::vector<int> expected;
      for (int v = 0; v < g.vertex_count(); ++v) {
        bool fresh = !(d & vertex_bit(v));
        for (int w : g.neighbors(v)) fresh = fresh || !(d & vertex_bit(w));
        if (fresh) expected.push_back(v);
      }
      ASSERT_EQ(game.legal_moves(d), expected);
    }
  }
}
