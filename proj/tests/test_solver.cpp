#include <gtest/gtest.h>

#include <random>

#include "domgame/corpus.hpp"
#include "domgame/errors.hpp"
#include "domgame/solver.hpp"
#include "oracle.hpp"

using namespace domgame;

TEST(EdgeSolver, SmallKnownValues) {
  EXPECT_EQ(solve_edge_game(complete_graph(2), {}, Player::Dominator).value, 1);
  EXPECT_EQ(solve_edge_game(complete_graph(3), {}, Player::Staller).value, 1);
  EXPECT_EQ(solve_edge_game(Graph(3, {}), {}, Player::Dominator).value, 0);
  EXPECT_FALSE(solve_edge_game(Graph(3, {}), {}, Player::Dominator).best_move.has_value());
}

TEST(EdgeSolver, MatchesOracleOnCorpus) {
  for (const Graph& g : corpus::connected_graphs(6, 9)) {
    for (Player p : {Player::Dominator, Player::Staller}) {
      const auto r = solve_edge_game(g, {}, p);
      ASSERT_EQ(r.value, oracle::edge_value(g, {}, p == Player::Dominator)) << serialize_edge_list(g);
      if (r.value > 0) {
        // The reported move must realise the value.
        ASSERT_TRUE(r.best_move);
        const EdgeGame game(g);
        const auto next = game.apply_move(game.initial_state(p), *r.best_move);
        EdgeGameSolver solver(game);
        EXPECT_EQ(1 + solver.value(next.covered, next.to_move), r.value);
      }
    }
  }
}

TEST(EdgeSolver, MatchesOracleWithPredominatedEdges) {
  std::mt19937_64 rng(21);
  for (const Graph& g : corpus::connected_graphs(6, 8)) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<int> a;
      for (int i = 0; i < g.edge_count(); ++i)
        if (rng() % 3 == 0) a.push_back(i);
      for (Player p : {Player::Dominator, Player::Staller})
        ASSERT_EQ(solve_edge_game(g, a, p).value, oracle::edge_value(g, a, p == Player::Dominator));
    }
  }
}

TEST(EdgeSolver, CompleteGraphsAgainstOracle) {
  for (int m = 2; m <= 7; ++m) {
    const Graph g = complete_graph(m);
    EXPECT_EQ(solve_edge_game(g, {}, Player::Dominator).value, oracle::edge_value(g, {}, true)) << m;
  }
}

TEST(EdgeSolver, FourCycle) {
  const auto mg = build_complete_multipartite(MultipartiteSpec({2, 2}));
  const int value = solve_edge_game(mg.graph, {}, Player::Dominator).value;
  EXPECT_EQ(value, oracle::edge_value(mg.graph, {}, true));
  EXPECT_EQ(value, 2);
}

TEST(EdgeSolver, UnmemoizedAgrees) {
  SolverOptions plain;
  plain.memoize = false;
  for (const Graph& g : corpus::connected_graphs(5, 6))
    EXPECT_EQ(solve_edge_game(g, {}, Player::Staller, plain).value, solve_edge_game(g, {}, Player::Staller).value);
}

TEST(EdgeSolver, Caps) {
  SolverOptions options;
  options.vertex_cap = 5;
  EXPECT_THROW(solve_edge_game(path_graph(6), {}, Player::Dominator, options), SizeCapError);
  options.vertex_cap = kHardVertexCap + 1;
  EXPECT_THROW(solve_edge_game(path_graph(3), {}, Player::Dominator, options), SizeCapError);
  try {
    solve_edge_game(path_graph(21), {}, Player::Dominator);
    ADD_FAILURE();
  } catch (const SizeCapError& e) {
    EXPECT_EQ(e.cap(), 20);
  }
}

TEST(MoveFilters, Parse) {
  EXPECT_EQ(parse_move_filter("none"), MoveFilter::Unrestricted);
  EXPECT_EQ(parse_move_filter("two-new"), MoveFilter::DominatorTwoNew);
  EXPECT_EQ(parse_move_filter("2-1"), MoveFilter::TwoOne);
  EXPECT_THROW(parse_move_filter("fast"), std::invalid_argument);
}

TEST(MoveFilters, DominatorTwoNewRestrictsOnlyWhenAvailable) {
  const Graph g = path_graph(4);
  const EdgeGame game(g);
  SolverOptions options;
  options.filter = MoveFilter::DominatorTwoNew;
  EdgeGameSolver solver(game, options);
  EXPECT_EQ(solver.candidate_moves(0, Player::Dominator), (std::vector<int>{0, 1, 2}));
  // Covered {1}: edge 2 = (2,3) is the only two-new edge.
  EXPECT_EQ(solver.candidate_moves(0b0010, Player::Dominator), (std::vector<int>{2}));
  EXPECT_EQ(solver.candidate_moves(0b0001, Player::Dominator), (std::vector<int>{1, 2}));
  EXPECT_EQ(solver.candidate_moves(0b0010, Player::Staller), game.legal_moves({0b0010, {}, Player::Staller, 0}));
}

TEST(MoveFilters, TwoOneInfeasibleIsReported) {
  // On the triangle Staller opens, and the only legal moves cover two new
  // vertices, so Staller has no one-new move.
  SolverOptions options;
  options.filter = MoveFilter::TwoOne;
  EXPECT_THROW(solve_edge_game(complete_graph(3), {}, Player::Staller, options), FilterInfeasibleError);
  EXPECT_EQ(solve_edge_game(complete_graph(3), {}, Player::Dominator, options).value, 1);
}

TEST(VertexSolver, MatchesOracle) {
  EXPECT_EQ(solve_vertex_game(Graph(1, {}), 0, Player::Dominator).value, 1);
  for (const Graph& g : corpus::connected_graphs(6, 9))
    for (Player p : {Player::Dominator, Player::Staller})
      ASSERT_EQ(solve_vertex_game(g, 0, p).value, oracle::vertex_value(g, p == Player::Dominator));
}

TEST(VertexSolver, LineGraphEquivalence) {
  EXPECT_EQ(solve_vertex_game(line_graph(complete_graph(3)), 0, Player::Dominator).value, 1);
  const Graph p4 = path_graph(4);
  for (Player p : {Player::Dominator, Player::Staller})
    EXPECT_EQ(solve_vertex_game(line_graph(p4), 0, p).value, solve_edge_game(p4, {}, p).value);
}

TEST(Continuation, Basics) {
  const Graph g = complete_graph(4);
  const std::vector<int> none, some{0, 3}, all{0, 1, 2, 3, 4, 5};
  EXPECT_TRUE(check_continuation(g, some, some, Player::Dominator));
  EXPECT_TRUE(check_continuation(g, none, all, Player::Staller));
  EXPECT_EQ(solve_edge_game(g, all, Player::Staller).value, 0);
  EXPECT_THROW(check_continuation(g, all, some, Player::Dominator), std::invalid_argument);
  EXPECT_THROW(check_continuation(g, none, std::vector<int>{9}, Player::Dominator), std::invalid_argument);
}

TEST(Continuation, RandomTriplesAgainstOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = corpus::random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.6);
    std::vector<int> a, b;
    for (int i = 0; i < g.edge_count(); ++i) {
      const auto r = rng() % 3;
      if (r == 0) a.push_back(i);
      if (r <= 1) b.push_back(i);
    }
    for (bool d : {true, false}) EXPECT_GE(oracle::edge_value(g, a, d), oracle::edge_value(g, b, d));
    EXPECT_TRUE(check_continuation(g, a, b, Player::Dominator));
  }
}
