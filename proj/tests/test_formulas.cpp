#include <gtest/gtest.h>

#include "domgame/corpus.hpp"
#include "domgame/errors.hpp"
#include "domgame/formulas.hpp"
#include "domgame/reduced.hpp"
#include "domgame/strategies.hpp"
#include "oracle.hpp"

using namespace domgame;
using namespace domgame::formulas;

TEST(Arithmetic, CeilDiv) {
  EXPECT_EQ(ceil_div(0, 3), 0);
  EXPECT_EQ(ceil_div(1, 3), 1);
  EXPECT_EQ(ceil_div(3, 3), 1);
  EXPECT_EQ(ceil_div(4, 3), 2);
  EXPECT_EQ(ceil_div(-1, 2), 0);
  EXPECT_EQ(ceil_div(-3, 2), -1);
  EXPECT_EQ(prefix_sum(MultipartiteSpec({2, 2, 6, 6}), 3), 10);
}

TEST(CompleteGraph, MatchesOracle) {
  const std::vector<int> expected{1, 1, 2, 3, 3, 4, 5, 5};
  for (int m = 2; m <= 9; ++m) {
    EXPECT_EQ(gamma_complete(m), expected[m - 2]) << m;
    EXPECT_EQ(gamma_complete(m), oracle::edge_value(complete_graph(m), {}, true)) << m;
  }
  EXPECT_EQ(gamma_complete(1), 0);
  EXPECT_THROW(gamma_complete(0), InvalidSpecError);
}

TEST(DominatorStart, ExampleValues) {
  EXPECT_EQ(gamma_multipartite(MultipartiteSpec({2, 2, 6, 6})), 10);
  EXPECT_EQ(gamma_multipartite(MultipartiteSpec({2, 2, 4, 5})), 7);
  EXPECT_EQ(gamma_multipartite(MultipartiteSpec({1, 2, 5, 5})), 8);
  EXPECT_EQ(gamma_multipartite(MultipartiteSpec({1, 1})), 1);
  EXPECT_EQ(gamma_multipartite_detail(MultipartiteSpec({2, 2, 6, 6})).branch, Branch::TwoThirds);
  EXPECT_EQ(gamma_multipartite_detail(MultipartiteSpec({2, 2, 4, 5})).branch, Branch::MaxClass);
  EXPECT_THROW(gamma_multipartite(MultipartiteSpec({3})), InvalidSpecError);
}

TEST(DominatorStart, MatchesOracleOnSmallSpecs) {
  for (const auto& spec : corpus::sorted_specs(2, 5, 4)) {
    if (spec.vertex_count() > 9) continue;
    const std::vector<int> sizes(spec.sizes().begin(), spec.sizes().end());
    EXPECT_EQ(gamma_multipartite(spec), oracle::edge_value(oracle::multipartite(sizes), {}, true)) << spec.to_string();
  }
}

TEST(DominatorStart, CompleteGraphsAreAllOnes) {
  for (int m = 2; m <= 9; ++m)
    EXPECT_EQ(gamma_multipartite(MultipartiteSpec(std::vector<int>(m, 1))), gamma_complete(m));
}

TEST(StallerStart, Examples) {
  EXPECT_EQ(gamma_prime_multipartite(MultipartiteSpec({1, 5})), 1);
  EXPECT_EQ(gamma_prime_multipartite(MultipartiteSpec({1, 1, 1, 1})), 2);
  EXPECT_EQ(gamma_prime_via_recursion(MultipartiteSpec({1, 1})), 1);
  EXPECT_EQ(gamma_prime_via_recursion(MultipartiteSpec({1, 1, 1, 1})), 2);
  const MultipartiteSpec big({2, 2, 6, 6});
  EXPECT_EQ(gamma_prime_multipartite(big), reduced_value(big, Player::Staller).value);
}

TEST(StallerStart, TriangleValue) {
  // Staller's first edge on K_3 ends the game.
  const MultipartiteSpec k3({1, 1, 1});
  EXPECT_EQ(oracle::edge_value(complete_graph(3), {}, false), 1);
  EXPECT_EQ(gamma_prime_multipartite(k3), 1);
  EXPECT_EQ(gamma_prime_via_recursion(k3), 1);
  // The uncorrected three-class expression gives 0 on this spec.
  EXPECT_EQ(gamma_prime_mu_eta(k3), 0);
}

TEST(StallerStart, MatchesOracleOnSmallSpecs) {
  for (const auto& spec : corpus::sorted_specs(2, 5, 4)) {
    if (spec.vertex_count() > 9) continue;
    const std::vector<int> sizes(spec.sizes().begin(), spec.sizes().end());
    const int expected = oracle::edge_value(oracle::multipartite(sizes), {}, false);
    EXPECT_EQ(gamma_prime_multipartite(spec), expected) << spec.to_string();
    EXPECT_EQ(gamma_prime_via_recursion(spec), expected) << spec.to_string();
  }
}

TEST(StallerStart, MuEtaAgreesFromFourClasses) {
  for (const auto& spec : corpus::sorted_specs(4, 5, 5))
    EXPECT_EQ(gamma_prime_mu_eta(spec), gamma_prime_multipartite(spec)) << spec.to_string();
  EXPECT_THROW(gamma_prime_mu_eta(MultipartiteSpec({1, 2})), InvalidSpecError);
}

TEST(StallerStart, GammaOrZero) {
  EXPECT_EQ(gamma_or_zero(std::vector<int>{0, 0, 3}), 0);
  EXPECT_EQ(gamma_or_zero(std::vector<int>{0, 1, 1}), 1);
  EXPECT_EQ(gamma_or_zero(std::vector<int>{}), 0);
}

TEST(Bounds, LowerBoundExpression) {
  EXPECT_EQ(lower_bound_expression(MultipartiteSpec({1, 1})), 1);
  EXPECT_EQ(lower_bound_expression(MultipartiteSpec({2, 2, 6, 6})), 11);
  EXPECT_EQ(lower_bound_expression(MultipartiteSpec({2, 2, 4, 5})), 7);
}

TEST(Bounds, MatchingUpperBound) {
  EXPECT_EQ(upper_bound_matching(complete_graph(2), std::vector<int>{0}, std::vector<Edge>{}), 1);

  auto bound_for = [](const MultipartiteSpec& spec) {
    const auto mg = build_complete_multipartite(spec);
    std::vector<int> u;
    const int top = spec.class_count() - 1;
    for (int v = spec.offset(top); v < spec.vertex_count(); ++v) u.push_back(v);
    const auto m = build_max_matching(spec.without_largest());
    return upper_bound_matching(mg.graph, u, m.edges);
  };
  EXPECT_EQ(bound_for(MultipartiteSpec({2, 2, 6, 6})), 11);
  EXPECT_EQ(bound_for(MultipartiteSpec({2, 2, 4, 5})), 7);
  for (const auto& spec : corpus::sorted_specs(2, 5, 5))
    EXPECT_GE(bound_for(spec), reduced_value(spec, Player::Dominator).value) << spec.to_string();
}

TEST(Bounds, MatchingUpperBoundValidation) {
  const auto mg = build_complete_multipartite(MultipartiteSpec({2, 2}));
  auto message = [&](std::vector<int> u, std::vector<Edge> m) -> std::string {
    try {
      upper_bound_matching(mg.graph, u, m);
    } catch (const std::invalid_argument& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_EQ(message({0, 2}, {}), "U is not independent");
  EXPECT_EQ(message({0}, {Edge(0, 2)}), "M touches U");
  EXPECT_EQ(message({}, {Edge(0, 2), Edge(0, 3)}), "M is not a matching");
  EXPECT_EQ(message({}, {Edge(0, 1)}), "M contains a non-edge");
  EXPECT_EQ(message({7}, {}), "U contains a vertex outside G");
  EXPECT_EQ(message({0, 1}, {Edge(2, 3)}), "M contains a non-edge");
  EXPECT_EQ(message({0, 1}, {}), "");
}

TEST(Bounds, BranchNames) {
  EXPECT_STREQ(branch_name(Branch::TwoThirds), "two-thirds");
  EXPECT_STREQ(branch_name(Branch::MaxClass), "max-class");
}
