#include <gtest/gtest.h>

#include <random>

#include "domgame/kernels.hpp"

using namespace domgame::kernels;

namespace {

EdgeTable random_table(std::mt19937_64& rng, int edges) {
  EdgeTable t;
  t.edge_count = edges;
  const std::size_t padded = padded4(edges);
  for (auto* v : {&t.first_bit, &t.second_bit, &t.first_open, &t.second_open}) v->assign(padded, 0);
  for (int i = 0; i < edges; ++i) {
    t.first_bit[i] = Mask{1} << (rng() % 64);
    t.second_bit[i] = Mask{1} << (rng() % 64);
    t.first_open[i] = rng() & rng();
    t.second_open[i] = rng() & rng();
  }
  return t;
}

}  // namespace

TEST(Kernels, EdgeScalarMatchesDefinition) {
  EdgeTable t;
  t.edge_count = 2;
  t.first_bit = {1, 1, 0, 0};
  t.second_bit = {2, 4, 0, 0};
  t.first_open = {2 | 4, 2, 0, 0};
  t.second_open = {1, 1, 0, 0};
  EdgeMoveMasks out;
  edge_moves_scalar(t, 1 | 2 | 4, out);
  EXPECT_EQ(out.legal[0], 3u);
  EXPECT_EQ(out.two_new[0], 3u);
  // Vertex 0 covered: edge 0 keeps uncovered endpoint 1 with open neighbour 0
  // only, which is covered; the same holds for edge 1.
  edge_moves_scalar(t, 2 | 4, out);
  EXPECT_EQ(out.legal[0], 0u);
  EXPECT_EQ(out.two_new[0], 0u);
}

TEST(Kernels, EdgeAvx2MatchesScalar) {
  if (!cpu_has_avx2()) GTEST_SKIP() << "CPU without AVX2";
  std::mt19937_64 rng(7);
  for (int edges : {0, 1, 3, 4, 5, 63, 64, 65, 127, 200}) {
    for (int trial = 0; trial < 200; ++trial) {
      const EdgeTable t = random_table(rng, edges);
      const Mask uncovered = trial % 4 == 0 ? ~Mask{0} : rng() | rng();
      EdgeMoveMasks a, b;
      edge_moves_scalar(t, uncovered, a);
      edge_moves_avx2(t, uncovered, b);
      ASSERT_EQ(a.legal, b.legal) << "edges " << edges;
      ASSERT_EQ(a.two_new, b.two_new) << "edges " << edges;
    }
  }
}

TEST(Kernels, VertexAvx2MatchesScalar) {
  if (!cpu_has_avx2()) GTEST_SKIP() << "CPU without AVX2";
  std::mt19937_64 rng(11);
  for (int n : {0, 1, 2, 3, 4, 5, 7, 8, 31, 63, 64}) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Mask> closed(n);
      for (auto& c : closed) c = rng() & rng();
      const Mask dominated = rng() | rng();
      std::vector<std::uint64_t> a(words_for(n)), b(words_for(n));
      vertex_moves_scalar(closed, dominated, a);
      vertex_moves_avx2(closed, dominated, b);
      ASSERT_EQ(a, b) << "vertices " << n;
    }
  }
}

TEST(Kernels, DispatchAgreesWithScalar) {
  std::mt19937_64 rng(3);
  const EdgeTable t = random_table(rng, 37);
  EdgeMoveMasks a, b;
  edge_moves_scalar(t, 0xF0F0F0F0F0F0F0F0ull, a);
  edge_moves(t, 0xF0F0F0F0F0F0F0F0ull, b);
  EXPECT_EQ(a.legal, b.legal);
  EXPECT_EQ(a.two_new, b.two_new);
  const Backend backend = active_backend();
  EXPECT_TRUE(backend == Backend::Scalar || cpu_has_avx2());
}

TEST(Kernels, Helpers) {
  EXPECT_EQ(words_for(0), 0u);
  EXPECT_EQ(words_for(64), 1u);
  EXPECT_EQ(words_for(65), 2u);
  EXPECT_EQ(padded4(5), 8u);
  EXPECT_EQ(padded4(8), 8u);
  EXPECT_STREQ(backend_name(Backend::Scalar), "scalar");
  EXPECT_STREQ(backend_name(Backend::Avx2), "avx2");
}
