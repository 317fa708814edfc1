#include "domgame/corpus.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace domgame::corpus {

namespace {

constexpr int kMaxCorpusVertices = 8;

int pair_bit(int a, int b) {
  if (a > b) std::swap(a, b);
  // Upper-triangle position of (a, b) among pairs over kMaxCorpusVertices.
  return a * (2 * kMaxCorpusVertices - a - 1) / 2 + (b - a - 1);
}

Graph from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (code & (std::uint64_t{1} << pair_bit(a, b))) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

void add_specs(std::vector<MultipartiteSpec>& out, std::vector<int>& prefix, int classes, int lo, int max_size) {
  if (static_cast<int>(prefix.size()) == classes) {
    out.emplace_back(prefix);
    return;
  }
  for (int m = lo; m <= max_size; ++m) {
    prefix.push_back(m);
    add_specs(out, prefix, classes, m, max_size);
    prefix.pop_back();
  }
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxCorpusVertices) throw std::invalid_argument("canonical_code supports at most 8 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (const Edge& e : g.edges()) code |= std::uint64_t{1} << pair_bit(perm[e.u], perm[e.v]);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Graph> connected_graphs(int max_vertices, int max_edges) {
  if (max_vertices > kMaxCorpusVertices) throw std::invalid_argument("corpus supports at most 8 vertices");
  std::vector<Graph> result;
  if (max_vertices < 2 || max_edges < 1) return result;

  // Every connected graph with k + 1 edges extends some connected graph with
  // k edges by one edge (possibly to a new vertex): drop a non-bridge edge
  // or a leaf edge.
  std::set<std::pair<int, std::uint64_t>> seen;
  std::vector<std::pair<int, std::uint64_t>> level{{2, canonical_code(Graph(2, {Edge(0, 1)}))}};
  seen.insert(level.front());
  std::vector<std::pair<int, std::uint64_t>> all = level;
  for (int e = 1; e < max_edges; ++e) {
    std::vector<std::pair<int, std::uint64_t>> next;
    for (auto [n, code] : level) {
      const Graph g = from_code(n, code);
      auto consider = [&](int vertices, std::vector<Edge> edges) {
        const Graph h(vertices, std::move(edges));
        std::pair<int, std::uint64_t> key{vertices, canonical_code(h)};
        if (seen.insert(key).second) next.push_back(key);
      };
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (g.adjacent(a, b)) continue;
          std::vector<Edge> edges(g.edges().begin(), g.edges().end());
          edges.emplace_back(a, b);
          consider(n, std::move(edges));
        }
      }
      if (n < max_vertices) {
        for (int a = 0; a < n; ++a) {
          std::vector<Edge> edges(g.edges().begin(), g.edges().end());
          edges.emplace_back(a, n);
          consider(n + 1, std::move(edges));
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    const int ex = std::popcount(x.second), ey = std::popcount(y.second);
    return std::tie(x.first, ex, x.second) < std::tie(y.first, ey, y.second);
  });
  for (auto [n, code] : all) result.push_back(from_code(n, code));
  return result;
}

std::vector<MultipartiteSpec> sorted_specs(int min_classes, int max_classes, int max_size) {
  std::vector<MultipartiteSpec> out;
  std::vector<int> prefix;
  for (int n = std::max(1, min_classes); n <= max_classes; ++n) add_specs(out, prefix, n, 1, max_size);
  return out;
}

Graph random_graph(std::mt19937_64& rng, int vertex_count, double edge_probability) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (int a = 0; a < vertex_count; ++a)
    for (int b = a + 1; b < vertex_count; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return Graph(vertex_count, std::move(edges));
}

Graph example_tree() {
  return Graph(7, {Edge(0, 2), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(4, 6)});
}

}  // namespace domgame::corpus
