#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace domgame {

/// Undirected edge stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in lexicographic (u, v) order; the position of an edge in
/// that order is its edge index. Instances are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on loops, duplicates or out-of-range
  /// endpoints.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  /// Sorted neighbour list.
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  bool adjacent(int a, int b) const;
  std::optional<int> edge_index(int a, int b) const;

  /// Edge indices incident to v, ascending.
  std::span<const int> incident_edges(int v) const { return incident_[v]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> incident_;
};

/// Partite class sizes of a complete multipartite graph, sorted
/// nondecreasingly. A single class denotes an edgeless graph.
class MultipartiteSpec {
 public:
  MultipartiteSpec() = default;

  /// Sorts the sizes; throws InvalidSpecError on an empty list or a
  /// nonpositive entry.
  explicit MultipartiteSpec(std::vector<int> class_sizes);

  /// Parses "2,2,6,6" (whitespace around entries tolerated).
  static MultipartiteSpec parse(std::string_view text);

  int class_count() const { return static_cast<int>(sizes_.size()); }
  int size(int cls) const { return sizes_[cls]; }
  std::span<const int> sizes() const { return sizes_; }

  int vertex_count() const { return offsets_.back(); }
  /// First vertex index of class `cls`; offset(class_count()) == vertex_count().
  int offset(int cls) const { return offsets_[cls]; }
  int class_of(int vertex) const;

  /// Sizes of all classes but the last (a largest one).
  MultipartiteSpec without_largest() const;

  std::string to_string() const;

  friend bool operator==(const MultipartiteSpec& a, const MultipartiteSpec& b) {
    return a.sizes_ == b.sizes_;
  }
  friend auto operator<=>(const MultipartiteSpec& a, const MultipartiteSpec& b) {
    return a.sizes_ <=> b.sizes_;
  }

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_{0};
};

/// Complete multipartite graph with consecutive vertex blocks per class.
struct MultipartiteGraph {
  MultipartiteSpec spec;
  Graph graph;

  int class_of(int vertex) const { return spec.class_of(vertex); }
};

MultipartiteGraph build_complete_multipartite(const MultipartiteSpec& spec);

/// Vertex i of the result corresponds to edge index i of g.
Graph line_graph(const Graph& g);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_connected(const Graph& g);

/// max over vertices w and edges (u, v) of min(dist(w, u), dist(w, v)).
/// Throws UndefinedDiameterError for disconnected or edgeless graphs.
int vertex_edge_diameter(const Graph& g);

/// Class sizes when non-adjacency is an equivalence relation on V(g).
std::optional<MultipartiteSpec> recognize_complete_multipartite(const Graph& g);

// Edge-list text format: optional "p <n>" header, "<u> <v>" lines, '#'
// comments, blank lines ignored.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

Graph path_graph(int vertex_count);
Graph complete_graph(int vertex_count);

}  // namespace domgame
