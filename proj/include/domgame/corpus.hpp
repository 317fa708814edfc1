#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame::corpus {

/// Connected graphs with 2..max_vertices vertices and 1..max_edges edges,
/// one per isomorphism class, ordered by (vertex count, edge count, code).
/// max_vertices is limited to 8.
std::vector<Graph> connected_graphs(int max_vertices, int max_edges);

/// Canonical labelling code: the lexicographically smallest sorted edge
/// list over all vertex permutations, packed into an upper-triangle bitmask.
std::uint64_t canonical_code(const Graph& g);

/// Every sorted spec with min_classes..max_classes classes of size
/// 1..max_size, in lexicographic order of (class count, sizes).
std::vector<MultipartiteSpec> sorted_specs(int min_classes, int max_classes, int max_size);

/// G(n, p) sample.
Graph random_graph(std::mt19937_64& rng, int vertex_count, double edge_probability);

/// The 7-vertex tree with edges 13, 23, 34, 45, 56, 57 (1-based labels).
Graph example_tree();

}  // namespace domgame::corpus
