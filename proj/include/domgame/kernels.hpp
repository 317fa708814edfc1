#pragma once

// Move-legality kernels over 64-bit vertex masks.
//
// Every kernel has a portable scalar reference and an AVX2 variant that
// processes four edges (or vertices) per step. The dispatcher picks the
// AVX2 path when the CPU reports support; DOMGAME_SIMD=scalar forces the
// reference path.

#include <cstdint>
#include <span>
#include <vector>

namespace domgame::kernels {

using Mask = std::uint64_t;

/// Structure-of-arrays view of the edges of a graph with at most 64 vertices.
///
/// For edge i = (u, v): first_bit[i] = 1 << u, second_bit[i] = 1 << v, and
/// first_open[i] / second_open[i] hold the neighbours w of u / v whose edge
/// (u, w) / (v, w) was not pre-dominated. Arrays are padded with zeros to a
/// multiple of four.
struct EdgeTable {
  std::vector<Mask> first_bit;
  std::vector<Mask> second_bit;
  std::vector<Mask> first_open;
  std::vector<Mask> second_open;
  int edge_count = 0;
};

/// Output bitsets, one bit per edge, ceil(edge_count / 64) words each.
struct EdgeMoveMasks {
  std::vector<std::uint64_t> legal;
  std::vector<std::uint64_t> two_new;
};

enum class Backend { Scalar, Avx2 };

// An edge is legal iff one of its uncovered endpoints still has an uncovered
// neighbour across a non-pre-dominated edge. It covers two new vertices iff
// both endpoints are uncovered.
void edge_moves_scalar(const EdgeTable& table, Mask uncovered, EdgeMoveMasks& out);
void edge_moves_avx2(const EdgeTable& table, Mask uncovered, EdgeMoveMasks& out);

// Vertex game: v is legal iff closed[v] & ~dominated != 0.
void vertex_moves_scalar(std::span<const Mask> closed, Mask dominated, std::span<std::uint64_t> out);
void vertex_moves_avx2(std::span<const Mask> closed, Mask dominated, std::span<std::uint64_t> out);

bool cpu_has_avx2();
Backend active_backend();
const char* backend_name(Backend b);

/// Dispatching entry points.
void edge_moves(const EdgeTable& table, Mask uncovered, EdgeMoveMasks& out);
void vertex_moves(std::span<const Mask> closed, Mask dominated, std::span<std::uint64_t> out);

inline std::size_t words_for(int bits) { return (static_cast<std::size_t>(bits) + 63) / 64; }
inline std::size_t padded4(int n) { return (static_cast<std::size_t>(n) + 3) & ~std::size_t{3}; }

}  // namespace domgame::kernels
