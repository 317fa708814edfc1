#include "domgame/kernels.hpp"

#include <algorithm>

namespace domgame::kernels {

void edge_moves_scalar(const EdgeTable& t, Mask uncovered, EdgeMoveMasks& out) {
  const std::size_t words = words_for(t.edge_count);
  out.legal.assign(words, 0);
  out.two_new.assign(words, 0);
  for (int i = 0; i < t.edge_count; ++i) {
    const bool u_new = (t.first_bit[i] & uncovered) != 0;
    const bool v_new = (t.second_bit[i] & uncovered) != 0;
    const bool legal = (u_new && (t.first_open[i] & uncovered) != 0) ||
                       (v_new && (t.second_open[i] & uncovered) != 0);
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (legal) out.legal[i >> 6] |= bit;
    if (u_new && v_new) out.two_new[i >> 6] |= bit;
  }
}

void vertex_moves_scalar(std::span<const Mask> closed, Mask dominated, std::span<std::uint64_t> out) {
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t v = 0; v < closed.size(); ++v)
    if (closed[v] & ~dominated) out[v >> 6] |= std::uint64_t{1} << (v & 63);
}

}  // namespace domgame::kernels
