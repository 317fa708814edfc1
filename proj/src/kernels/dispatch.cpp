#include <cstdlib>
#include <string_view>

#include "domgame/kernels.hpp"

namespace domgame::kernels {

namespace {

Backend detect() {
  if (const char* env = std::getenv("DOMGAME_SIMD"); env && std::string_view(env) == "scalar")
    return Backend::Scalar;
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

}  // namespace

Backend active_backend() {
  static const Backend backend = detect();
  return backend;
}

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

void edge_moves(const EdgeTable& table, Mask uncovered, EdgeMoveMasks& out) {
  if (active_backend() == Backend::Avx2)
    edge_moves_avx2(table, uncovered, out);
  else
    edge_moves_scalar(table, uncovered, out);
}

void vertex_moves(std::span<const Mask> closed, Mask dominated, std::span<std::uint64_t> out) {
  if (active_backend() == Backend::Avx2)
    vertex_moves_avx2(closed, dominated, out);
  else
    vertex_moves_scalar(closed, dominated, out);
}

}  // namespace domgame::kernels
