#include "domgame/kernels.hpp"

#include <algorithm>

#if defined(__x86_64__) || defined(_M_X64)
#define DOMGAME_X86 1
#include <immintrin.h>
#else
#define DOMGAME_X86 0
#endif

namespace domgame::kernels {

#if DOMGAME_X86

namespace {

// All-ones lanes where (a & b) != 0.
__attribute__((target("avx2"))) inline __m256i nonzero_and(__m256i a, __m256i b) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i ones = _mm256_cmpeq_epi64(zero, zero);
  return _mm256_xor_si256(_mm256_cmpeq_epi64(_mm256_and_si256(a, b), zero), ones);
}

__attribute__((target("avx2"))) inline unsigned lane_bits(__m256i lanes) {
  return static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(lanes)));
}

__attribute__((target("avx2"))) inline __m256i load4(const std::vector<Mask>& v, std::size_t i) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.data() + i));
}

}  // namespace

__attribute__((target("avx2"))) void edge_moves_avx2(const EdgeTable& t, Mask uncovered,
                                                      EdgeMoveMasks& out) {
  const std::size_t words = words_for(t.edge_count);
  out.legal.assign(words, 0);
  out.two_new.assign(words, 0);
  const __m256i unc = _mm256_set1_epi64x(static_cast<long long>(uncovered));
  const std::size_t padded = padded4(t.edge_count);
  for (std::size_t i = 0; i < padded; i += 4) {
    const __m256i u_new = nonzero_and(load4(t.first_bit, i), unc);
    const __m256i v_new = nonzero_and(load4(t.second_bit, i), unc);
    const __m256i u_open = nonzero_and(load4(t.first_open, i), unc);
    const __m256i v_open = nonzero_and(load4(t.second_open, i), unc);
    const __m256i legal =
        _mm256_or_si256(_mm256_and_si256(u_new, u_open), _mm256_and_si256(v_new, v_open));
    const __m256i two = _mm256_and_si256(u_new, v_new);
    const unsigned shift = static_cast<unsigned>(i & 63);
    out.legal[i >> 6] |= static_cast<std::uint64_t>(lane_bits(legal)) << shift;
    out.two_new[i >> 6] |= static_cast<std::uint64_t>(lane_bits(two)) << shift;
  }
}

__attribute__((target("avx2"))) void vertex_moves_avx2(std::span<const Mask> closed, Mask dominated,
                                                        std::span<std::uint64_t> out) {
  std::fill(out.begin(), out.end(), 0);
  const __m256i open = _mm256_set1_epi64x(static_cast<long long>(~dominated));
  std::size_t v = 0;
  for (; v + 4 <= closed.size(); v += 4) {
    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(closed.data() + v));
    out[v >> 6] |= static_cast<std::uint64_t>(lane_bits(nonzero_and(c, open))) << (v & 63);
  }
  for (; v < closed.size(); ++v)
    if (closed[v] & ~dominated) out[v >> 6] |= std::uint64_t{1} << (v & 63);
}

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}

#else

void edge_moves_avx2(const EdgeTable& t, Mask uncovered, EdgeMoveMasks& out) {
  edge_moves_scalar(t, uncovered, out);
}

void vertex_moves_avx2(std::span<const Mask> closed, Mask dominated, std::span<std::uint64_t> out) {
  vertex_moves_scalar(closed, dominated, out);
}

bool cpu_has_avx2() { return false; }

#endif

}  // namespace domgame::kernels
