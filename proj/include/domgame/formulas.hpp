#pragma once

// Closed forms for edge game domination numbers of complete and complete
// multipartite graphs, and the bound expressions behind them. All
// arithmetic is exact integer arithmetic on sorted specs.

#include <cstdint>
#include <span>
#include <string>

#include "domgame/graph.hpp"

namespace domgame::formulas {

/// ceil(a / b) for b > 0.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

/// Sum of the first k class sizes.
std::int64_t prefix_sum(const MultipartiteSpec& spec, int k);

/// Dominator-start value on K_m: ceil(2m/3) - 1; 0 for the single vertex.
std::int64_t gamma_complete(std::int64_t m);

/// Which term of the outer min attains the Dominator-start value.
enum class Branch { TwoThirds, MaxClass };

struct FormulaValue {
  std::int64_t value = 0;
  Branch branch = Branch::TwoThirds;
};

/// min(ceil(2|V|/3), 2 max(ceil(s/2), m_{n-1})) - 1, s = m_1 + ... + m_{n-1}.
/// Throws InvalidSpecError for n < 2.
FormulaValue gamma_multipartite_detail(const MultipartiteSpec& spec);
std::int64_t gamma_multipartite(const MultipartiteSpec& spec);

/// Staller-start value, dispatched on the number of classes.
FormulaValue gamma_prime_multipartite_detail(const MultipartiteSpec& spec);
std::int64_t gamma_prime_multipartite(const MultipartiteSpec& spec);

/// Staller-start closed form with the mu / eta corrections, valid for n >= 3.
std::int64_t gamma_prime_mu_eta(const MultipartiteSpec& spec);

/// 1 + max over class pairs (r, t) of the Dominator-start value after one
/// vertex leaves each of classes r and t. Residual specs with fewer than two
/// nonempty classes count as 0.
std::int64_t gamma_prime_via_recursion(const MultipartiteSpec& spec);

/// Dominator-start value of a possibly degenerate class-size list: empty
/// classes are dropped and fewer than two remaining classes give 0.
std::int64_t gamma_or_zero(std::span<const int> sizes);

/// 2 max(ceil(s/2), m_{n-1}) - 1.
std::int64_t lower_bound_expression(const MultipartiteSpec& spec);

/// 2(|V \ U| - |M|) - 1. Validates that U is independent in g, that M is a
/// matching of g and that M avoids U; throws std::invalid_argument with a
/// distinct message for each violation.
std::int64_t upper_bound_matching(const Graph& g, std::span<const int> independent_set,
                                  std::span<const Edge> matching);

const char* branch_name(Branch b);

}  // namespace domgame::formulas
