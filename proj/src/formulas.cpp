#include "domgame/formulas.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "domgame/errors.hpp"

namespace domgame::formulas {

namespace {

void require_two_classes(const MultipartiteSpec& spec) {
  if (spec.class_count() < 2)
    throw InvalidSpecError("formula needs at least two classes, got " + spec.to_string());
}

}  // namespace

std::int64_t prefix_sum(const MultipartiteSpec& spec, int k) {
  std::int64_t s = 0;
  for (int i = 0; i < k; ++i) s += spec.size(i);
  return s;
}

std::int64_t gamma_complete(std::int64_t m) {
  if (m < 1) throw InvalidSpecError("complete graph needs at least one vertex");
  return ceil_div(2 * m, 3) - 1;
}

FormulaValue gamma_multipartite_detail(const MultipartiteSpec& spec) {
  require_two_classes(spec);
  const int n = spec.class_count();
  const std::int64_t two_thirds = ceil_div(2 * std::int64_t{spec.vertex_count()}, 3);
  const std::int64_t max_class = 2 * std::max<std::int64_t>(ceil_div(prefix_sum(spec, n - 1), 2), spec.size(n - 2));
  if (two_thirds <= max_class) return {two_thirds - 1, Branch::TwoThirds};
  return {max_class - 1, Branch::MaxClass};
}

std::int64_t gamma_multipartite(const MultipartiteSpec& spec) { return gamma_multipartite_detail(spec).value; }

std::int64_t gamma_or_zero(std::span<const int> sizes) {
  std::vector<int> kept;
  for (int m : sizes)
    if (m > 0) kept.push_back(m);
  if (kept.size() < 2) return 0;
  return gamma_multipartite(MultipartiteSpec(std::move(kept)));
}

FormulaValue gamma_prime_multipartite_detail(const MultipartiteSpec& spec) {
  require_two_classes(spec);
  const int n = spec.class_count();
  const std::int64_t vertices = spec.vertex_count();
  const std::int64_t two_thirds = ceil_div(2 * (vertices - 2), 3);
  auto pick = [&](std::int64_t other) -> FormulaValue {
    if (two_thirds <= other) return {two_thirds, Branch::TwoThirds};
    return {other, Branch::MaxClass};
  };

  if (n == 2) {
    if (spec.size(0) == 1) return {1, Branch::TwoThirds};
    const std::vector<int> rest{spec.size(0) - 1, spec.size(1) - 1};
    const auto inner = gamma_multipartite_detail(MultipartiteSpec(rest));
    return {inner.value + 1, inner.branch};
  }
  if (n == 3) {
    const std::int64_t m2 = spec.size(1), m3 = spec.size(2);
    // K_3: the opening pair leaves one isolated vertex. The closed form below
    // evaluates to 0 here because every residual spec is a single vertex.
    if (m3 == 1) return {1, Branch::TwoThirds};
    return pick(m2 == m3 ? 2 * (m2 - 1) : 2 * m2);
  }
  const std::int64_t s = prefix_sum(spec, n - 1);
  return pick(2 * std::max<std::int64_t>(ceil_div(s - 1, 2), spec.size(n - 2)));
}

std::int64_t gamma_prime_multipartite(const MultipartiteSpec& spec) {
  return gamma_prime_multipartite_detail(spec).value;
}

std::int64_t gamma_prime_mu_eta(const MultipartiteSpec& spec) {
  const int n = spec.class_count();
  if (n < 3) throw InvalidSpecError("mu/eta form needs at least three classes, got " + spec.to_string());
  const bool top_tie = spec.size(n - 2) == spec.size(n - 1);
  const std::int64_t eta = top_tie ? 1 : 0;
  const std::int64_t mu = (n == 3 && top_tie) ? 1 : 0;
  const std::int64_t two_thirds = ceil_div(2 * (std::int64_t{spec.vertex_count()} - 2), 3);
  const std::int64_t s = prefix_sum(spec, n - 1);
  return std::min(two_thirds, 2 * std::max(ceil_div(s - 1 - eta, 2), spec.size(n - 2) - mu));
}

std::int64_t gamma_prime_via_recursion(const MultipartiteSpec& spec) {
  require_two_classes(spec);
  const int n = spec.class_count();
  std::int64_t best = 0;
  for (int r = 0; r < n; ++r) {
    for (int t = r + 1; t < n; ++t) {
      std::vector<int> sizes(spec.sizes().begin(), spec.sizes().end());
      --sizes[r];
      --sizes[t];
      best = std::max(best, gamma_or_zero(sizes));
    }
  }
  return best + 1;
}

std::int64_t lower_bound_expression(const MultipartiteSpec& spec) {
  require_two_classes(spec);
  const int n = spec.class_count();
  return 2 * std::max<std::int64_t>(ceil_div(prefix_sum(spec, n - 1), 2), spec.size(n - 2)) - 1;
}

std::int64_t upper_bound_matching(const Graph& g, std::span<const int> independent_set,
                                  std::span<const Edge> matching) {
  std::set<int> in_u;
  for (int v : independent_set) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("U contains a vertex outside G");
    in_u.insert(v);
  }
  for (int a : in_u)
    for (int b : in_u)
      if (a < b && g.adjacent(a, b)) throw std::invalid_argument("U is not independent");
  std::set<int> touched;
  for (const Edge& e : matching) {
    if (!g.edge_index(e.u, e.v)) throw std::invalid_argument("M contains a non-edge");
    if (in_u.count(e.u) || in_u.count(e.v)) throw std::invalid_argument("M touches U");
    if (!touched.insert(e.u).second || !touched.insert(e.v).second)
      throw std::invalid_argument("M is not a matching");
  }
  const std::int64_t outside = g.vertex_count() - static_cast<std::int64_t>(in_u.size());
  return 2 * (outside - static_cast<std::int64_t>(matching.size())) - 1;
}

const char* branch_name(Branch b) { return b == Branch::TwoThirds ? "two-thirds" : "max-class"; }

}  // namespace domgame::formulas
