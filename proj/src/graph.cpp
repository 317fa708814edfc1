#include "domgame/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "domgame/errors.hpp"

namespace domgame {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= vertex_count_)
      throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");

  adjacency_.assign(vertex_count_, {});
  incident_.assign(vertex_count_, {});
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    incident_[e.u].push_back(i);
    incident_[e.v].push_back(i);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(int a, int b) const {
  if (a == b) return false;
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<int> Graph::edge_index(int a, int b) const {
  if (a == b || a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_) return std::nullopt;
  const Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

MultipartiteSpec::MultipartiteSpec(std::vector<int> class_sizes) : sizes_(std::move(class_sizes)) {
  if (sizes_.empty()) throw InvalidSpecError("spec needs at least one class");
  for (int m : sizes_)
    if (m < 1) throw InvalidSpecError("class sizes must be positive");
  std::sort(sizes_.begin(), sizes_.end());
  offsets_.resize(sizes_.size() + 1);
  offsets_[0] = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) offsets_[i + 1] = offsets_[i] + sizes_[i];
}

MultipartiteSpec MultipartiteSpec::parse(std::string_view text) {
  std::vector<int> sizes;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t' || item.back() == '\n' ||
                             item.back() == '\r'))
      item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw InvalidSpecError("malformed spec entry '" + std::string(item) + "'");
    sizes.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return MultipartiteSpec(std::move(sizes));
}

int MultipartiteSpec::class_of(int vertex) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), vertex);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

MultipartiteSpec MultipartiteSpec::without_largest() const {
  if (sizes_.size() < 2) throw InvalidSpecError("spec has a single class");
  return MultipartiteSpec(std::vector<int>(sizes_.begin(), sizes_.end() - 1));
}

std::string MultipartiteSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes_[i]);
  }
  return out;
}

MultipartiteGraph build_complete_multipartite(const MultipartiteSpec& spec) {
  std::vector<Edge> edges;
  const int n = spec.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = spec.offset(spec.class_of(a) + 1); b < n; ++b) edges.emplace_back(a, b);
  return {spec, Graph(n, std::move(edges))};
}

Graph line_graph(const Graph& g) {
  std::vector<Edge> edges;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) edges.emplace_back(inc[i], inc[j]);
  }
  // In a simple graph two distinct edges share at most one endpoint.
  return Graph(g.edge_count(), std::move(edges));
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int vertex_edge_diameter(const Graph& g) {
  if (g.edge_count() == 0) throw UndefinedDiameterError("vertex-edge diameter undefined: no edges");
  if (!is_connected(g))
    throw UndefinedDiameterError("vertex-edge diameter undefined: graph is disconnected");
  int best = 0;
  for (int w = 0; w < g.vertex_count(); ++w) {
    auto dist = bfs_distances(g, w);
    for (const Edge& e : g.edges()) best = std::max(best, std::min(dist[e.u], dist[e.v]));
  }
  return best;
}

std::optional<MultipartiteSpec> recognize_complete_multipartite(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  // Classes of the relation "equal or non-adjacent"; each vertex joins the
  // class of the first earlier vertex it is not adjacent to.
  std::vector<int> cls(n, -1);
  std::vector<int> sizes;
  for (int v = 0; v < n; ++v) {
    for (int r = 0; r < v && cls[v] < 0; ++r)
      if (!g.adjacent(v, r)) cls[v] = cls[r];
    if (cls[v] < 0) {
      cls[v] = static_cast<int>(sizes.size());
      sizes.push_back(0);
    }
    ++sizes[cls[v]];
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.adjacent(a, b) == (cls[a] == cls[b])) return std::nullopt;
  return MultipartiteSpec(std::move(sizes));
}

namespace {

bool parse_int(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  using Kind = ParseError::Kind;
  std::optional<long long> declared;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  long long max_vertex = -1;
  bool seen_content = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == text.npos ? text.npos : nl - pos);
    pos = nl == text.npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "p") {
      long long n = 0;
      if (seen_content || tokens.size() != 2 || !parse_int(tokens[1], n) || n < 0)
        throw ParseError(Kind::Malformed, line_no, "malformed header, expected 'p <vertexCount>'");
      declared = n;
      seen_content = true;
      continue;
    }
    seen_content = true;
    long long a = 0, b = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], a) || !parse_int(tokens[1], b))
      throw ParseError(Kind::Malformed, line_no, "expected '<u> <v>'");
    if (a < 0 || b < 0 || a > 1'000'000'000 || b > 1'000'000'000 ||
        (declared && (a >= *declared || b >= *declared)))
      throw ParseError(Kind::OutOfRange, line_no, "vertex index out of range");
    if (a == b) throw ParseError(Kind::Loop, line_no, "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    edge_lines.push_back(line_no);
    max_vertex = std::max({max_vertex, a, b});
  }

  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return edges[x] < edges[y]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      const Edge& e = edges[order[i]];
      throw ParseError(Kind::Duplicate, edge_lines[order[i]],
                       "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
  }
  const int n = static_cast<int>(declared ? *declared : max_vertex + 1);
  return Graph(n, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph path_graph(int vertex_count) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < vertex_count; ++v) edges.emplace_back(v, v + 1);
  return Graph(vertex_count, std::move(edges));
}

Graph complete_graph(int vertex_count) {
  std::vector<Edge> edges;
  for (int a = 0; a < vertex_count; ++a)
    for (int b = a + 1; b < vertex_count; ++b) edges.emplace_back(a, b);
  return Graph(vertex_count, std::move(edges));
}

}  // namespace domgame
