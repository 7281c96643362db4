#include "sgach/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>

#include "sgach/error.hpp"

namespace sgach {

namespace {

const std::vector<std::string> kNoAbsorbed;

void check_name(const std::string& name) {
  if (name.empty()) fail(ErrorCode::invalid_graph, "empty vertex name");
  for (unsigned char c : name) {
    if (std::isspace(c) || c == '#') {
      fail(ErrorCode::invalid_graph, "invalid vertex name '" + name + "'");
    }
  }
}

}  // namespace

std::string default_vertex_name(VertexId v) { return "v" + std::to_string(v); }

Graph2EC::Graph2EC(std::size_t n, std::vector<SignedEdge> edges,
                   std::vector<std::string> names)
    : names_(std::move(names)), edges_(std::move(edges)) {
  if (names_.empty()) {
    names_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      names_.push_back(default_vertex_name(static_cast<VertexId>(v)));
    }
  } else if (names_.size() != n) {
    fail(ErrorCode::invalid_graph, "name table has " +
                                       std::to_string(names_.size()) +
                                       " entries for " + std::to_string(n) +
                                       " vertices");
  }

  index_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    check_name(names_[v]);
    if (!index_.emplace(names_[v], static_cast<VertexId>(v)).second) {
      fail(ErrorCode::invalid_graph, "duplicate vertex name '" + names_[v] + "'");
    }
  }

  for (auto& e : edges_) {
    if (e.u >= n || e.v >= n) {
      fail(ErrorCode::invalid_graph, "edge endpoint out of range");
    }
    if (e.u == e.v) {
      fail(ErrorCode::invalid_graph, "loop at vertex " + names_[e.u]);
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    const auto& a = edges_[i - 1];
    const auto& b = edges_[i];
    if (a.u == b.u && a.v == b.v) {
      fail(ErrorCode::invalid_graph,
           std::string(a.sign == b.sign ? "duplicate edge " : "digon ") +
               names_[a.u] + " " + names_[a.v]);
    }
  }

  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so each vertex receives its lower neighbours in
  // ascending order first; a final per-vertex sort covers the rest.
  for (const auto& e : edges_) {
    adjacency_[fill[e.u]++] = {e.v, e.sign};
    adjacency_[fill[e.v]++] = {e.u, e.sign};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const Neighbor& a, const Neighbor& b) {
                return a.vertex < b.vertex;
              });
  }
}

void Graph2EC::check_vertex(VertexId v) const {
  if (!contains(v)) {
    fail(ErrorCode::invalid_argument, "unknown vertex id " + std::to_string(v));
  }
}

std::span<const Neighbor> Graph2EC::neighbors(VertexId v) const {
  check_vertex(v);
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::optional<Sign> Graph2EC::sign(VertexId u, VertexId v) const {
  check_vertex(v);
  auto adj = neighbors(u);
  auto it = std::lower_bound(
      adj.begin(), adj.end(), v,
      [](const Neighbor& a, VertexId x) { return a.vertex < x; });
  if (it == adj.end() || it->vertex != v) return std::nullopt;
  return it->sign;
}

const std::string& Graph2EC::name(VertexId v) const {
  check_vertex(v);
  return names_[v];
}

std::optional<VertexId> Graph2EC::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::string>& Graph2EC::absorbed(VertexId v) const {
  check_vertex(v);
  if (absorbed_.empty()) return kNoAbsorbed;
  return absorbed_[v];
}

std::size_t Graph2EC::negative_edge_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(),
                    [](const SignedEdge& e) { return is_negative(e.sign); }));
}

UnsignedGraph Graph2EC::underlying() const {
  std::vector<Sign> positive(edges_.size(), Sign::positive);
  auto g = with_signs(positive);
  g.absorbed_.clear();
  return UnsignedGraph(std::move(g));
}

Graph2EC Graph2EC::with_signs(std::span<const Sign> signs) const {
  if (signs.size() != edges_.size()) {
    fail(ErrorCode::invalid_argument, "signature size does not match edge count");
  }
  Graph2EC g = *this;
  for (std::size_t i = 0; i < edges_.size(); ++i) g.edges_[i].sign = signs[i];
  for (std::size_t v = 0; v + 1 < g.offsets_.size(); ++v) {
    for (std::size_t k = g.offsets_[v]; k < g.offsets_[v + 1]; ++k) {
      auto& nb = g.adjacency_[k];
      const auto w = nb.vertex;
      const auto lo = std::min<VertexId>(static_cast<VertexId>(v), w);
      const auto hi = std::max<VertexId>(static_cast<VertexId>(v), w);
      auto it = std::lower_bound(
          g.edges_.begin(), g.edges_.end(), std::pair{lo, hi},
          [](const SignedEdge& e, const std::pair<VertexId, VertexId>& key) {
            return e.u != key.first ? e.u < key.first : e.v < key.second;
          });
      nb.sign = it->sign;
    }
  }
  return g;
}

Graph2EC Graph2EC::without_vertex(VertexId v) const {
  check_vertex(v);
  std::vector<std::string> names;
  names.reserve(vertex_count() - 1);
  for (VertexId w = 0; w < vertex_count(); ++w) {
    if (w != v) names.push_back(names_[w]);
  }
  auto shift = [v](VertexId w) { return w > v ? w - 1 : w; };
  std::vector<SignedEdge> edges;
  for (const auto& e : edges_) {
    if (e.u == v || e.v == v) continue;
    edges.push_back({shift(e.u), shift(e.v), e.sign});
  }
  return Graph2EC(vertex_count() - 1, std::move(edges), std::move(names));
}

Graph2EC Graph2EC::with_universal_vertex(std::string name, Sign s) const {
  const auto z = static_cast<VertexId>(vertex_count());
  auto names = names_;
  names.push_back(std::move(name));
  auto edges = edges_;
  for (VertexId v = 0; v < z; ++v) edges.push_back({v, z, s});
  return Graph2EC(z + 1, std::move(edges), std::move(names));
}

Graph2EC Graph2EC::with_absorbed(
    std::vector<std::vector<std::string>> absorbed) const {
  if (absorbed.size() != vertex_count()) {
    fail(ErrorCode::invalid_argument, "absorbed table size mismatch");
  }
  Graph2EC g = *this;
  g.absorbed_ = std::move(absorbed);
  return g;
}

UnsignedGraph::UnsignedGraph(std::size_t n,
                             const std::vector<std::pair<VertexId, VertexId>>& edges,
                             std::vector<std::string> names) {
  std::vector<SignedEdge> signed_edges;
  signed_edges.reserve(edges.size());
  for (auto [u, v] : edges) signed_edges.push_back({u, v, Sign::positive});
  graph_ = Graph2EC(n, std::move(signed_edges), std::move(names));
}

std::vector<std::pair<VertexId, VertexId>> UnsignedGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(graph_.edge_count());
  for (const auto& e : graph_.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<std::size_t> connected_components(const Graph2EC& g,
                                              std::size_t* count) {
  const std::size_t n = g.vertex_count();
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, kUnset);
  std::size_t next = 0;
  std::queue<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    if (comp[root] != kUnset) continue;
    comp[root] = next;
    queue.push(root);
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop();
      for (const auto& nb : g.neighbors(u)) {
        if (comp[nb.vertex] == kUnset) {
          comp[nb.vertex] = next;
          queue.push(nb.vertex);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

}  // namespace sgach
