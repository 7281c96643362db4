#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sgach/sign.hpp"

namespace sgach {

using VertexId = std::uint32_t;

/// An edge of a 2-edge-colored graph, stored with u < v.
struct SignedEdge {
  VertexId u = 0;
  VertexId v = 0;
  Sign sign = Sign::positive;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

struct Neighbor {
  VertexId vertex = 0;
  Sign sign = Sign::positive;
};

class UnsignedGraph;

/// A simple undirected graph with a sign on every edge, written (G, C) where
/// C is the set of negative edges.
///
/// Vertices are the dense ids 0..n-1, each carrying a unique name (defaults to
/// "v<i>"). Values are immutable; every transformation returns a new graph.
/// Construction rejects loops, repeated pairs and digons.
class Graph2EC {
 public:
  Graph2EC() = default;

  /// Endpoints of each edge may come in either order. An empty `names`
  /// vector selects the default names.
  Graph2EC(std::size_t n, std::vector<SignedEdge> edges,
           std::vector<std::string> names = {});

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges sorted by (u, v) with u < v.
  const std::vector<SignedEdge>& edges() const noexcept { return edges_; }

  std::span<const Neighbor> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  std::optional<Sign> sign(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return sign(u, v).has_value(); }

  const std::string& name(VertexId v) const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexId> find(std::string_view name) const;

  /// Names of vertices merged into `v` by earlier identifications.
  const std::vector<std::string>& absorbed(VertexId v) const;

  bool contains(VertexId v) const noexcept { return v < vertex_count(); }
  /// Throws invalid_argument for ids outside 0..n-1.
  void check_vertex(VertexId v) const;

  std::size_t negative_edge_count() const noexcept;

  UnsignedGraph underlying() const;

  /// Same underlying graph, signs taken from `signs` in edges() order.
  Graph2EC with_signs(std::span<const Sign> signs) const;

  /// Drops `v`; vertices above it shift down by one.
  Graph2EC without_vertex(VertexId v) const;

  /// Appends a vertex adjacent to every existing vertex with sign `s`.
  Graph2EC with_universal_vertex(std::string name, Sign s) const;

  Graph2EC with_absorbed(std::vector<std::vector<std::string>> absorbed) const;

  /// Structural equality: vertex names, edges and signs.
  friend bool operator==(const Graph2EC& a, const Graph2EC& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<SignedEdge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<std::string>> absorbed_;
};

/// An ordinary simple graph. Stored as an all-positive Graph2EC so the two
/// share one adjacency implementation.
class UnsignedGraph {
 public:
  UnsignedGraph() = default;
  UnsignedGraph(std::size_t n,
                const std::vector<std::pair<VertexId, VertexId>>& edges,
                std::vector<std::string> names = {});

  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }
  bool adjacent(VertexId u, VertexId v) const { return graph_.adjacent(u, v); }
  std::span<const Neighbor> neighbors(VertexId v) const {
    return graph_.neighbors(v);
  }
  std::size_t degree(VertexId v) const { return graph_.degree(v); }
  const std::string& name(VertexId v) const { return graph_.name(v); }
  const std::vector<std::string>& names() const noexcept {
    return graph_.names();
  }
  std::optional<VertexId> find(std::string_view n) const {
    return graph_.find(n);
  }
  void check_vertex(VertexId v) const { graph_.check_vertex(v); }

  std::vector<std::pair<VertexId, VertexId>> edges() const;

  /// The 2-edge-colored graph (G, {}).
  const Graph2EC& all_positive() const noexcept { return graph_; }

  /// Signs in edges() order.
  Graph2EC with_signs(std::span<const Sign> signs) const {
    return graph_.with_signs(signs);
  }

  friend bool operator==(const UnsignedGraph&, const UnsignedGraph&) = default;

 private:
  friend class Graph2EC;
  explicit UnsignedGraph(Graph2EC g) : graph_(std::move(g)) {}

  Graph2EC graph_;
};

/// Component index per vertex, numbered by lowest member id.
std::vector<std::size_t> connected_components(const Graph2EC& g,
                                              std::size_t* count = nullptr);

std::string default_vertex_name(VertexId v);

}  // namespace sgach
