#include "sgach/switching.hpp"

#include <algorithm>
#include <queue>

#include "sgach/error.hpp"

namespace sgach {

SwitchingSet::SwitchingSet(std::vector<VertexId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SwitchingSet SwitchingSet::from_flags(const std::vector<bool>& flags) {
  std::vector<VertexId> members;
  for (std::size_t v = 0; v < flags.size(); ++v) {
    if (flags[v]) members.push_back(static_cast<VertexId>(v));
  }
  return SwitchingSet(std::move(members));
}

bool SwitchingSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<bool> SwitchingSet::flags(std::size_t n) const {
  std::vector<bool> out(n, false);
  for (auto v : members_) {
    if (v >= n) {
      fail(ErrorCode::invalid_argument,
           "switching set names unknown vertex id " + std::to_string(v));
    }
    out[v] = true;
  }
  return out;
}

SwitchingSet operator^(const SwitchingSet& a, const SwitchingSet& b) {
  std::vector<VertexId> out;
  std::set_symmetric_difference(a.members_.begin(), a.members_.end(),
                                b.members_.begin(), b.members_.end(),
                                std::back_inserter(out));
  return SwitchingSet(std::move(out));
}

Graph2EC resign_at(const Graph2EC& g, VertexId v) {
  g.check_vertex(v);
  return apply_switching(g, SwitchingSet{v});
}

Graph2EC apply_switching(const Graph2EC& g, const SwitchingSet& s) {
  const auto in = s.flags(g.vertex_count());
  if (s.empty()) return g;
  std::vector<Sign> signs;
  signs.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    signs.push_back(in[e.u] != in[e.v] ? flip(e.sign) : e.sign);
  }
  return g.with_signs(signs);
}

SwitchingSet normalize_switching(const Graph2EC& g, const SwitchingSet& s) {
  auto in = s.flags(g.vertex_count());
  std::size_t count = 0;
  const auto comp = connected_components(g, &count);
  // Components are numbered by lowest id, so the first vertex seen with a new
  // component index is that component's root.
  std::vector<int> complement(count, -1);
  for (std::size_t v = 0; v < in.size(); ++v) {
    auto& c = complement[comp[v]];
    if (c < 0) c = in[v] ? 1 : 0;
    if (c == 1) in[v] = !in[v];
  }
  return SwitchingSet::from_flags(in);
}

namespace {

void check_same_underlying(const Graph2EC& g1, const Graph2EC& g2) {
  bool same = g1.vertex_count() == g2.vertex_count() &&
              g1.edge_count() == g2.edge_count();
  for (std::size_t i = 0; same && i < g1.edge_count(); ++i) {
    same = g1.edges()[i].u == g2.edges()[i].u && g1.edges()[i].v == g2.edges()[i].v;
  }
  if (!same) {
    fail(ErrorCode::invalid_argument,
         "graphs do not share the same underlying graph");
  }
}

// Labels each vertex by +/- along the BFS forest so that every tree edge gets
// label(u) * label(v) == edge_sign(tree edge). Returns the labels and the
// indices (into g.edges()) of the tree edges.
template <typename EdgeSign>
std::vector<Sign> forest_labels(const Graph2EC& g, EdgeSign edge_sign,
                                std::vector<std::size_t>* tree_edges) {
  const std::size_t n = g.vertex_count();
  std::vector<Sign> label(n, Sign::positive);
  std::vector<bool> seen(n, false);
  std::queue<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    queue.push(root);
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop();
      for (const auto& nb : g.neighbors(u)) {
        if (seen[nb.vertex]) continue;
        seen[nb.vertex] = true;
        label[nb.vertex] = label[u] * edge_sign(u, nb.vertex, nb.sign);
        if (tree_edges) {
          const auto lo = std::min(u, nb.vertex);
          const auto hi = std::max(u, nb.vertex);
          const auto& edges = g.edges();
          auto it = std::lower_bound(
              edges.begin(), edges.end(), std::pair{lo, hi},
              [](const SignedEdge& e, const std::pair<VertexId, VertexId>& k) {
                return e.u != k.first ? e.u < k.first : e.v < k.second;
              });
          tree_edges->push_back(static_cast<std::size_t>(it - edges.begin()));
        }
        queue.push(nb.vertex);
      }
    }
  }
  if (tree_edges) std::sort(tree_edges->begin(), tree_edges->end());
  return label;
}

SwitchingSet negative_labels(const std::vector<Sign>& label) {
  std::vector<VertexId> members;
  for (std::size_t v = 0; v < label.size(); ++v) {
    if (is_negative(label[v])) members.push_back(static_cast<VertexId>(v));
  }
  return SwitchingSet(std::move(members));
}

}  // namespace

std::optional<SwitchingSet> equivalence_witness(const Graph2EC& g1,
                                                const Graph2EC& g2) {
  check_same_underlying(g1, g2);
  // Work on the symmetric difference of the two signatures: it must be the
  // edge cut of the witness set.
  auto diff = [&](VertexId u, VertexId v, Sign s1) {
    return s1 * *g2.sign(u, v);
  };
  const auto label = forest_labels(g1, diff, nullptr);
  for (std::size_t i = 0; i < g1.edge_count(); ++i) {
    const auto& e1 = g1.edges()[i];
    const auto& e2 = g2.edges()[i];
    if ((e1.sign * e2.sign) != (label[e1.u] * label[e1.v])) return std::nullopt;
  }
  // Roots carry a positive label, so the set is already normalized.
  return negative_labels(label);
}

bool is_equivalent(const Graph2EC& g1, const Graph2EC& g2) {
  return equivalence_witness(g1, g2).has_value();
}

std::pair<Graph2EC, SwitchingSet> canonical_signature(const Graph2EC& g) {
  auto same = [](VertexId, VertexId, Sign s) { return s; };
  const auto label = forest_labels(g, same, nullptr);
  auto s = negative_labels(label);
  return {apply_switching(g, s), s};
}

std::vector<std::size_t> bfs_forest_edges(const Graph2EC& g) {
  std::vector<std::size_t> tree;
  auto same = [](VertexId, VertexId, Sign s) { return s; };
  forest_labels(g, same, &tree);
  return tree;
}

}  // namespace sgach
