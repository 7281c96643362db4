#include "sgach/morphism.hpp"

#include <algorithm>
#include <numeric>

#include "sgach/error.hpp"
#include "sgach/structure.hpp"

namespace sgach {

Coloring::Coloring(std::vector<std::uint32_t> colors,
                   std::optional<SwitchingSet> switching)
    : colors_(std::move(colors)), switching_(std::move(switching)) {
  std::vector<bool> used;
  for (auto c : colors_) {
    if (c >= colors_.size()) {
      fail(ErrorCode::invalid_argument,
           "colour " + std::to_string(c + 1) + " exceeds vertex count");
    }
    if (c >= used.size()) used.resize(c + 1, false);
    used[c] = true;
  }
  k_ = used.size();
  for (std::size_t c = 0; c < used.size(); ++c) {
    if (!used[c]) {
      fail(ErrorCode::invalid_argument,
           "colouring is not surjective: colour " + std::to_string(c + 1) +
               " unused");
    }
  }
  if (switching_) switching_->flags(colors_.size());
}

Coloring Coloring::normalized(const std::vector<std::uint32_t>& labels,
                              std::optional<SwitchingSet> switching) {
  std::vector<std::uint32_t> out(labels.size());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& p) { return p.first == labels[v]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[v], static_cast<std::uint32_t>(seen.size()));
      out[v] = seen.back().second;
    } else {
      out[v] = it->second;
    }
  }
  return Coloring(std::move(out), std::move(switching));
}

Coloring Coloring::identity(std::size_t n) {
  std::vector<std::uint32_t> colors(n);
  std::iota(colors.begin(), colors.end(), 0u);
  return Coloring(std::move(colors));
}

Coloring Coloring::with_switching(std::optional<SwitchingSet> s) const {
  return Coloring(colors_, std::move(s));
}

std::vector<std::vector<VertexId>> Coloring::classes() const {
  std::vector<std::vector<VertexId>> out(k_);
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    out[colors_[v]].push_back(static_cast<VertexId>(v));
  }
  return out;
}

bool identifiable_2ec(const Graph2EC& g, VertexId u, VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) fail(ErrorCode::invalid_argument, "vertex pair must be distinct");
  return !g.adjacent(u, v) && !up3_between(g, u, v);
}

std::optional<SwitchingSet> identifiable_signed(const SignedClass& sc, VertexId u,
                                                VertexId v) {
  const auto& g = sc.representative();
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) fail(ErrorCode::invalid_argument, "vertex pair must be distinct");
  if (g.adjacent(u, v)) return std::nullopt;
  bool any_positive = false;
  bool any_negative = false;
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (i->vertex < j->vertex) {
      ++i;
    } else if (j->vertex < i->vertex) {
      ++j;
    } else {
      ((i->sign * j->sign) == Sign::positive ? any_positive : any_negative) = true;
      ++i;
      ++j;
    }
  }
  if (any_positive && any_negative) return std::nullopt;
  if (any_negative) return SwitchingSet{u};
  return SwitchingSet{};
}

namespace {

// Mutable adjacency over the original ids, used while a plan is executed.
class WorkingGraph {
 public:
  explicit WorkingGraph(const Graph2EC& g)
      : adj_(g.vertex_count()), live_(g.vertex_count(), true),
        members_(g.vertex_count()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto nb = g.neighbors(v);
      adj_[v].assign(nb.begin(), nb.end());
      members_[v] = {v};
    }
  }

  bool live(VertexId v) const { return v < live_.size() && live_[v]; }

  void resign(const std::vector<bool>& in) {
    for (VertexId v = 0; v < adj_.size(); ++v) {
      if (!live_[v]) continue;
      for (auto& nb : adj_[v]) {
        if (in[v] != in[nb.vertex]) nb.sign = flip(nb.sign);
      }
    }
  }

  const std::vector<VertexId>& members(VertexId v) const { return members_[v]; }

  // Throws not_identifiable; `names` supplies messages.
  void merge(VertexId keep, VertexId drop, const Graph2EC& names) {
    if (find(keep, drop)) {
      fail(ErrorCode::not_identifiable,
           "identifying " + names.name(keep) + " and " + names.name(drop) +
               " would create a loop (they are adjacent)");
    }
    for (const auto& nb : adj_[drop]) {
      if (auto s = find(keep, nb.vertex); s && *s != nb.sign) {
        fail(ErrorCode::not_identifiable,
             "identifying " + names.name(keep) + " and " + names.name(drop) +
                 " would create a digon (UP3 through " + names.name(nb.vertex) +
                 ")");
      }
    }
    for (const auto& nb : adj_[drop]) {
      auto& other = adj_[nb.vertex];
      other.erase(lower(other, drop));
      if (!find(keep, nb.vertex)) {
        insert(adj_[keep], {nb.vertex, nb.sign});
        insert(other, {keep, nb.sign});
      }
    }
    adj_[drop].clear();
    live_[drop] = false;
    auto& m = members_[keep];
    m.insert(m.end(), members_[drop].begin(), members_[drop].end());
    members_[drop].clear();
  }

  std::vector<VertexId> survivors() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < live_.size(); ++v) {
      if (live_[v]) out.push_back(v);
    }
    return out;
  }

  const std::vector<Neighbor>& neighbors(VertexId v) const { return adj_[v]; }

 private:
  static std::vector<Neighbor>::iterator lower(std::vector<Neighbor>& list,
                                               VertexId v) {
    return std::lower_bound(list.begin(), list.end(), v,
                            [](const Neighbor& a, VertexId x) {
                              return a.vertex < x;
                            });
  }
  static void insert(std::vector<Neighbor>& list, Neighbor nb) {
    list.insert(lower(list, nb.vertex), nb);
  }
  std::optional<Sign> find(VertexId u, VertexId v) {
    auto& list = adj_[u];
    auto it = lower(list, v);
    if (it == list.end() || it->vertex != v) return std::nullopt;
    return it->sign;
  }

  std::vector<std::vector<Neighbor>> adj_;
  std::vector<bool> live_;
  std::vector<std::vector<VertexId>> members_;
};

}  // namespace

MergeOutcome apply_merge_plan(const Graph2EC& g, const MergePlan& plan) {
  WorkingGraph work(g);
  std::vector<bool> total(g.vertex_count(), false);
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const auto& step = plan.steps[i];
    const std::string where = "merge step " + std::to_string(i + 1) + ": ";
    if (!work.live(step.keep) || !work.live(step.drop)) {
      fail(ErrorCode::invalid_argument,
           where + "vertex is not live at this step");
    }
    if (step.keep == step.drop) {
      fail(ErrorCode::invalid_argument, where + "keep and drop coincide");
    }
    if (!step.pre_switch.empty()) {
      std::vector<bool> in(g.vertex_count(), false);
      for (auto v : step.pre_switch.members()) {
        if (!work.live(v)) {
          fail(ErrorCode::invalid_argument,
               where + "pre-switch names a vertex that is not live");
        }
        in[v] = true;
        for (auto m : work.members(v)) total[m] = !total[m];
      }
      work.resign(in);
    }
    work.merge(step.keep, step.drop, g);
  }

  const auto alive = work.survivors();
  std::vector<VertexId> image_id(g.vertex_count(), 0);
  for (std::size_t i = 0; i < alive.size(); ++i) {
    image_id[alive[i]] = static_cast<VertexId>(i);
  }
  MergeOutcome out;
  out.map.resize(g.vertex_count());
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> absorbed(alive.size());
  std::vector<SignedEdge> edges;
  for (std::size_t i = 0; i < alive.size(); ++i) {
    const auto v = alive[i];
    names.push_back(g.name(v));
    auto members = work.members(v);
    std::sort(members.begin(), members.end());
    for (auto m : members) {
      out.map[m] = static_cast<VertexId>(i);
      if (m != v) {
        absorbed[i].push_back(g.name(m));
        const auto& inner = g.absorbed(m);
        absorbed[i].insert(absorbed[i].end(), inner.begin(), inner.end());
      } else {
        const auto& inner = g.absorbed(v);
        absorbed[i].insert(absorbed[i].end(), inner.begin(), inner.end());
      }
    }
    for (const auto& nb : work.neighbors(v)) {
      if (nb.vertex > v) edges.push_back({image_id[v], image_id[nb.vertex], nb.sign});
    }
  }
  out.image = Graph2EC(alive.size(), std::move(edges), std::move(names))
                  .with_absorbed(std::move(absorbed));
  out.total_switch = SwitchingSet::from_flags(total);
  return out;
}

Graph2EC merge_2ec(const Graph2EC& g, VertexId u, VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) fail(ErrorCode::invalid_argument, "vertex pair must be distinct");
  return apply_merge_plan(g, MergePlan{{{std::min(u, v), std::max(u, v), {}}}}).image;
}

SignedClass merge_signed(const SignedClass& sc, VertexId u, VertexId v) {
  const auto& g = sc.representative();
  auto s = identifiable_signed(sc, u, v);
  if (!s) {
    fail(ErrorCode::not_identifiable,
         g.name(u) + " and " + g.name(v) +
             (g.adjacent(u, v) ? " are adjacent"
                               : " are antipodal vertices of an UC4"));
  }
  return SignedClass(merge_2ec(apply_switching(g, *s), u, v));
}

QuotientResult quotient(const Graph2EC& g, const Coloring& col) {
  if (col.vertex_count() != g.vertex_count()) {
    fail(ErrorCode::invalid_argument, "colouring covers " +
                                          std::to_string(col.vertex_count()) +
                                          " vertices, graph has " +
                                          std::to_string(g.vertex_count()));
  }
  struct Keyed {
    std::uint32_t lo, hi;
    std::size_t index;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    auto a = col[e.u];
    auto b = col[e.v];
    keyed.push_back({std::min(a, b), std::max(a, b), i});
  }
  // Stable: ties keep the (min id, max id) edge order.
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
    return x.lo != y.lo ? x.lo < y.lo : x.hi < y.hi;
  });

  QuotientResult result;
  std::vector<SignedEdge> edges;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    const auto& first = g.edges()[keyed[i].index];
    if (keyed[i].lo == keyed[i].hi) {
      result.violation = Violation{ViolationKind::monochromatic_edge, keyed[i].lo,
                                   keyed[i].hi, first, std::nullopt};
      return result;
    }
    std::size_t j = i + 1;
    while (j < keyed.size() && keyed[j].lo == keyed[i].lo &&
           keyed[j].hi == keyed[i].hi) {
      const auto& e = g.edges()[keyed[j].index];
      if (e.sign != first.sign) {
        result.violation = Violation{ViolationKind::sign_conflict, keyed[i].lo,
                                     keyed[i].hi, first, e};
        return result;
      }
      ++j;
    }
    edges.push_back({keyed[i].lo, keyed[i].hi, first.sign});
    i = j - 1;
  }

  const auto classes = col.classes();
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> absorbed(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    names.push_back(g.name(classes[c].front()));
    for (std::size_t i = 1; i < classes[c].size(); ++i) {
      absorbed[c].push_back(g.name(classes[c][i]));
    }
  }
  result.graph = Graph2EC(classes.size(), std::move(edges), std::move(names))
                     .with_absorbed(std::move(absorbed));
  return result;
}

QuotientResult quotient_signed(const SignedClass& sc, const Coloring& col) {
  const auto& g = sc.representative();
  if (!col.switching()) return quotient(g, col);
  return quotient(apply_switching(g, *col.switching()), col);
}

std::string describe(const Graph2EC& g, const Violation& v) {
  auto edge = [&](const SignedEdge& e) {
    return g.name(e.u) + " " + g.name(e.v) + " " + sign_token(e.sign);
  };
  if (v.kind == ViolationKind::monochromatic_edge) {
    return "monochromatic-edge colour " + std::to_string(v.color_a + 1) + ": " +
           edge(v.first);
  }
  return "sign-conflict colours " + std::to_string(v.color_a + 1) + "," +
         std::to_string(v.color_b + 1) + ": " + edge(v.first) + " vs " +
         edge(*v.second);
}

bool verify_hom_2ec(const Graph2EC& g, const Graph2EC& h,
                    const std::vector<VertexId>& phi) {
  if (phi.size() != g.vertex_count()) return false;
  std::vector<bool> hit(h.vertex_count(), false);
  for (auto x : phi) {
    if (x >= h.vertex_count()) return false;
    hit[x] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  for (const auto& e : g.edges()) {
    if (phi[e.u] == phi[e.v]) return false;
    auto s = h.sign(phi[e.u], phi[e.v]);
    if (!s || *s != e.sign) return false;
  }
  return true;
}

bool verify_hom_signed(const SignedClass& sc_g, const SignedClass& sc_h,
                       const std::vector<VertexId>& phi, const SwitchingSet& s) {
  const auto& g = sc_g.representative();
  for (auto v : s.members()) {
    if (v >= g.vertex_count()) return false;
  }
  return verify_hom_2ec(apply_switching(g, s), sc_h.representative(), phi);
}

}  // namespace sgach
