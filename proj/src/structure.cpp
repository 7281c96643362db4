#include "sgach/structure.hpp"

#include <algorithm>
#include <map>

#include "sgach/error.hpp"

namespace sgach {

namespace {

void check_pair(const Graph2EC& g, VertexId u, VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) {
    fail(ErrorCode::invalid_argument, "vertex pair must be distinct");
  }
}

Sign edge_sign_or_throw(const Graph2EC& g, VertexId a, VertexId b) {
  auto s = g.sign(a, b);
  if (!s) {
    fail(ErrorCode::invalid_argument,
         "witness uses non-edge " + g.name(a) + " " + g.name(b));
  }
  return *s;
}

// Calls f(w, sign(uw), sign(vw)) for every common neighbour, ascending w.
template <typename F>
void for_common_neighbors(const Graph2EC& g, VertexId u, VertexId v, F&& f) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->vertex < j->vertex) {
      ++i;
    } else if (j->vertex < i->vertex) {
      ++j;
    } else {
      if (!f(i->vertex, i->sign, j->sign)) return;
      ++i;
      ++j;
    }
  }
}

}  // namespace

Sign sign_product(const Graph2EC& g, const PathWitness& p) {
  if (p.vertices.empty()) {
    fail(ErrorCode::invalid_argument, "empty path witness");
  }
  Sign product = Sign::positive;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    product = product * edge_sign_or_throw(g, p.vertices[i], p.vertices[i + 1]);
  }
  return product;
}

Sign sign_product(const Graph2EC& g, const CycleWitness& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 3) {
    fail(ErrorCode::invalid_argument, "cycle witness needs at least 3 vertices");
  }
  auto sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorCode::invalid_argument, "cycle witness repeats a vertex");
  }
  for (auto v : vs) g.check_vertex(v);
  Sign product = Sign::positive;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    product = product * edge_sign_or_throw(g, vs[i], vs[(i + 1) % vs.size()]);
  }
  return product;
}

Balance cycle_balance(const Graph2EC& g, const CycleWitness& c) {
  return is_negative(sign_product(g, c)) ? Balance::unbalanced : Balance::balanced;
}

std::optional<PathWitness> up3_between(const Graph2EC& g, VertexId u, VertexId v) {
  check_pair(g, u, v);
  std::optional<PathWitness> found;
  for_common_neighbors(g, u, v, [&](VertexId w, Sign su, Sign sv) {
    if (su != sv) {
      found = PathWitness{{u, w, v}};
      return false;
    }
    return true;
  });
  return found;
}

std::optional<CycleWitness> uc4_antipodal(const SignedClass& sc, VertexId u,
                                          VertexId v) {
  const auto& g = sc.representative();
  check_pair(g, u, v);
  if (g.adjacent(u, v)) {
    fail(ErrorCode::invalid_argument,
         "uc4_antipodal needs a non-adjacent pair, got edge " + g.name(u) + " " +
             g.name(v));
  }
  std::optional<VertexId> with_positive;
  std::optional<VertexId> with_negative;
  for_common_neighbors(g, u, v, [&](VertexId w, Sign su, Sign sv) {
    auto& slot = (su * sv) == Sign::positive ? with_positive : with_negative;
    if (!slot) slot = w;
    return !(with_positive && with_negative);
  });
  if (!with_positive || !with_negative) return std::nullopt;
  return CycleWitness{{u, std::min(*with_positive, *with_negative), v,
                       std::max(*with_positive, *with_negative)}};
}

bool twins_2ec(const Graph2EC& g, VertexId u, VertexId v) {
  check_pair(g, u, v);
  if (g.adjacent(u, v)) return false;
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const Neighbor& x, const Neighbor& y) {
                      return x.vertex == y.vertex && x.sign == y.sign;
                    });
}

bool twins_signed(const SignedClass& sc, VertexId u, VertexId v) {
  const auto& g = sc.representative();
  return twins_2ec(g, u, v) || twins_2ec(resign_at(g, u), u, v);
}

std::vector<std::vector<VertexId>> rc_classes(const UnsignedGraph& g) {
  std::vector<std::vector<VertexId>> classes;
  std::map<std::vector<VertexId>, std::size_t> slot;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<VertexId> key;
    for (const auto& nb : g.neighbors(v)) key.push_back(nb.vertex);
    auto [it, inserted] = slot.emplace(std::move(key), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

}  // namespace sgach
