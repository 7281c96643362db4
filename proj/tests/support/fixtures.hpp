#pragma once

// Small named graphs used across the test suites.

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "sgach/graph.hpp"

namespace fixtures {

using EdgeSpec = std::tuple<const char*, const char*, char>;

inline sgach::Graph2EC make(std::initializer_list<const char*> names,
                            std::initializer_list<EdgeSpec> edges) {
  std::vector<std::string> labels(names.begin(), names.end());
  auto id = [&](const char* n) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == n) return static_cast<sgach::VertexId>(i);
    }
    throw std::logic_error(std::string("fixture uses unknown vertex ") + n);
  };
  std::vector<sgach::SignedEdge> es;
  for (const auto& [a, b, s] : edges) {
    es.push_back({id(a), id(b), s == '-' ? sgach::Sign::negative : sgach::Sign::positive});
  }
  const auto n = labels.size();
  return sgach::Graph2EC(n, std::move(es), std::move(labels));
}

// An UP3 with b in the middle.
inline sgach::Graph2EC up3() {
  return make({"a", "b", "c"}, {{"b", "a", '-'}, {"b", "c", '+'}});
}

// A 2-edge-colored clique that is not a signed clique: x joined to a, b positively and to c, d negatively; ab and dc
// positive.
inline sgach::Graph2EC five_vertex_2ec_clique() {
  return make({"x", "a", "b", "c", "d"}, {{"x", "a", '+'},
                                          {"x", "b", '+'},
                                          {"x", "c", '-'},
                                          {"x", "d", '-'},
                                          {"a", "b", '+'},
                                          {"d", "c", '+'}});
}

// The UC4 with a single negative edge a1a4.
inline sgach::Graph2EC uc4() {
  return make({"a1", "a2", "a3", "a4"}, {{"a1", "a2", '+'},
                                         {"a1", "a4", '-'},
                                         {"a3", "a2", '+'},
                                         {"a3", "a4", '+'}});
}

// A signed clique on ten vertices: two copies of uc4(), x1 negative to the a's and positive to the
// b's, x2 positive to all eight.
inline sgach::Graph2EC double_uc4() {
  return make({"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4", "x1", "x2"},
              {{"a1", "a2", '+'}, {"a1", "a4", '-'}, {"a3", "a2", '+'}, {"a3", "a4", '+'},
               {"b1", "b2", '+'}, {"b1", "b4", '-'}, {"b3", "b2", '+'}, {"b3", "b4", '+'},
               {"x1", "a1", '-'}, {"x1", "a2", '-'}, {"x1", "a3", '-'}, {"x1", "a4", '-'},
               {"x1", "b1", '+'}, {"x1", "b2", '+'}, {"x1", "b3", '+'}, {"x1", "b4", '+'},
               {"x2", "a1", '+'}, {"x2", "a2", '+'}, {"x2", "a3", '+'}, {"x2", "a4", '+'},
               {"x2", "b1", '+'}, {"x2", "b2", '+'}, {"x2", "b3", '+'}, {"x2", "b4", '+'}});
}

// psi2 is 3, and 4 once d is deleted.
inline sgach::Graph2EC hexagon_2ec() {
  return make({"a", "b", "c", "d", "e", "f"}, {{"f", "a", '-'},
                                               {"a", "b", '+'},
                                               {"b", "c", '+'},
                                               {"c", "d", '-'},
                                               {"d", "e", '+'},
                                               {"e", "a", '+'}});
}

// hexagon_2ec() plus the chords fe and ec; c is the vertex meant to be
// deleted.
inline sgach::Graph2EC hexagon_signed() {
  return make({"a", "b", "c", "d", "e", "f"}, {{"f", "a", '-'},
                                               {"f", "e", '+'},
                                               {"a", "b", '+'},
                                               {"b", "c", '+'},
                                               {"c", "d", '-'},
                                               {"d", "e", '+'},
                                               {"e", "a", '+'},
                                               {"e", "c", '+'}});
}

inline sgach::Graph2EC path(std::size_t n, char sign = '+') {
  std::vector<sgach::SignedEdge> es;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    es.push_back({static_cast<sgach::VertexId>(i), static_cast<sgach::VertexId>(i + 1),
                  sign == '-' ? sgach::Sign::negative : sgach::Sign::positive});
  }
  return sgach::Graph2EC(n, std::move(es));
}

inline sgach::Graph2EC cycle(std::size_t n, std::size_t negative_edges = 0) {
  std::vector<sgach::SignedEdge> es;
  for (std::size_t i = 0; i < n; ++i) {
    es.push_back({static_cast<sgach::VertexId>(i), static_cast<sgach::VertexId>((i + 1) % n),
                  i < negative_edges ? sgach::Sign::negative : sgach::Sign::positive});
  }
  return sgach::Graph2EC(n, std::move(es));
}

inline sgach::Graph2EC complete(std::size_t n, sgach::Sign s = sgach::Sign::positive) {
  std::vector<sgach::SignedEdge> es;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      es.push_back({static_cast<sgach::VertexId>(i), static_cast<sgach::VertexId>(j), s});
    }
  }
  return sgach::Graph2EC(n, std::move(es));
}

}  // namespace fixtures
