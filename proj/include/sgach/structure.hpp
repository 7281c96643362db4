#pragma once

#include <optional>
#include <vector>

#include "sgach/graph.hpp"
#include "sgach/switching.hpp"

namespace sgach {

/// A path u = vertices.front(), ..., vertices.back() in some graph.
struct PathWitness {
  std::vector<VertexId> vertices;
};

/// A cycle; the closing edge back.front() is implicit.
struct CycleWitness {
  std::vector<VertexId> vertices;
};

enum class Balance { balanced, unbalanced };

/// Product of edge signs along the path. Throws invalid_argument if two
/// consecutive vertices are not adjacent.
Sign sign_product(const Graph2EC& g, const PathWitness& p);
/// Includes the closing edge. Throws invalid_argument unless the witness is a
/// cycle of length >= 3 on distinct vertices.
Sign sign_product(const Graph2EC& g, const CycleWitness& c);

/// Unbalanced iff the cycle has an odd number of negative edges.
Balance cycle_balance(const Graph2EC& g, const CycleWitness& c);

/// A common neighbour w with sign(uw) != sign(wv), i.e. an UP_3 u-w-v; the
/// lowest such w is returned.
std::optional<PathWitness> up3_between(const Graph2EC& g, VertexId u, VertexId v);

/// An UC_4 u-w-v-w' with u, v antipodal, found from two common neighbours
/// whose sign products differ. Both u and v must be distinct and non-adjacent.
std::optional<CycleWitness> uc4_antipodal(const SignedClass& sc, VertexId u,
                                          VertexId v);

/// Same coloured neighbourhood. Adjacent pairs are never twins.
bool twins_2ec(const Graph2EC& g, VertexId u, VertexId v);

/// Twins in the representative, or after re-signing at u.
bool twins_signed(const SignedClass& sc, VertexId u, VertexId v);

/// Classes of the relation N(u) == N(v), each sorted, ordered by lowest
/// member.
std::vector<std::vector<VertexId>> rc_classes(const UnsignedGraph& g);

}  // namespace sgach
