#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "sgach/graph.hpp"
#include "sgach/switching.hpp"

namespace sgach {

struct CliqueOptions {
  /// Inputs above this order are rejected with size_guard.
  std::size_t max_vertices = 20000;
  /// Pair checks are spread over this many threads; the answer does not
  /// depend on it.
  unsigned threads = 1;
};

/// Lowest (u, v), u < v, that is identifiable in the 2-edge-colored sense.
std::optional<std::pair<VertexId, VertexId>> find_identifiable_pair_2ec(
    const Graph2EC& g, const CliqueOptions& opts = {});

/// Lowest (u, v), u < v, non-adjacent and not antipodal on an UC_4.
std::optional<std::pair<VertexId, VertexId>> find_identifiable_pair_signed(
    const SignedClass& sc, const CliqueOptions& opts = {});

/// Every pair is adjacent or the ends of an UP_3.
bool is_2ec_clique(const Graph2EC& g, const CliqueOptions& opts = {});

/// Every non-adjacent pair is antipodal on an UC_4.
bool is_signed_clique(const SignedClass& sc, const CliqueOptions& opts = {});

/// [K', D'] where K' adds a vertex z joined to every vertex by a positive
/// edge. z is named "z" (primes appended if that name is taken).
SignedClass apex_extend(const Graph2EC& g);

}  // namespace sgach
