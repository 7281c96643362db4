#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "sgach/graph.hpp"

namespace sgach {

/// A set of vertices to re-sign. Members are kept sorted and unique.
class SwitchingSet {
 public:
  SwitchingSet() = default;
  explicit SwitchingSet(std::vector<VertexId> members);
  SwitchingSet(std::initializer_list<VertexId> members)
      : SwitchingSet(std::vector<VertexId>(members)) {}

  /// Members are the vertices with a true flag.
  static SwitchingSet from_flags(const std::vector<bool>& flags);

  const std::vector<VertexId>& members() const noexcept { return members_; }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(VertexId v) const;

  std::vector<bool> flags(std::size_t n) const;

  /// Symmetric difference: switching by a then b equals switching by a ^ b.
  friend SwitchingSet operator^(const SwitchingSet& a, const SwitchingSet& b);

  friend bool operator==(const SwitchingSet&, const SwitchingSet&) = default;

 private:
  std::vector<VertexId> members_;
};

/// Flips every edge incident with `v`.
Graph2EC resign_at(const Graph2EC& g, VertexId v);

/// An edge flips iff exactly one endpoint is in `s`.
Graph2EC apply_switching(const Graph2EC& g, const SwitchingSet& s);

/// Replaces s by its complement inside every component whose lowest-id vertex
/// belongs to s. The switched signature is unchanged.
SwitchingSet normalize_switching(const Graph2EC& g, const SwitchingSet& s);

/// A normalized set carrying g1's signature to g2's, if the two are
/// switching equivalent. Throws invalid_argument when the underlying graphs
/// differ.
std::optional<SwitchingSet> equivalence_witness(const Graph2EC& g1,
                                                const Graph2EC& g2);

bool is_equivalent(const Graph2EC& g1, const Graph2EC& g2);

/// The class member whose BFS forest (lowest-id roots, children visited in
/// ascending id order) is all positive, and the normalized set reaching it.
std::pair<Graph2EC, SwitchingSet> canonical_signature(const Graph2EC& g);

/// Edges of the BFS forest used by canonical_signature, as indices into
/// g.edges().
std::vector<std::size_t> bfs_forest_edges(const Graph2EC& g);

/// The signed graph [G, Sigma]: a switching class, held through one
/// representative (G, C) with C = Sigma, stored exactly as given. Every query
/// on a SignedClass returns the same answer for any equivalent representative;
/// switching sets handed in or out are relative to the stored representative.
class SignedClass {
 public:
  SignedClass() = default;
  explicit SignedClass(Graph2EC representative)
      : representative_(std::move(representative)) {}

  const Graph2EC& representative() const noexcept { return representative_; }
  std::size_t vertex_count() const noexcept {
    return representative_.vertex_count();
  }

  /// The representative produced by canonical_signature; equal for any two
  /// equivalent classes with the same underlying graph.
  Graph2EC normal_form() const { return canonical_signature(representative_).first; }

  /// Same class, stored through a different member.
  SignedClass switched(const SwitchingSet& s) const {
    return SignedClass(apply_switching(representative_, s));
  }

  friend bool operator==(const SignedClass& a, const SignedClass& b) {
    return a.representative_.names() == b.representative_.names() &&
           a.representative_.underlying() == b.representative_.underlying() &&
           is_equivalent(a.representative_, b.representative_);
  }

 private:
  Graph2EC representative_;
};

}  // namespace sgach
