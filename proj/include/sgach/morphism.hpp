#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgach/graph.hpp"
#include "sgach/switching.hpp"

namespace sgach {

/// A surjective map V -> {0..k-1} (written 1..k in files), optionally paired
/// with the switching that produces the representative it colours.
class Coloring {
 public:
  Coloring() = default;
  /// Throws invalid_argument unless every colour in 0..k-1 is used and no
  /// entry is out of range. k is the number of distinct values.
  explicit Coloring(std::vector<std::uint32_t> colors,
                    std::optional<SwitchingSet> switching = std::nullopt);

  /// Relabels classes by first occurrence (restricted-growth form).
  static Coloring normalized(const std::vector<std::uint32_t>& labels,
                             std::optional<SwitchingSet> switching = std::nullopt);

  static Coloring identity(std::size_t n);

  std::size_t vertex_count() const noexcept { return colors_.size(); }
  std::size_t color_count() const noexcept { return k_; }
  std::uint32_t operator[](VertexId v) const { return colors_.at(v); }
  const std::vector<std::uint32_t>& colors() const noexcept { return colors_; }
  const std::optional<SwitchingSet>& switching() const noexcept {
    return switching_;
  }
  Coloring with_switching(std::optional<SwitchingSet> s) const;

  /// Members of every class, sorted, indexed by colour.
  std::vector<std::vector<VertexId>> classes() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<std::uint32_t> colors_;
  std::size_t k_ = 0;
  std::optional<SwitchingSet> switching_;
};

/// One identification: `drop` is merged into `keep` after re-signing
/// `pre_switch` (empty in the 2-edge-colored setting). Ids refer to the
/// graph the plan starts from.
struct MergeStep {
  VertexId keep = 0;
  VertexId drop = 0;
  SwitchingSet pre_switch;
};

struct MergePlan {
  std::vector<MergeStep> steps;
};

/// Result of running a MergePlan: the image graph and the induced vertex map
/// (original id -> image id, images numbered by ascending surviving id).
struct MergeOutcome {
  Graph2EC image;
  std::vector<VertexId> map;
  SwitchingSet total_switch;  // composed pre-switches, relative to the input
};

/// Not adjacent and not the ends of an UP_3.
bool identifiable_2ec(const Graph2EC& g, VertexId u, VertexId v);

/// The set to re-sign before u and v can be identified, or nullopt when they
/// are adjacent or antipodal on an UC_4. The returned set is {} or {u}.
std::optional<SwitchingSet> identifiable_signed(const SignedClass& sc, VertexId u,
                                                VertexId v);

/// Identifies u and v. The lower id survives and keeps its name; the other
/// name is recorded in absorbed(). Throws not_identifiable naming the cause.
Graph2EC merge_2ec(const Graph2EC& g, VertexId u, VertexId v);

SignedClass merge_signed(const SignedClass& sc, VertexId u, VertexId v);

/// Executes the plan step by step, checking that every drop vertex is still
/// live and every identification is legal at the moment it happens.
MergeOutcome apply_merge_plan(const Graph2EC& g, const MergePlan& plan);

enum class ViolationKind { monochromatic_edge, sign_conflict };

/// First offending evidence under (min colour, max colour, min id) order.
/// For a monochromatic edge `first` is that edge; for a sign conflict
/// `first` fixed the sign between the two classes and `second` disagrees.
struct Violation {
  ViolationKind kind = ViolationKind::monochromatic_edge;
  std::uint32_t color_a = 0;
  std::uint32_t color_b = 0;
  SignedEdge first;
  std::optional<SignedEdge> second;
};

struct QuotientResult {
  std::optional<Graph2EC> graph;
  std::optional<Violation> violation;

  explicit operator bool() const noexcept { return graph.has_value(); }
};

/// The image of identifying each colour class; class i becomes vertex i,
/// named after its lowest member. The switching carried by the colouring is
/// ignored here (see quotient_signed).
QuotientResult quotient(const Graph2EC& g, const Coloring& col);

/// Applies the colouring's switching to the representative first.
QuotientResult quotient_signed(const SignedClass& sc, const Coloring& col);

std::string describe(const Graph2EC& g, const Violation& v);

/// Surjective onto h, edge-preserving and sign-preserving.
bool verify_hom_2ec(const Graph2EC& g, const Graph2EC& h,
                    const std::vector<VertexId>& phi);

/// verify_hom_2ec from the switched representative of sc_g to the
/// representative of sc_h.
bool verify_hom_signed(const SignedClass& sc_g, const SignedClass& sc_h,
                       const std::vector<VertexId>& phi, const SwitchingSet& s);

}  // namespace sgach
