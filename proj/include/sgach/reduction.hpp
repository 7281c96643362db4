#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgach/graph.hpp"
#include "sgach/morphism.hpp"
#include "sgach/switching.hpp"

namespace sgach {

/// 3m positive integers a_1..a_3m and a bound B with B/4 < a_i < B/2 and
/// sum a_i = mB. Values are stored 0-based (a[0] is a_1).
struct ThreePartitionInstance {
  std::uint64_t m = 0;
  std::uint64_t B = 0;
  std::vector<std::uint64_t> a;

  friend bool operator==(const ThreePartitionInstance&,
                         const ThreePartitionInstance&) = default;
};

/// Throws invalid_argument naming the first violated condition.
void validate_instance(const ThreePartitionInstance& inst);

/// Gadget sizes. Overrides need p >= 2 and r + q >= 1.
struct ReductionParams {
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  std::uint64_t p = 0;
  bool connected = false;

  friend bool operator==(const ReductionParams&, const ReductionParams&) = default;
};

void validate_params(const ReductionParams& params);

/// m triples of 0-based indices into A.
struct PartitionSolution {
  std::vector<std::array<std::size_t, 3>> triples;
};

/// Throws invalid_solution unless sol partitions the indices into triples
/// summing to B.
void validate_solution(const ThreePartitionInstance& inst, const PartitionSolution& sol);

/// Scales A and B by m + 1 when some a_i <= m, so that m < a_i afterwards.
ThreePartitionInstance normalize_instance(const ThreePartitionInstance& inst);

/// q = 6m + 2Bm, r = C(m,2) + qm + 1, p = 2C(m,2) + 2m(B+r+q) + q + 1.
/// The connected variant adds 1 to q and 3m to r before r and p are derived.
ReductionParams default_params(std::uint64_t m, std::uint64_t B, bool connected);
ReductionParams default_params(const ThreePartitionInstance& inst, bool connected);

/// Vertex ids of H(I): every star (centre, then its leaves), then the target
/// t_1..t_m, then the grid x_{i,j} row by row. Indices are 1-based as in the
/// vertex names s<i>, e<i>_<j>, t<l>, x<i>_<j>.
class GadgetLayout {
 public:
  GadgetLayout(const ThreePartitionInstance& inst, const ReductionParams& params);

  std::uint64_t rows() const noexcept { return rows_; }  // B + r + q
  std::uint64_t columns() const noexcept { return params_.p; }
  std::uint64_t vertex_count() const noexcept;
  std::uint64_t edge_count() const noexcept;

  VertexId star_center(std::size_t i) const;
  VertexId leaf(std::size_t i, std::size_t j) const;
  VertexId target(std::size_t l) const;
  VertexId grid(std::uint64_t i, std::uint64_t j) const;

 private:
  ThreePartitionInstance inst_;
  ReductionParams params_;
  std::uint64_t rows_ = 0;
  std::vector<VertexId> star_start_;
  VertexId target_start_ = 0;
  VertexId grid_start_ = 0;
};

struct ReductionOptions {
  /// Gadgets with more vertices than this raise size_guard.
  std::uint64_t max_vertices = 50000;
  std::uint64_t max_edges = 20000000;
};

/// The 2-edge-colored gadget. Star edges and apex edges are positive, the
/// target is a negative clique, two grid vertices in the same column are
/// joined positively and two in the same row negatively, and t_l x_{i,1} is
/// positive for B < i <= B + r + q. The connected variant adds the positive
/// edges x_{B+r+q,1} s_i.
Graph2EC build_H(const ThreePartitionInstance& inst, const ReductionParams& params,
                 const ReductionOptions& opts = {});

/// Underlying graph of build_H plus a vertex z adjacent to everything.
UnsignedGraph build_H_prime(const ThreePartitionInstance& inst,
                            const ReductionParams& params,
                            const ReductionOptions& opts = {});

/// k(I) = m + p(B + r + q).
std::uint64_t k_of(const ThreePartitionInstance& inst, const ReductionParams& params);
/// k'(I) = k(I) + 1.
std::uint64_t k_prime(const ThreePartitionInstance& inst, const ReductionParams& params);

struct WitnessColoring {
  MergePlan plan;
  Coloring coloring;
};

/// Identifies s_j with t_i for j in P_i, then sends the B leaves of t_i's
/// stars (ascending star, then leaf index) onto x_{1,1}..x_{B,1}. The
/// colouring is the partition this plan induces, coloured by ascending
/// surviving vertex.
WitnessColoring witness_coloring(const ThreePartitionInstance& inst,
                                 const ReductionParams& params,
                                 const PartitionSolution& sol);

/// Exhaustive search, m <= 3. Returns the lexicographically first solution.
std::optional<PartitionSolution> brute_force_3partition(const ThreePartitionInstance& inst);

/// [G + z, {}]: a universal vertex z and every edge positive.
SignedClass apex_reduction(const UnsignedGraph& g);

/// Four vertices inducing K_4 minus an edge: a b is the shared edge, c and d
/// the non-adjacent pair.
struct Diamond {
  VertexId a = 0;
  VertexId b = 0;
  VertexId c = 0;
  VertexId d = 0;
};

/// First diamond over edges (a, b) in edges() order, with c < d the lowest
/// non-adjacent pair of common neighbours. Throws size_guard above
/// max_vertices.
std::optional<Diamond> find_diamond(const Graph2EC& g, std::size_t max_vertices = 20000);
bool check_diamond_free(const Graph2EC& g, std::size_t max_vertices = 20000);

// Instance file: `3p <m> <B>` then 3m lines `a <value>`; '#' comments.
ThreePartitionInstance parse_instance(std::string_view text);
std::string serialize_instance(const ThreePartitionInstance& inst);
ThreePartitionInstance load_instance(const std::filesystem::path& path);

/// "q=.. r=.. p=.. connected=.." as echoed into gadget files.
std::string describe_params(const ReductionParams& params);

}  // namespace sgach
