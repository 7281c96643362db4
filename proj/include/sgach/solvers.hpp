#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "sgach/graph.hpp"
#include "sgach/morphism.hpp"
#include "sgach/switching.hpp"

namespace sgach {

/// Exhaustive-search limits. Exceeding one raises size_guard; nothing is
/// ever truncated silently. The bit-parallel search supports at most 64
/// vertices whatever the configuration says.
struct SolverOptions {
  std::size_t max_vertices_2ec = 12;     // psi, psi2, chi2
  std::size_t max_vertices_signed = 10;  // psis, chis, class extrema
  std::size_t max_edges_graph = 14;      // psi_max / psi_min over signatures
  std::size_t max_edges_signed = 10;     // psi_max_signed / psi_min_signed
  /// Workers for the outer search (signatures or switchings). Results are
  /// identical for every value.
  unsigned threads = 1;

  /// Sets every vertex-count guard.
  SolverOptions& with_max_vertices(std::size_t n) {
    max_vertices_2ec = max_vertices_signed = n;
    return *this;
  }
};

enum class Param {
  psi,             // classical achromatic number of the underlying graph
  psi2,            // 2-edge-colored achromatic number
  psis,            // signed achromatic number
  psi_max_class,   // max psi2 over the switching class
  psi_min_class,   // min psi2 over the switching class
  psi_max,         // max psi2 over all signatures of the underlying graph
  psi_min,         // min psi2 over all signatures
  psi_max_signed,  // max psis over all switching classes
  psi_min_signed,  // min psis over all switching classes
  chi2,
  chis,
};

std::string_view param_name(Param p);
std::optional<Param> parse_param(std::string_view name);

/// True for parameters whose witness is a signed colouring (clique check in
/// the signed sense, colouring carries a switching).
bool is_signed_param(Param p);
/// True for chromatic numbers (witness is a valid, not necessarily complete,
/// colouring).
bool is_chromatic_param(Param p);

/// Value plus everything needed to re-check it.
///
/// `base` is the point of the search space the witness was found at: the
/// input itself, or the chosen signature for the graph-level parameters.
/// `colored` = apply_switching(base, switching) is the 2-edge-colored graph
/// that `coloring` colours, and `certificate` its quotient by `coloring`.
struct ParamResult {
  Param param = Param::psi2;
  std::size_t value = 0;
  Graph2EC base;
  std::optional<SwitchingSet> switching;
  Graph2EC colored;
  Coloring coloring;
  Graph2EC certificate;
};

ParamResult psi2(const Graph2EC& g, const SolverOptions& opts = {});
ParamResult psis(const SignedClass& sc, const SolverOptions& opts = {});
ParamResult psi_max_class(const SignedClass& sc, const SolverOptions& opts = {});
ParamResult psi_min_class(const SignedClass& sc, const SolverOptions& opts = {});
ParamResult psi_max_graph(const UnsignedGraph& g, const SolverOptions& opts = {});
ParamResult psi_min_graph(const UnsignedGraph& g, const SolverOptions& opts = {});
ParamResult psi_max_signed_graph(const UnsignedGraph& g,
                                 const SolverOptions& opts = {});
ParamResult psi_min_signed_graph(const UnsignedGraph& g,
                                 const SolverOptions& opts = {});
ParamResult chi2(const Graph2EC& g, const SolverOptions& opts = {});
ParamResult chi_s(const SignedClass& sc, const SolverOptions& opts = {});
ParamResult psi_ordinary(const UnsignedGraph& g, const SolverOptions& opts = {});

/// Dispatches on `p`; graph-level parameters use g's underlying graph.
ParamResult compute(Param p, const Graph2EC& g, const SolverOptions& opts = {});

/// quotient(g, col) exists and is a 2-edge-colored clique.
bool verify_complete_2ec(const Graph2EC& g, const Coloring& col);

/// The quotient of the representative switched by col.switching() exists and
/// is a signed clique. A colouring without a switching is taken with the
/// empty set.
bool verify_complete_signed(const SignedClass& sc, const Coloring& col);

/// Re-checks a result: colored is base switched, the quotient reproduces the
/// certificate with `value` vertices, and it is a clique of the right kind
/// (or merely valid, for the chromatic numbers).
bool certify(const ParamResult& r);

}  // namespace sgach
