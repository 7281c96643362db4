#include "sgach/cliques.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

#include "detail/signed_bits.hpp"
#include "sgach/error.hpp"

namespace sgach {

namespace {

// Scans rows u in ascending order for the first v > u with identifiable(u, v).
template <typename Identifiable>
std::optional<std::pair<VertexId, VertexId>> first_pair(
    std::size_t n, unsigned threads, const Identifiable& identifiable) {
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> found(n, kNone);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNone};

  auto worker = [&] {
    for (;;) {
      const auto u = next.fetch_add(1);
      if (u >= n || u > best.load()) return;
      for (auto v = u + 1; v < n; ++v) {
        if (identifiable(static_cast<VertexId>(u), static_cast<VertexId>(v))) {
          found[u] = v;
          auto cur = best.load();
          while (u < cur && !best.compare_exchange_weak(cur, u)) {
          }
          break;
        }
      }
    }
  };

  threads = std::max(1u, threads);
  if (threads == 1 || n < 256) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (found[u] != kNone) {
      return std::pair{static_cast<VertexId>(u), static_cast<VertexId>(found[u])};
    }
  }
  return std::nullopt;
}

void guard(std::size_t n, const CliqueOptions& opts) {
  if (n > opts.max_vertices) {
    fail(ErrorCode::size_guard, "clique check on " + std::to_string(n) +
                                    " vertices exceeds the cap of " +
                                    std::to_string(opts.max_vertices));
  }
}

}  // namespace

std::optional<std::pair<VertexId, VertexId>> find_identifiable_pair_2ec(
    const Graph2EC& g, const CliqueOptions& opts) {
  guard(g.vertex_count(), opts);
  const detail::SignedBits bits(g);
  return first_pair(g.vertex_count(), opts.threads, [&](VertexId u, VertexId v) {
    return !bits.adjacent(u, v) && !bits.has_up3(u, v);
  });
}

std::optional<std::pair<VertexId, VertexId>> find_identifiable_pair_signed(
    const SignedClass& sc, const CliqueOptions& opts) {
  const auto& g = sc.representative();
  guard(g.vertex_count(), opts);
  const detail::SignedBits bits(g);
  return first_pair(g.vertex_count(), opts.threads, [&](VertexId u, VertexId v) {
    return !bits.adjacent(u, v) && !(bits.has_up3(u, v) && bits.has_bp3(u, v));
  });
}

bool is_2ec_clique(const Graph2EC& g, const CliqueOptions& opts) {
  return !find_identifiable_pair_2ec(g, opts);
}

bool is_signed_clique(const SignedClass& sc, const CliqueOptions& opts) {
  return !find_identifiable_pair_signed(sc, opts);
}

SignedClass apex_extend(const Graph2EC& g) {
  std::string name = "z";
  while (g.find(name)) name += '\'';
  return SignedClass(g.with_universal_vertex(std::move(name), Sign::positive));
}

}  // namespace sgach
