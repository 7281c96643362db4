#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "sgach/graph.hpp"

namespace sgach::detail {

// Positive and negative neighbourhoods as bit rows, for pair queries that
// scan common neighbourhoods word by word.
class SignedBits {
 public:
  explicit SignedBits(const Graph2EC& g)
      : n_(g.vertex_count()), words_((n_ + 63) / 64),
        pos_(n_ * words_, 0), neg_(n_ * words_, 0) {
    for (const auto& e : g.edges()) {
      auto& rows = is_negative(e.sign) ? neg_ : pos_;
      set(rows, e.u, e.v);
      set(rows, e.v, e.u);
    }
  }

  std::size_t size() const noexcept { return n_; }

  bool adjacent(VertexId u, VertexId v) const {
    return test(pos_, u, v) || test(neg_, u, v);
  }

  // Some common neighbour w with sign(uw) != sign(wv).
  bool has_up3(VertexId u, VertexId v) const {
    const auto* pu = row(pos_, u);
    const auto* nu = row(neg_, u);
    const auto* pv = row(pos_, v);
    const auto* nv = row(neg_, v);
    for (std::size_t w = 0; w < words_; ++w) {
      if ((pu[w] & nv[w]) | (nu[w] & pv[w])) return true;
    }
    return false;
  }

  // Some common neighbour w with sign(uw) == sign(wv).
  bool has_bp3(VertexId u, VertexId v) const {
    const auto* pu = row(pos_, u);
    const auto* nu = row(neg_, u);
    const auto* pv = row(pos_, v);
    const auto* nv = row(neg_, v);
    for (std::size_t w = 0; w < words_; ++w) {
      if ((pu[w] & pv[w]) | (nu[w] & nv[w])) return true;
    }
    return false;
  }

 private:
  void set(std::vector<std::uint64_t>& rows, VertexId r, VertexId c) {
    rows[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  bool test(const std::vector<std::uint64_t>& rows, VertexId r, VertexId c) const {
    return (rows[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  const std::uint64_t* row(const std::vector<std::uint64_t>& rows, VertexId r) const {
    return rows.data() + r * words_;
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> pos_;
  std::vector<std::uint64_t> neg_;
};

}  // namespace sgach::detail
