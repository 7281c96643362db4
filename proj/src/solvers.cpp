#include "sgach/solvers.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <climits>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "sgach/cliques.hpp"
#include "sgach/error.hpp"

namespace sgach {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxMaskVertices = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

struct Masks {
  int n = 0;
  std::array<Mask, kMaxMaskVertices> adj{};
  std::array<Mask, kMaxMaskVertices> neg{};
};

Masks to_masks(const Graph2EC& g) {
  Masks m;
  m.n = static_cast<int>(g.vertex_count());
  for (const auto& e : g.edges()) {
    m.adj[e.u] |= bit(static_cast<int>(e.v));
    m.adj[e.v] |= bit(static_cast<int>(e.u));
    if (is_negative(e.sign)) {
      m.neg[e.u] |= bit(static_cast<int>(e.v));
      m.neg[e.v] |= bit(static_cast<int>(e.u));
    }
  }
  return m;
}

Masks switched(const Masks& m, Mask s) {
  Masks out = m;
  for (int v = 0; v < m.n; ++v) {
    const Mask flips = m.adj[v] & (((s >> v) & 1) ? ~s : s);
    out.neg[v] = m.neg[v] ^ flips;
  }
  return out;
}

enum class Target { clique_2ec, clique_signed };

struct Found {
  int value = -1;
  std::array<std::uint8_t, kMaxMaskVertices> labels{};
  bool exceeded = false;  // stopped early: true value is above the cap
};

// Depth-first enumeration of vertex partitions as restricted-growth strings
// (vertex v joins an existing class or opens class k). A partial partition
// is abandoned on the first monochromatic edge or the first pair of classes
// joined by edges of both signs. Quotient adjacency is kept per class as
// positive/negative class masks.
class PartitionSearch {
 public:
  explicit PartitionSearch(const Masks& m) : m_(m) {}

  // Lex-first partition of maximum order whose quotient is a clique of the
  // given kind, among those with order >= floor. Stops once an order above
  // `cap` has been seen and flags the result as exceeded.
  Found maximize_complete(Target target, int floor, int cap = INT_MAX) {
    reset();
    target_ = target;
    floor_ = floor;
    cap_ = cap;
    best_ = Found{};
    if (m_.n == 0) {
      if (floor_ <= 0) best_.value = 0;
      return best_;
    }
    max_dfs(0);
    return best_;
  }

  // Lex-first valid partition of minimum order, among those of order
  // <= ceiling.
  Found minimize_valid(int ceiling) {
    reset();
    ceiling_ = ceiling;
    best_ = Found{};
    if (m_.n == 0) {
      best_.value = 0;
      return best_;
    }
    lower_bound_ = 1;
    for (int v = 0; v < m_.n; ++v) {
      if (m_.adj[v]) lower_bound_ = 2;
    }
    min_dfs(0);
    return best_;
  }

 private:
  void reset() {
    k_ = 0;
    stop_ = false;
    cls_.fill(0);
    qpos_.fill(0);
    qneg_.fill(0);
  }

  struct Undo {
    Mask new_pos = 0;
    Mask new_neg = 0;
  };

  bool place(int v, int c, Undo& undo) {
    const Mask earlier = m_.adj[v] & (bit(v) - 1);
    if (earlier & cls_[c]) return false;
    Mask pos_classes = 0;
    Mask neg_classes = 0;
    for (Mask rest = earlier; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      ((m_.neg[v] >> w) & 1 ? neg_classes : pos_classes) |= bit(labels_[w]);
    }
    if (pos_classes & neg_classes) return false;
    if ((pos_classes & qneg_[c]) || (neg_classes & qpos_[c])) return false;
    undo.new_pos = pos_classes & ~qpos_[c];
    undo.new_neg = neg_classes & ~qneg_[c];
    link(c, undo, true);
    cls_[c] |= bit(v);
    labels_[v] = static_cast<std::uint8_t>(c);
    return true;
  }

  void unplace(int v, int c, const Undo& undo) {
    cls_[c] &= ~bit(v);
    link(c, undo, false);
  }

  void link(int c, const Undo& undo, bool on) {
    for (Mask rest = undo.new_pos; rest; rest &= rest - 1) {
      const int d = std::countr_zero(rest);
      toggle(qpos_[c], d, on);
      toggle(qpos_[d], c, on);
    }
    for (Mask rest = undo.new_neg; rest; rest &= rest - 1) {
      const int d = std::countr_zero(rest);
      toggle(qneg_[c], d, on);
      toggle(qneg_[d], c, on);
    }
  }

  static void toggle(Mask& m, int i, bool on) {
    if (on) {
      m |= bit(i);
    } else {
      m &= ~bit(i);
    }
  }

  bool quotient_is_clique() const {
    for (int c = 0; c < k_; ++c) {
      const Mask adjacent = qpos_[c] | qneg_[c];
      for (int d = c + 1; d < k_; ++d) {
        if ((adjacent >> d) & 1) continue;
        const bool up3 = (qpos_[c] & qneg_[d]) | (qneg_[c] & qpos_[d]);
        if (!up3) return false;
        if (target_ == Target::clique_signed) {
          const bool bp3 = (qpos_[c] & qpos_[d]) | (qneg_[c] & qneg_[d]);
          if (!bp3) return false;
        }
      }
    }
    return true;
  }

  void max_dfs(int v) {
    if (v == m_.n) {
      if (k_ >= need() && quotient_is_clique()) {
        best_.value = k_;
        std::copy(labels_.begin(), labels_.begin() + m_.n, best_.labels.begin());
        if (k_ > cap_) {
          best_.exceeded = true;
          stop_ = true;
        }
      }
      return;
    }
    // Opening a new class is tried last so partitions come in lex order.
    for (int c = 0; c <= k_; ++c) {
      const int order = c == k_ ? k_ + 1 : k_;
      if (order + (m_.n - v - 1) < need()) continue;
      Undo undo;
      if (!place(v, c, undo)) continue;
      const bool opened = c == k_;
      if (opened) ++k_;
      max_dfs(v + 1);
      if (opened) --k_;
      unplace(v, c, undo);
      if (stop_) return;
    }
  }

  int need() const { return std::max(floor_, best_.value + 1); }

  void min_dfs(int v) {
    if (v == m_.n) {
      best_.value = k_;
      std::copy(labels_.begin(), labels_.begin() + m_.n, best_.labels.begin());
      if (k_ <= lower_bound_) stop_ = true;
      return;
    }
    for (int c = 0; c <= k_; ++c) {
      const int order = c == k_ ? k_ + 1 : k_;
      const int limit = best_.value < 0 ? ceiling_ : std::min(ceiling_, best_.value - 1);
      if (order > limit) continue;
      Undo undo;
      if (!place(v, c, undo)) continue;
      const bool opened = c == k_;
      if (opened) ++k_;
      min_dfs(v + 1);
      if (opened) --k_;
      unplace(v, c, undo);
      if (stop_) return;
    }
  }

  const Masks& m_;
  Target target_ = Target::clique_2ec;
  int floor_ = 0;
  int cap_ = INT_MAX;
  int ceiling_ = INT_MAX;
  int lower_bound_ = 0;
  int k_ = 0;
  bool stop_ = false;
  Found best_;
  std::array<std::uint8_t, kMaxMaskVertices> labels_{};
  std::array<Mask, kMaxMaskVertices> cls_{};
  std::array<Mask, kMaxMaskVertices> qpos_{};
  std::array<Mask, kMaxMaskVertices> qneg_{};
};

// Runs eval(i) for i in [0, count) on `threads` workers, rethrowing the
// first exception.
template <typename Eval>
void for_each_index(std::uint64_t count, unsigned threads, Eval&& eval) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) eval(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= count) return;
      try {
        eval(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Keeps the best (value, index) seen: larger (or smaller, when minimizing)
// value wins, ties go to the lower index. Independent of scheduling.
class Champion {
 public:
  explicit Champion(bool maximize) : maximize_(maximize) {}

  void offer(std::uint64_t index, const Found& f) {
    if (f.value < 0 || f.exceeded) return;
    std::lock_guard lock(mutex_);
    const bool better =
        !has_ || (maximize_ ? f.value > found_.value : f.value < found_.value) ||
        (f.value == found_.value && index < index_);
    if (better) {
      has_ = true;
      index_ = index;
      found_ = f;
      bound_ = f.value;
    }
  }

  // Current best value: a floor when maximizing, a ceiling when minimizing.
  int bound(int fallback) const {
    const int b = bound_.load();
    return b == kUnset ? fallback : b;
  }

  bool has() const { return has_; }
  std::uint64_t index() const { return index_; }
  const Found& found() const { return found_; }

 private:
  static constexpr int kUnset = INT_MIN;
  bool maximize_;
  std::mutex mutex_;
  bool has_ = false;
  std::uint64_t index_ = 0;
  Found found_;
  std::atomic<int> bound_{kUnset};
};

// Non-root vertices of every component, ascending. Switching masks are
// built from these so each class member appears exactly once.
std::vector<int> switchable_vertices(const Graph2EC& g) {
  std::size_t count = 0;
  const auto comp = connected_components(g, &count);
  std::vector<bool> root_seen(count, false);
  std::vector<int> out;
  for (std::size_t v = 0; v < comp.size(); ++v) {
    if (!root_seen[comp[v]]) {
      root_seen[comp[v]] = true;
    } else {
      out.push_back(static_cast<int>(v));
    }
  }
  return out;
}

Mask deposit(std::uint64_t index, const std::vector<int>& positions) {
  Mask out = 0;
  for (std::size_t j = 0; j < positions.size(); ++j) {
    if ((index >> j) & 1) out |= bit(positions[j]);
  }
  return out;
}

SwitchingSet to_switching(Mask s) {
  std::vector<VertexId> members;
  for (Mask rest = s; rest; rest &= rest - 1) {
    members.push_back(static_cast<VertexId>(std::countr_zero(rest)));
  }
  return SwitchingSet(std::move(members));
}

void guard_vertices(const Graph2EC& g, std::size_t cap, const char* what) {
  const auto limit = std::min(cap, kMaxMaskVertices);
  if (g.vertex_count() > limit) {
    fail(ErrorCode::size_guard, std::string(what) + " on " +
                                    std::to_string(g.vertex_count()) +
                                    " vertices exceeds the limit of " +
                                    std::to_string(limit));
  }
}

void guard_edges(const Graph2EC& g, std::size_t cap, const char* what) {
  if (g.edge_count() > cap) {
    fail(ErrorCode::size_guard, std::string(what) + " on " +
                                    std::to_string(g.edge_count()) +
                                    " edges exceeds the limit of " +
                                    std::to_string(cap));
  }
}

Graph2EC with_signature(const Graph2EC& g, std::uint64_t negative_bits,
                        const std::vector<std::size_t>& free_edges) {
  std::vector<Sign> signs(g.edge_count(), Sign::positive);
  for (std::size_t j = 0; j < free_edges.size(); ++j) {
    if ((negative_bits >> j) & 1) signs[free_edges[j]] = Sign::negative;
  }
  return g.with_signs(signs);
}

ParamResult assemble(Param p, const Graph2EC& base, std::optional<SwitchingSet> s,
                     const Found& f) {
  ParamResult r;
  r.param = p;
  r.value = static_cast<std::size_t>(f.value);
  r.base = base;
  r.colored = s ? apply_switching(base, *s) : base;
  r.switching = std::move(s);
  std::vector<std::uint32_t> labels(f.labels.begin(),
                                    f.labels.begin() + base.vertex_count());
  r.coloring = Coloring(std::move(labels));
  auto q = quotient(r.colored, r.coloring);
  if (!q.graph) fail(ErrorCode::invalid_argument, "internal: witness quotient failed");
  r.certificate = std::move(*q.graph);
  return r;
}

// Max (or min) over the 2^(n-c) members of the class of the best partition
// found by `search` on each member.
template <typename Search>
ParamResult over_switchings(Param p, const Graph2EC& g, bool maximize,
                            unsigned threads, Search&& search) {
  const auto masks = to_masks(g);
  const auto free = switchable_vertices(g);
  Champion champ(maximize);
  for_each_index(std::uint64_t{1} << free.size(), threads, [&](std::uint64_t i) {
    const auto member = switched(masks, deposit(i, free));
    champ.offer(i, search(member, champ));
  });
  return assemble(p, g, to_switching(deposit(champ.index(), free)), champ.found());
}

Found best_psi2(const Masks& m, int floor = 0, int cap = INT_MAX) {
  return PartitionSearch(m).maximize_complete(Target::clique_2ec, floor, cap);
}

}  // namespace

std::string_view param_name(Param p) {
  switch (p) {
    case Param::psi: return "psi";
    case Param::psi2: return "psi2";
    case Param::psis: return "psis";
    case Param::psi_max_class: return "psi-max-class";
    case Param::psi_min_class: return "psi-min-class";
    case Param::psi_max: return "psi-max";
    case Param::psi_min: return "psi-min";
    case Param::psi_max_signed: return "psi-max-signed";
    case Param::psi_min_signed: return "psi-min-signed";
    case Param::chi2: return "chi2";
    case Param::chis: return "chis";
  }
  return "?";
}

std::optional<Param> parse_param(std::string_view name) {
  for (auto p : {Param::psi, Param::psi2, Param::psis, Param::psi_max_class,
                 Param::psi_min_class, Param::psi_max, Param::psi_min,
                 Param::psi_max_signed, Param::psi_min_signed, Param::chi2,
                 Param::chis}) {
    if (param_name(p) == name) return p;
  }
  return std::nullopt;
}

bool is_signed_param(Param p) {
  return p == Param::psis || p == Param::chis || p == Param::psi_max_signed ||
         p == Param::psi_min_signed;
}

bool is_chromatic_param(Param p) { return p == Param::chi2 || p == Param::chis; }

ParamResult psi2(const Graph2EC& g, const SolverOptions& opts) {
  guard_vertices(g, opts.max_vertices_2ec, "psi2");
  return assemble(Param::psi2, g, std::nullopt, best_psi2(to_masks(g)));
}

ParamResult psi_ordinary(const UnsignedGraph& g, const SolverOptions& opts) {
  guard_vertices(g.all_positive(), opts.max_vertices_2ec, "psi");
  auto r = psi2(g.all_positive(), opts);
  r.param = Param::psi;
  return r;
}

ParamResult chi2(const Graph2EC& g, const SolverOptions& opts) {
  guard_vertices(g, opts.max_vertices_2ec, "chi2");
  const auto m = to_masks(g);
  return assemble(Param::chi2, g, std::nullopt,
                  PartitionSearch(m).minimize_valid(m.n));
}

ParamResult psis(const SignedClass& sc, const SolverOptions& opts) {
  const auto& g = sc.representative();
  guard_vertices(g, opts.max_vertices_signed, "psis");
  return over_switchings(Param::psis, g, true, opts.threads,
                         [](const Masks& member, const Champion& champ) {
                           return PartitionSearch(member).maximize_complete(
                               Target::clique_signed, champ.bound(0));
                         });
}

ParamResult chi_s(const SignedClass& sc, const SolverOptions& opts) {
  const auto& g = sc.representative();
  guard_vertices(g, opts.max_vertices_signed, "chis");
  return over_switchings(Param::chis, g, false, opts.threads,
                         [&](const Masks& member, const Champion& champ) {
                           return PartitionSearch(member).minimize_valid(
                               champ.bound(static_cast<int>(g.vertex_count())));
                         });
}

ParamResult psi_max_class(const SignedClass& sc, const SolverOptions& opts) {
  const auto& g = sc.representative();
  guard_vertices(g, opts.max_vertices_signed, "psi-max-class");
  return over_switchings(Param::psi_max_class, g, true, opts.threads,
                         [](const Masks& member, const Champion& champ) {
                           return best_psi2(member, champ.bound(0));
                         });
}

ParamResult psi_min_class(const SignedClass& sc, const SolverOptions& opts) {
  const auto& g = sc.representative();
  guard_vertices(g, opts.max_vertices_signed, "psi-min-class");
  return over_switchings(Param::psi_min_class, g, false, opts.threads,
                         [](const Masks& member, const Champion& champ) {
                           return best_psi2(member, 0, champ.bound(INT_MAX));
                         });
}

namespace {

template <typename Search>
ParamResult over_signatures(Param p, const Graph2EC& g,
                            const std::vector<std::size_t>& free_edges,
                            bool maximize, unsigned threads, Search&& search) {
  Champion champ(maximize);
  const auto count = std::uint64_t{1} << free_edges.size();
  for_each_index(count, threads, [&](std::uint64_t i) {
    champ.offer(i, search(with_signature(g, i, free_edges), champ));
  });
  return assemble(p, with_signature(g, champ.index(), free_edges), std::nullopt,
                  champ.found());
}

std::vector<std::size_t> all_edges(const Graph2EC& g) {
  std::vector<std::size_t> out(g.edge_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<std::size_t> non_forest_edges(const Graph2EC& g) {
  const auto tree = bfs_forest_edges(g);
  std::vector<std::size_t> out;
  std::size_t t = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (t < tree.size() && tree[t] == i) {
      ++t;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

// psis of one class, with the witness member attached.
struct SignedBest {
  Found found;
  Mask member = 0;
};

SignedBest psis_of_class(const Graph2EC& rep, int floor, int cap) {
  const auto masks = to_masks(rep);
  const auto free = switchable_vertices(rep);
  SignedBest best;
  best.found.value = -1;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << free.size()); ++i) {
    const auto s = deposit(i, free);
    auto f = PartitionSearch(switched(masks, s))
                 .maximize_complete(Target::clique_signed,
                                    std::max(floor, best.found.value + 1), cap);
    if (f.exceeded) {
      best.found = f;
      best.member = s;
      return best;
    }
    if (f.value > best.found.value) {
      best.found = f;
      best.member = s;
    }
  }
  return best;
}

ParamResult over_signed_classes(Param p, const Graph2EC& g, bool maximize,
                                unsigned threads) {
  const auto free_edges = non_forest_edges(g);
  const auto count = std::uint64_t{1} << free_edges.size();
  Champion champ(maximize);
  std::vector<Mask> members(count, 0);
  for_each_index(count, threads, [&](std::uint64_t i) {
    const auto rep = with_signature(g, i, free_edges);
    auto best = maximize ? psis_of_class(rep, champ.bound(0), INT_MAX)
                         : psis_of_class(rep, 0, champ.bound(INT_MAX));
    members[i] = best.member;
    champ.offer(i, best.found);
  });
  const auto rep = with_signature(g, champ.index(), free_edges);
  return assemble(p, rep, to_switching(members[champ.index()]), champ.found());
}

}  // namespace

ParamResult psi_max_graph(const UnsignedGraph& g, const SolverOptions& opts) {
  const auto& base = g.all_positive();
  guard_vertices(base, opts.max_vertices_2ec, "psi-max");
  guard_edges(base, opts.max_edges_graph, "psi-max");
  return over_signatures(Param::psi_max, base, all_edges(base), true, opts.threads,
                         [](const Graph2EC& sig, const Champion& champ) {
                           return best_psi2(to_masks(sig), champ.bound(0));
                         });
}

ParamResult psi_min_graph(const UnsignedGraph& g, const SolverOptions& opts) {
  const auto& base = g.all_positive();
  guard_vertices(base, opts.max_vertices_2ec, "psi-min");
  guard_edges(base, opts.max_edges_graph, "psi-min");
  return over_signatures(Param::psi_min, base, all_edges(base), false, opts.threads,
                         [](const Graph2EC& sig, const Champion& champ) {
                           return best_psi2(to_masks(sig), 0, champ.bound(INT_MAX));
                         });
}

ParamResult psi_max_signed_graph(const UnsignedGraph& g, const SolverOptions& opts) {
  const auto& base = g.all_positive();
  guard_vertices(base, opts.max_vertices_signed, "psi-max-signed");
  guard_edges(base, opts.max_edges_signed, "psi-max-signed");
  return over_signed_classes(Param::psi_max_signed, base, true, opts.threads);
}

ParamResult psi_min_signed_graph(const UnsignedGraph& g, const SolverOptions& opts) {
  const auto& base = g.all_positive();
  guard_vertices(base, opts.max_vertices_signed, "psi-min-signed");
  guard_edges(base, opts.max_edges_signed, "psi-min-signed");
  return over_signed_classes(Param::psi_min_signed, base, false, opts.threads);
}

ParamResult compute(Param p, const Graph2EC& g, const SolverOptions& opts) {
  switch (p) {
    case Param::psi: return psi_ordinary(g.underlying(), opts);
    case Param::psi2: return psi2(g, opts);
    case Param::psis: return psis(SignedClass(g), opts);
    case Param::psi_max_class: return psi_max_class(SignedClass(g), opts);
    case Param::psi_min_class: return psi_min_class(SignedClass(g), opts);
    case Param::psi_max: return psi_max_graph(g.underlying(), opts);
    case Param::psi_min: return psi_min_graph(g.underlying(), opts);
    case Param::psi_max_signed: return psi_max_signed_graph(g.underlying(), opts);
    case Param::psi_min_signed: return psi_min_signed_graph(g.underlying(), opts);
    case Param::chi2: return chi2(g, opts);
    case Param::chis: return chi_s(SignedClass(g), opts);
  }
  fail(ErrorCode::invalid_argument, "unknown parameter");
}

bool verify_complete_2ec(const Graph2EC& g, const Coloring& col) {
  auto q = quotient(g, col);
  return q.graph && is_2ec_clique(*q.graph);
}

bool verify_complete_signed(const SignedClass& sc, const Coloring& col) {
  auto q = quotient_signed(sc, col);
  return q.graph && is_signed_clique(SignedClass(*q.graph));
}

bool certify(const ParamResult& r) {
  const Graph2EC expected =
      r.switching ? apply_switching(r.base, *r.switching) : r.base;
  if (!(expected == r.colored)) return false;
  if (r.coloring.color_count() != r.value) return false;
  auto q = quotient(r.colored, r.coloring);
  if (!q.graph || !(*q.graph == r.certificate)) return false;
  if (r.certificate.vertex_count() != r.value) return false;
  if (is_chromatic_param(r.param)) return true;
  if (is_signed_param(r.param)) return is_signed_clique(SignedClass(r.certificate));
  return is_2ec_clique(r.certificate);
}

}  // namespace sgach
