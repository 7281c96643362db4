#include "sgach/reduction.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "sgach/cliques.hpp"
#include "sgach/error.hpp"
#include "sgach/graph_io.hpp"

namespace sgach {

namespace {

std::uint64_t choose2(std::uint64_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

}  // namespace

void validate_instance(const ThreePartitionInstance& inst) {
  if (inst.m == 0) fail(ErrorCode::invalid_argument, "3-partition needs m >= 1");
  if (inst.a.size() != 3 * inst.m) {
    fail(ErrorCode::invalid_argument, "expected " + std::to_string(3 * inst.m) +
                                          " values, got " + std::to_string(inst.a.size()));
  }
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < inst.a.size(); ++i) {
    const auto x = inst.a[i];
    if (!(4 * x > inst.B && 2 * x < inst.B)) {
      fail(ErrorCode::invalid_argument, "a_" + std::to_string(i + 1) + " = " +
                                            std::to_string(x) +
                                            " is not strictly between B/4 and B/2");
    }
    sum += x;
  }
  if (sum != inst.m * inst.B) {
    fail(ErrorCode::invalid_argument, "values sum to " + std::to_string(sum) +
                                          ", expected mB = " +
                                          std::to_string(inst.m * inst.B));
  }
}

void validate_params(const ReductionParams& params) {
  if (params.p < 2) fail(ErrorCode::invalid_argument, "p must be at least 2");
  if (params.r + params.q < 1) fail(ErrorCode::invalid_argument, "r + q must be at least 1");
}

void validate_solution(const ThreePartitionInstance& inst, const PartitionSolution& sol) {
  if (sol.triples.size() != inst.m) {
    fail(ErrorCode::invalid_solution, "expected " + std::to_string(inst.m) + " triples");
  }
  std::vector<bool> used(inst.a.size(), false);
  for (std::size_t t = 0; t < sol.triples.size(); ++t) {
    std::uint64_t sum = 0;
    for (auto i : sol.triples[t]) {
      if (i >= inst.a.size()) {
        fail(ErrorCode::invalid_solution, "index " + std::to_string(i + 1) + " out of range");
      }
      if (used[i]) {
        fail(ErrorCode::invalid_solution, "index " + std::to_string(i + 1) + " used twice");
      }
      used[i] = true;
      sum += inst.a[i];
    }
    if (sum != inst.B) {
      fail(ErrorCode::invalid_solution, "triple " + std::to_string(t + 1) + " sums to " +
                                            std::to_string(sum) + ", not B = " +
                                            std::to_string(inst.B));
    }
  }
}

ThreePartitionInstance normalize_instance(const ThreePartitionInstance& inst) {
  validate_instance(inst);
  const bool small = std::any_of(inst.a.begin(), inst.a.end(),
                                 [&](std::uint64_t x) { return x <= inst.m; });
  if (!small) return inst;
  auto out = inst;
  const auto factor = inst.m + 1;
  out.B *= factor;
  for (auto& x : out.a) x *= factor;
  return out;
}

ReductionParams default_params(std::uint64_t m, std::uint64_t B, bool connected) {
  ReductionParams p;
  p.connected = connected;
  p.q = 6 * m + 2 * B * m + (connected ? 1 : 0);
  p.r = choose2(m) + p.q * m + 1 + (connected ? 3 * m : 0);
  p.p = 2 * choose2(m) + 2 * m * (B + p.r + p.q) + p.q + 1;
  return p;
}

ReductionParams default_params(const ThreePartitionInstance& inst, bool connected) {
  return default_params(inst.m, inst.B, connected);
}

GadgetLayout::GadgetLayout(const ThreePartitionInstance& inst, const ReductionParams& params)
    : inst_(inst), params_(params) {
  validate_instance(inst);
  validate_params(params);
  rows_ = inst.B + params.r + params.q;
  VertexId next = 0;
  for (auto x : inst.a) {
    star_start_.push_back(next);
    next += static_cast<VertexId>(1 + x);
  }
  target_start_ = next;
  grid_start_ = next + static_cast<VertexId>(inst.m);
}

std::uint64_t GadgetLayout::vertex_count() const noexcept {
  return grid_start_ + rows_ * params_.p;
}

std::uint64_t GadgetLayout::edge_count() const noexcept {
  const auto m = inst_.m;
  return m * inst_.B + choose2(m) + rows_ * choose2(params_.p) +
         params_.p * choose2(rows_) + m * (params_.r + params_.q) +
         (params_.connected ? 3 * m : 0);
}

VertexId GadgetLayout::star_center(std::size_t i) const {
  if (i < 1 || i > star_start_.size()) fail(ErrorCode::invalid_argument, "no star " + std::to_string(i));
  return star_start_[i - 1];
}

VertexId GadgetLayout::leaf(std::size_t i, std::size_t j) const {
  const auto centre = star_center(i);
  if (j < 1 || j > inst_.a[i - 1]) {
    fail(ErrorCode::invalid_argument, "star " + std::to_string(i) + " has no leaf " + std::to_string(j));
  }
  return centre + static_cast<VertexId>(j);
}

VertexId GadgetLayout::target(std::size_t l) const {
  if (l < 1 || l > inst_.m) fail(ErrorCode::invalid_argument, "no target vertex " + std::to_string(l));
  return target_start_ + static_cast<VertexId>(l - 1);
}

VertexId GadgetLayout::grid(std::uint64_t i, std::uint64_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > params_.p) {
    fail(ErrorCode::invalid_argument,
         "no grid vertex x" + std::to_string(i) + "_" + std::to_string(j));
  }
  return grid_start_ + static_cast<VertexId>((i - 1) * params_.p + (j - 1));
}

Graph2EC build_H(const ThreePartitionInstance& inst, const ReductionParams& params,
                 const ReductionOptions& opts) {
  const GadgetLayout lay(inst, params);
  if (lay.vertex_count() > opts.max_vertices) {
    fail(ErrorCode::size_guard, "gadget has " + std::to_string(lay.vertex_count()) +
                                    " vertices, limit " + std::to_string(opts.max_vertices));
  }
  if (lay.edge_count() > opts.max_edges) {
    fail(ErrorCode::size_guard, "gadget has " + std::to_string(lay.edge_count()) +
                                    " edges, limit " + std::to_string(opts.max_edges));
  }

  std::vector<std::string> names;
  names.reserve(lay.vertex_count());
  std::vector<SignedEdge> edges;
  edges.reserve(lay.edge_count());

  for (std::size_t i = 1; i <= inst.a.size(); ++i) {
    names.push_back("s" + std::to_string(i));
    for (std::size_t j = 1; j <= inst.a[i - 1]; ++j) {
      names.push_back("e" + std::to_string(i) + "_" + std::to_string(j));
      edges.push_back({lay.star_center(i), lay.leaf(i, j), Sign::positive});
    }
  }
  for (std::size_t l = 1; l <= inst.m; ++l) {
    names.push_back("t" + std::to_string(l));
    for (std::size_t l2 = l + 1; l2 <= inst.m; ++l2) {
      edges.push_back({lay.target(l), lay.target(l2), Sign::negative});
    }
    for (auto i = inst.B + 1; i <= lay.rows(); ++i) {
      edges.push_back({lay.target(l), lay.grid(i, 1), Sign::positive});
    }
  }
  for (std::uint64_t i = 1; i <= lay.rows(); ++i) {
    for (std::uint64_t j = 1; j <= params.p; ++j) {
      names.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
      const auto x = lay.grid(i, j);
      for (auto j2 = j + 1; j2 <= params.p; ++j2) {
        edges.push_back({x, lay.grid(i, j2), Sign::negative});
      }
      for (auto i2 = i + 1; i2 <= lay.rows(); ++i2) {
        edges.push_back({x, lay.grid(i2, j), Sign::positive});
      }
    }
  }
  if (params.connected) {
    for (std::size_t i = 1; i <= inst.a.size(); ++i) {
      edges.push_back({lay.grid(lay.rows(), 1), lay.star_center(i), Sign::positive});
    }
  }
  return Graph2EC(lay.vertex_count(), std::move(edges), std::move(names));
}

UnsignedGraph build_H_prime(const ThreePartitionInstance& inst, const ReductionParams& params,
                            const ReductionOptions& opts) {
  auto shrunk = opts;
  if (shrunk.max_vertices > 0) --shrunk.max_vertices;
  const auto h = build_H(inst, params, shrunk);
  return h.with_universal_vertex("z", Sign::positive).underlying();
}

std::uint64_t k_of(const ThreePartitionInstance& inst, const ReductionParams& params) {
  return inst.m + params.p * (inst.B + params.r + params.q);
}

std::uint64_t k_prime(const ThreePartitionInstance& inst, const ReductionParams& params) {
  return k_of(inst, params) + 1;
}

WitnessColoring witness_coloring(const ThreePartitionInstance& inst,
                                 const ReductionParams& params,
                                 const PartitionSolution& sol) {
  validate_solution(inst, sol);
  const GadgetLayout lay(inst, params);
  WitnessColoring out;
  std::vector<VertexId> image(lay.vertex_count());
  std::iota(image.begin(), image.end(), VertexId{0});

  for (std::size_t t = 0; t < sol.triples.size(); ++t) {
    auto stars = sol.triples[t];
    std::sort(stars.begin(), stars.end());
    const auto target = lay.target(t + 1);
    for (auto j : stars) {
      out.plan.steps.push_back({target, lay.star_center(j + 1), {}});
      image[lay.star_center(j + 1)] = target;
    }
    std::uint64_t row = 1;
    for (auto j : stars) {
      for (std::size_t leaf = 1; leaf <= inst.a[j]; ++leaf, ++row) {
        const auto x = lay.grid(row, 1);
        out.plan.steps.push_back({x, lay.leaf(j + 1, leaf), {}});
        image[lay.leaf(j + 1, leaf)] = x;
      }
    }
  }

  // Colour survivors by ascending id, matching apply_merge_plan's numbering.
  std::vector<std::uint32_t> colour_of_survivor(lay.vertex_count(), 0);
  std::uint32_t next = 0;
  for (VertexId v = 0; v < lay.vertex_count(); ++v) {
    if (image[v] == v) colour_of_survivor[v] = next++;
  }
  std::vector<std::uint32_t> colors(lay.vertex_count());
  for (VertexId v = 0; v < lay.vertex_count(); ++v) colors[v] = colour_of_survivor[image[v]];
  out.coloring = Coloring(std::move(colors));
  return out;
}

std::optional<PartitionSolution> brute_force_3partition(const ThreePartitionInstance& inst) {
  validate_instance(inst);
  if (inst.m > 3) fail(ErrorCode::size_guard, "brute-force 3-partition supports m <= 3");
  const auto n = inst.a.size();
  std::vector<bool> used(n, false);
  PartitionSolution sol;
  auto search = [&](auto&& self) -> bool {
    std::size_t first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) return true;
    used[first] = true;
    for (std::size_t j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (used[k] || inst.a[first] + inst.a[j] + inst.a[k] != inst.B) continue;
        used[k] = true;
        sol.triples.push_back({first, j, k});
        if (self(self)) return true;
        sol.triples.pop_back();
        used[k] = false;
      }
      used[j] = false;
    }
    used[first] = false;
    return false;
  };
  if (search(search)) return sol;
  return std::nullopt;
}

SignedClass apex_reduction(const UnsignedGraph& g) { return apex_extend(g.all_positive()); }

std::optional<Diamond> find_diamond(const Graph2EC& g, std::size_t max_vertices) {
  const auto n = g.vertex_count();
  if (n > max_vertices) {
    fail(ErrorCode::size_guard, "diamond check on " + std::to_string(n) +
                                    " vertices exceeds the limit of " +
                                    std::to_string(max_vertices));
  }
  std::vector<VertexId> common;
  for (const auto& e : g.edges()) {
    common.clear();
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
      if (i->vertex < j->vertex) {
        ++i;
      } else if (j->vertex < i->vertex) {
        ++j;
      } else {
        common.push_back(i->vertex);
        ++i;
        ++j;
      }
    }
    for (std::size_t x = 0; x < common.size(); ++x) {
      for (std::size_t y = x + 1; y < common.size(); ++y) {
        if (!g.adjacent(common[x], common[y])) {
          return Diamond{e.u, e.v, common[x], common[y]};
        }
      }
    }
  }
  return std::nullopt;
}

bool check_diamond_free(const Graph2EC& g, std::size_t max_vertices) {
  return !find_diamond(g, max_vertices).has_value();
}

namespace {

std::uint64_t parse_u64(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    fail(ErrorCode::parse, "line " + std::to_string(line) + ": expected an integer, got '" +
                               std::string(tok) + "'");
  }
  return v;
}

}  // namespace

ThreePartitionInstance parse_instance(std::string_view text) {
  ThreePartitionInstance inst;
  bool header = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const auto where = "line " + std::to_string(number) + ": ";
    if (!header) {
      if (tok[0] != "3p" || tok.size() != 3) fail(ErrorCode::parse, where + "expected '3p <m> <B>'");
      inst.m = parse_u64(tok[1], number);
      inst.B = parse_u64(tok[2], number);
      header = true;
    } else if (tok[0] == "a" && tok.size() == 2) {
      inst.a.push_back(parse_u64(tok[1], number));
    } else {
      fail(ErrorCode::parse, where + "expected 'a <value>'");
    }
  }
  if (!header) fail(ErrorCode::parse, "missing '3p <m> <B>' header");
  try {
    validate_instance(inst);
  } catch (const Error& e) {
    fail(ErrorCode::parse, e.what());
  }
  return inst;
}

std::string serialize_instance(const ThreePartitionInstance& inst) {
  std::ostringstream out;
  out << "3p " << inst.m << ' ' << inst.B << '\n';
  for (auto x : inst.a) out << "a " << x << '\n';
  return out.str();
}

ThreePartitionInstance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_text_file(path));
}

std::string describe_params(const ReductionParams& params) {
  return "q=" + std::to_string(params.q) + " r=" + std::to_string(params.r) +
         " p=" + std::to_string(params.p) +
         " connected=" + (params.connected ? "true" : "false");
}

}  // namespace sgach
