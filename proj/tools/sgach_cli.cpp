// sgach: command-line front end over the C interface.
//
// Exit codes: 0 yes/success, 1 no, 2 usage, 3 size guard, 4 malformed input.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgach/sgach.h"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kGuard = 3;
constexpr int kMalformed = 4;

struct Failure {
  int code;
};

int exit_code_for(sgach_status s) {
  switch (s) {
    case SGACH_OK: return kYes;
    case SGACH_E_SIZE_GUARD: return kGuard;
    default: return kMalformed;
  }
}

void check(sgach_status s) {
  if (s == SGACH_OK) return;
  std::cerr << "error: " << sgach_last_error() << '\n';
  throw Failure{exit_code_for(s)};
}

struct GraphDeleter {
  void operator()(sgach_graph* g) const { sgach_graph_free(g); }
};
struct ColoringDeleter {
  void operator()(sgach_coloring* c) const { sgach_coloring_free(c); }
};
struct ResultDeleter {
  void operator()(sgach_result* r) const { sgach_result_free(r); }
};
struct InstanceDeleter {
  void operator()(sgach_instance* i) const { sgach_instance_free(i); }
};
using GraphPtr = std::unique_ptr<sgach_graph, GraphDeleter>;
using ColoringPtr = std::unique_ptr<sgach_coloring, ColoringDeleter>;
using ResultPtr = std::unique_ptr<sgach_result, ResultDeleter>;
using InstancePtr = std::unique_ptr<sgach_instance, InstanceDeleter>;

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { sgach_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

GraphPtr load_graph(const std::string& path) {
  sgach_graph* g = nullptr;
  check(sgach_graph_load(path.c_str(), &g));
  return GraphPtr(g);
}

ColoringPtr load_coloring(const std::string& path, const sgach_graph* g) {
  sgach_coloring* c = nullptr;
  check(sgach_coloring_load(path.c_str(), g, &c));
  return ColoringPtr(c);
}

uint32_t vertex(const sgach_graph* g, const std::string& name) {
  uint32_t v = 0;
  check(sgach_graph_find(g, name.c_str(), &v));
  return v;
}

std::string name(const sgach_graph* g, uint32_t v) { return sgach_graph_vertex_name(g, v); }

sgach_mode parse_mode(const std::string& mode) {
  return mode == "signed" ? SGACH_MODE_SIGNED : SGACH_MODE_2EC;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void write_file(const std::string& path, const std::string& text) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (f == nullptr) {
    std::cerr << "error: cannot write " << path << '\n';
    throw Failure{kMalformed};
  }
  const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
  if (std::fclose(f) != 0 || !ok) {
    std::cerr << "error: write failed for " << path << '\n';
    throw Failure{kMalformed};
  }
}

bool same_graph(const sgach_graph* a, const sgach_graph* b) {
  OwnedString x, y;
  check(sgach_graph_serialize(a, &x.s));
  check(sgach_graph_serialize(b, &y.s));
  return x.str() == y.str();
}

std::optional<std::size_t> env_max_n() {
  const char* raw = std::getenv("SGACH_MAX_N");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const auto value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    std::cerr << "error: SGACH_MAX_N must be a positive integer\n";
    throw Failure{kUsage};
  }
  return static_cast<std::size_t>(value);
}

struct ComputeArgs {
  std::string param;
  std::string graph;
  std::string witness;
  std::string witness_graph;
  unsigned threads = 1;
};

int run_compute(const ComputeArgs& a) {
  sgach_param param;
  if (sgach_param_parse(a.param.c_str(), &param) != SGACH_OK) {
    std::cerr << "error: " << sgach_last_error() << '\n';
    return kUsage;
  }
  auto g = load_graph(a.graph);
  sgach_solver_options opts;
  sgach_solver_options_default(&opts);
  opts.threads = a.threads;
  if (auto n = env_max_n()) opts.max_vertices_2ec = opts.max_vertices_signed = *n;

  sgach_result* raw = nullptr;
  check(sgach_compute(g.get(), param, &opts, &raw));
  ResultPtr r(raw);

  const bool is_signed = sgach_param_is_signed(param) != 0;
  // Signed witnesses colour `base` through a switch line; 2ec witnesses
  // colour the already switched graph directly.
  const sgach_graph* colored_graph =
      is_signed ? sgach_result_base(r.get()) : sgach_result_colored(r.get());

  std::cout << "param: " << sgach_param_name(param) << '\n';
  std::cout << "value: " << sgach_result_value(r.get()) << '\n';
  std::cout << "certified: " << yes_no(sgach_result_certify(r.get()) != 0) << '\n';
  if (!a.witness.empty()) {
    sgach_coloring* c = nullptr;
    check(sgach_result_coloring(r.get(), &c));
    ColoringPtr col(c);
    std::string text;
    if (is_signed) {
      OwnedString serialized;
      check(sgach_coloring_serialize(col.get(), colored_graph, &serialized.s));
      text = serialized.str();
    } else {
      // No switch line: the colouring is of the already switched graph.
      std::ostringstream plain;
      for (uint32_t v = 0; v < sgach_graph_vertex_count(colored_graph); ++v) {
        uint32_t colour = 0;
        check(sgach_coloring_color(col.get(), v, &colour));
        plain << "c " << name(colored_graph, v) << ' ' << colour + 1 << '\n';
      }
      text = plain.str();
    }
    write_file(a.witness, text);
    std::cout << "witness-file: " << a.witness << '\n';
    if (!same_graph(colored_graph, g.get())) {
      const auto path = a.witness_graph.empty() ? a.witness + ".sg" : a.witness_graph;
      check(sgach_graph_save(colored_graph, path.c_str(), nullptr));
      std::cout << "witness-graph: " << path << '\n';
    }
    std::cout << "verify-mode: " << (is_signed ? "signed" : "2ec") << '\n';
    const bool chromatic = param == SGACH_PARAM_CHI2 || param == SGACH_PARAM_CHIS;
    std::cout << "verify-complete: " << yes_no(!chromatic) << '\n';
  }
  return kYes;
}

int run_equiv(const std::string& p1, const std::string& p2) {
  auto g1 = load_graph(p1);
  auto g2 = load_graph(p2);
  std::vector<uint32_t> members(sgach_graph_vertex_count(g1.get()));
  int equivalent = 0;
  size_t count = 0;
  const auto s = sgach_equivalence(g1.get(), g2.get(), &equivalent, members.data(), &count);
  if (s == SGACH_E_INVALID_ARGUMENT) {
    std::cout << "equivalent: no\n";
    std::cout << "reason: " << sgach_last_error() << '\n';
    return kNo;
  }
  check(s);
  std::cout << "equivalent: " << yes_no(equivalent) << '\n';
  if (equivalent) {
    std::cout << "switching:";
    for (size_t i = 0; i < count; ++i) std::cout << ' ' << name(g1.get(), members[i]);
    std::cout << '\n';
  }
  return equivalent ? kYes : kNo;
}

int run_clique(const std::string& mode, const std::string& path) {
  auto g = load_graph(path);
  int found = 0;
  uint32_t u = 0, v = 0;
  check(sgach_find_identifiable_pair(g.get(), parse_mode(mode), &found, &u, &v));
  std::cout << "clique: " << yes_no(!found) << '\n';
  if (found) std::cout << "identifiable-pair: " << name(g.get(), u) << ' ' << name(g.get(), v) << '\n';
  return found ? kNo : kYes;
}

int run_identifiable(const std::string& mode, const std::string& path, const std::string& a,
                     const std::string& b) {
  auto g = load_graph(path);
  const auto u = vertex(g.get(), a);
  const auto v = vertex(g.get(), b);
  int yes = 0, resign = 0;
  check(sgach_identifiable(g.get(), parse_mode(mode), u, v, &yes, &resign));
  std::cout << "identifiable: " << yes_no(yes) << '\n';
  if (yes && parse_mode(mode) == SGACH_MODE_SIGNED) {
    std::cout << "resign:" << (resign ? " " + a : std::string()) << '\n';
  }
  return yes ? kYes : kNo;
}

int run_verify(const std::string& mode, bool complete, const std::string& gpath,
               const std::string& cpath) {
  auto g = load_graph(gpath);
  auto c = load_coloring(cpath, g.get());
  int valid = 0;
  OwnedString reason;
  check(sgach_verify_coloring(g.get(), c.get(), parse_mode(mode), 0, &valid, &reason.s));
  std::cout << "colors: " << sgach_coloring_color_count(c.get()) << '\n';
  std::cout << "valid: " << yes_no(valid) << '\n';
  if (!valid) {
    std::cout << "reason: " << reason.str() << '\n';
    return kNo;
  }
  if (complete) {
    int ok = 0;
    OwnedString why;
    check(sgach_verify_coloring(g.get(), c.get(), parse_mode(mode), 1, &ok, &why.s));
    std::cout << "complete: " << yes_no(ok) << '\n';
    if (!ok) {
      std::cout << "reason: " << why.str() << '\n';
      return kNo;
    }
  }
  return kYes;
}

std::optional<sgach_reduction_params> parse_override(const std::string& text) {
  sgach_reduction_params p{};
  unsigned long long q = 0, r = 0, pp = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%llu,%llu,%llu%c", &q, &r, &pp, &tail) != 3) return std::nullopt;
  p.q = q;
  p.r = r;
  p.p = pp;
  return p;
}

struct Reduce3pArgs {
  std::string instance;
  std::string out;
  std::string override_params;
  std::string witness;
  bool connected = false;
  bool prime = false;
};

int run_reduce3p(const Reduce3pArgs& a) {
  std::optional<sgach_reduction_params> override;
  if (!a.override_params.empty()) {
    override = parse_override(a.override_params);
    if (!override) {
      std::cerr << "error: --override-params expects q,r,p\n";
      return kUsage;
    }
    override->connected = a.connected;
  }
  sgach_instance* raw = nullptr;
  check(sgach_instance_load(a.instance.c_str(), &raw));
  InstancePtr inst(raw);

  const std::size_t cap = env_max_n().value_or(0);
  sgach_graph* gadget = nullptr;
  uint64_t k = 0;
  sgach_reduction_params used{};
  check(sgach_reduce3p(inst.get(), a.connected, override ? &*override : nullptr, a.prime, cap,
                       &gadget, &k, &used));
  GraphPtr g(gadget);
  std::ostringstream params;
  params << "q=" << used.q << " r=" << used.r << " p=" << used.p
         << " connected=" << (used.connected ? "true" : "false");
  check(sgach_graph_save(g.get(), a.out.c_str(), params.str().c_str()));

  std::cout << "gadget: " << (a.prime ? "H'" : "H") << '\n';
  std::cout << "params: " << params.str() << '\n';
  std::cout << "vertices: " << sgach_graph_vertex_count(g.get()) << '\n';
  std::cout << "edges: " << sgach_graph_edge_count(g.get()) << '\n';
  std::cout << "k: " << k << '\n';
  std::cout << "out: " << a.out << '\n';
  if (!a.witness.empty()) {
    if (a.prime) {
      std::cerr << "error: --witness applies to H, not H'\n";
      return kUsage;
    }
    int solvable = 0;
    sgach_coloring* c = nullptr;
    check(sgach_reduce3p_witness(inst.get(), &used, &solvable, &c));
    ColoringPtr col(c);
    std::cout << "solvable: " << yes_no(solvable) << '\n';
    if (!solvable) return kNo;
    OwnedString text;
    check(sgach_coloring_serialize(col.get(), g.get(), &text.s));
    write_file(a.witness, text.str());
    std::cout << "witness-file: " << a.witness << '\n';
    std::cout << "witness-colors: " << sgach_coloring_color_count(col.get()) << '\n';
  }
  return kYes;
}

int run_reduce_apex(const std::string& path, const std::string& out) {
  auto g = load_graph(path);
  sgach_graph* raw = nullptr;
  check(sgach_reduce_apex(g.get(), &raw));
  GraphPtr h(raw);
  check(sgach_graph_save(h.get(), out.c_str(), "apex of the underlying graph, all edges positive"));
  const auto n = sgach_graph_vertex_count(h.get());
  std::cout << "apex: " << name(h.get(), static_cast<uint32_t>(n - 1)) << '\n';
  std::cout << "vertices: " << n << '\n';
  std::cout << "edges: " << sgach_graph_edge_count(h.get()) << '\n';
  std::cout << "out: " << out << '\n';
  return kYes;
}

int run_twins(const std::string& path) {
  auto g = load_graph(path);
  const auto n = static_cast<uint32_t>(sgach_graph_vertex_count(g.get()));
  for (uint32_t u = 0; u < n; ++u) {
    for (uint32_t v = u + 1; v < n; ++v) {
      int twin2 = 0, twins = 0;
      check(sgach_twins(g.get(), SGACH_MODE_2EC, u, v, &twin2));
      check(sgach_twins(g.get(), SGACH_MODE_SIGNED, u, v, &twins));
      if (twin2) std::cout << "twins-2ec: " << name(g.get(), u) << ' ' << name(g.get(), v) << '\n';
      if (twins) std::cout << "twins-signed: " << name(g.get(), u) << ' ' << name(g.get(), v) << '\n';
    }
  }
  std::vector<uint32_t> class_of(n);
  size_t count = 0;
  check(sgach_rc_classes(g.get(), class_of.data(), &count));
  std::cout << "rc-classes: " << count << '\n';
  for (size_t c = 0; c < count; ++c) {
    std::cout << "rc-class:";
    for (uint32_t v = 0; v < n; ++v) {
      if (class_of[v] == c) std::cout << ' ' << name(g.get(), v);
    }
    std::cout << '\n';
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sgach: 2-edge-colored and signed graph toolkit"};
  app.require_subcommand(1);
  const std::vector<std::string> modes{"2ec", "signed"};

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute an achromatic or chromatic parameter");
  c->add_option("--param", compute.param,
                "psi|psi2|psis|psi-max-class|psi-min-class|psi-max|psi-min|"
                "psi-max-signed|psi-min-signed|chi2|chis")
      ->required();
  c->add_option("--witness", compute.witness, "Write the witness colouring here");
  c->add_option("--witness-graph", compute.witness_graph,
                "Where to write the coloured graph when it differs from the input");
  c->add_option("--threads", compute.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  c->add_option("graph", compute.graph)->required();

  std::string g1, g2;
  auto* eq = app.add_subcommand("equiv", "Switching equivalence of two signatures");
  eq->add_option("g1", g1)->required();
  eq->add_option("g2", g2)->required();

  std::string mode = "2ec", graph;
  auto* cl = app.add_subcommand("clique", "Is the graph a clique");
  cl->add_option("--mode", mode)->check(CLI::IsMember(modes));
  cl->add_option("graph", graph)->required();

  std::string u, v;
  auto* id = app.add_subcommand("identifiable", "Can two vertices be identified");
  id->add_option("--mode", mode)->check(CLI::IsMember(modes));
  id->add_option("graph", graph)->required();
  id->add_option("u", u)->required();
  id->add_option("v", v)->required();

  std::string coloring;
  bool complete = false;
  auto* vc = app.add_subcommand("verify-coloring", "Check a colouring");
  vc->add_option("--mode", mode)->check(CLI::IsMember(modes));
  vc->add_flag("--complete", complete, "Also require a complete colouring");
  vc->add_option("graph", graph)->required();
  vc->add_option("coloring", coloring)->required();

  Reduce3pArgs r3;
  auto* rp = app.add_subcommand("reduce3p", "Build the 3-partition gadget");
  rp->add_flag("--connected", r3.connected);
  rp->add_flag("--prime", r3.prime, "Emit H' (apex added, unsigned) instead of H");
  rp->add_option("--override-params", r3.override_params, "q,r,p");
  rp->add_option("--witness", r3.witness, "Solve the instance and write the witness colouring");
  rp->add_option("--out", r3.out)->required();
  rp->add_option("instance", r3.instance)->required();

  std::string apex_out;
  auto* ra = app.add_subcommand("reduce-apex", "Add a positive universal vertex");
  ra->add_option("--out", apex_out)->required();
  ra->add_option("graph", graph)->required();

  auto* tw = app.add_subcommand("twins", "List twin pairs and r.c. classes");
  tw->add_option("graph", graph)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (c->parsed()) return run_compute(compute);
    if (eq->parsed()) return run_equiv(g1, g2);
    if (cl->parsed()) return run_clique(mode, graph);
    if (id->parsed()) return run_identifiable(mode, graph, u, v);
    if (vc->parsed()) return run_verify(mode, complete, graph, coloring);
    if (rp->parsed()) return run_reduce3p(r3);
    if (ra->parsed()) return run_reduce_apex(graph, apex_out);
    if (tw->parsed()) return run_twins(graph);
  } catch (const Failure& f) {
    return f.code;
  }
  return kUsage;
}
