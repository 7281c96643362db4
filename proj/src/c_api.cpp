#include "sgach/sgach.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "sgach/cliques.hpp"
#include "sgach/error.hpp"
#include "sgach/graph.hpp"
#include "sgach/graph_io.hpp"
#include "sgach/morphism.hpp"
#include "sgach/reduction.hpp"
#include "sgach/solvers.hpp"
#include "sgach/structure.hpp"
#include "sgach/switching.hpp"

struct sgach_graph {
  sgach::Graph2EC g;
};

struct sgach_coloring {
  sgach::Coloring c;
};

struct sgach_result {
  sgach::ParamResult r;
  sgach_graph base;
  sgach_graph colored;
  sgach_graph certificate;
};

struct sgach_instance {
  sgach::ThreePartitionInstance inst;
};

namespace {

thread_local std::string last_error;

sgach_status to_status(sgach::ErrorCode code) {
  using sgach::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return SGACH_E_INVALID_ARGUMENT;
    case ErrorCode::invalid_graph: return SGACH_E_INVALID_GRAPH;
    case ErrorCode::parse: return SGACH_E_PARSE;
    case ErrorCode::size_guard: return SGACH_E_SIZE_GUARD;
    case ErrorCode::not_identifiable: return SGACH_E_NOT_IDENTIFIABLE;
    case ErrorCode::invalid_solution: return SGACH_E_INVALID_SOLUTION;
    case ErrorCode::io: return SGACH_E_IO;
  }
  return SGACH_E_INTERNAL;
}

// Runs f, translating exceptions into a status plus last_error.
template <typename F>
sgach_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return SGACH_OK;
  } catch (const sgach::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return SGACH_E_INTERNAL;
}

void require(const void* p, const char* what) {
  if (p == nullptr) sgach::fail(sgach::ErrorCode::invalid_argument, std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sgach_graph* wrap(sgach::Graph2EC g) { return new sgach_graph{std::move(g)}; }

sgach::SolverOptions to_options(const sgach_solver_options* o) {
  sgach::SolverOptions opts;
  if (o != nullptr) {
    opts.max_vertices_2ec = o->max_vertices_2ec;
    opts.max_vertices_signed = o->max_vertices_signed;
    opts.max_edges_graph = o->max_edges_graph;
    opts.max_edges_signed = o->max_edges_signed;
    opts.threads = o->threads;
  }
  return opts;
}

sgach::ReductionParams from_c(const sgach_reduction_params& p) {
  return {p.q, p.r, p.p, p.connected != 0};
}

sgach_reduction_params to_c(const sgach::ReductionParams& p) {
  return {p.q, p.r, p.p, p.connected ? 1 : 0};
}

}  // namespace

extern "C" {

const char* sgach_last_error(void) { return last_error.c_str(); }

const char* sgach_status_name(sgach_status status) {
  switch (status) {
    case SGACH_OK: return "ok";
    case SGACH_E_INVALID_ARGUMENT: return "invalid argument";
    case SGACH_E_INVALID_GRAPH: return "invalid graph";
    case SGACH_E_PARSE: return "parse error";
    case SGACH_E_SIZE_GUARD: return "size guard exceeded";
    case SGACH_E_NOT_IDENTIFIABLE: return "not identifiable";
    case SGACH_E_INVALID_SOLUTION: return "invalid solution";
    case SGACH_E_IO: return "i/o error";
    case SGACH_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sgach_string_free(char* s) { std::free(s); }

sgach_status sgach_graph_create(size_t n, const uint32_t* us, const uint32_t* vs,
                                const int* negative, size_t edge_count,
                                const char* const* names, sgach_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (edge_count > 0) {
      require(us, "us");
      require(vs, "vs");
    }
    std::vector<sgach::SignedEdge> edges;
    for (size_t i = 0; i < edge_count; ++i) {
      const bool neg = negative != nullptr && negative[i] != 0;
      edges.push_back({us[i], vs[i], neg ? sgach::Sign::negative : sgach::Sign::positive});
    }
    std::vector<std::string> labels;
    if (names != nullptr) {
      for (size_t v = 0; v < n; ++v) {
        require(names[v], "vertex name");
        labels.emplace_back(names[v]);
      }
    }
    *out = wrap(sgach::Graph2EC(n, std::move(edges), std::move(labels)));
  });
}

sgach_status sgach_graph_parse(const char* text, sgach_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(sgach::parse_graph(text));
  });
}

sgach_status sgach_graph_load(const char* path, sgach_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = wrap(sgach::load_graph(path));
  });
}

sgach_status sgach_graph_serialize(const sgach_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_string(sgach::serialize_graph(g->g));
  });
}

sgach_status sgach_graph_save(const sgach_graph* g, const char* path, const char* comment) {
  return guarded([&] {
    require(g, "graph");
    require(path, "path");
    std::vector<std::string> comments;
    if (comment != nullptr) comments.emplace_back(comment);
    sgach::save_graph(path, g->g, comments);
  });
}

void sgach_graph_free(sgach_graph* g) { delete g; }

size_t sgach_graph_vertex_count(const sgach_graph* g) { return g ? g->g.vertex_count() : 0; }

size_t sgach_graph_edge_count(const sgach_graph* g) { return g ? g->g.edge_count() : 0; }

const char* sgach_graph_vertex_name(const sgach_graph* g, uint32_t v) {
  if (g == nullptr || !g->g.contains(v)) return nullptr;
  return g->g.name(v).c_str();
}

sgach_status sgach_graph_find(const sgach_graph* g, const char* name, uint32_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(name, "name");
    require(out, "out");
    auto v = g->g.find(name);
    if (!v) sgach::fail(sgach::ErrorCode::invalid_argument, std::string("unknown vertex '") + name + "'");
    *out = *v;
  });
}

sgach_status sgach_graph_edge(const sgach_graph* g, size_t index, uint32_t* u, uint32_t* v,
                              int* negative) {
  return guarded([&] {
    require(g, "graph");
    if (index >= g->g.edge_count()) {
      sgach::fail(sgach::ErrorCode::invalid_argument, "edge index out of range");
    }
    const auto& e = g->g.edges()[index];
    if (u) *u = e.u;
    if (v) *v = e.v;
    if (negative) *negative = sgach::is_negative(e.sign) ? 1 : 0;
  });
}

sgach_status sgach_graph_resign(const sgach_graph* g, uint32_t v, sgach_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = wrap(sgach::resign_at(g->g, v));
  });
}

sgach_status sgach_graph_switch(const sgach_graph* g, const uint32_t* members, size_t count,
                                sgach_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (count > 0) require(members, "members");
    std::vector<sgach::VertexId> set(members, members + count);
    *out = wrap(sgach::apply_switching(g->g, sgach::SwitchingSet(std::move(set))));
  });
}

sgach_status sgach_graph_without_vertex(const sgach_graph* g, uint32_t v, sgach_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = wrap(g->g.without_vertex(v));
  });
}

sgach_status sgach_canonical_signature(const sgach_graph* g, sgach_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = wrap(sgach::canonical_signature(g->g).first);
  });
}

sgach_status sgach_equivalence(const sgach_graph* g1, const sgach_graph* g2, int* equivalent,
                               uint32_t* members, size_t* count) {
  return guarded([&] {
    require(g1, "g1");
    require(g2, "g2");
    require(equivalent, "equivalent");
    auto w = sgach::equivalence_witness(g1->g, g2->g);
    *equivalent = w ? 1 : 0;
    if (w && members != nullptr) {
      std::copy(w->members().begin(), w->members().end(), members);
    }
    if (count != nullptr) *count = w ? w->size() : 0;
  });
}

sgach_status sgach_identifiable(const sgach_graph* g, sgach_mode mode, uint32_t u, uint32_t v,
                                int* yes, int* resign_u) {
  return guarded([&] {
    require(g, "graph");
    require(yes, "yes");
    if (resign_u) *resign_u = 0;
    if (mode == SGACH_MODE_2EC) {
      *yes = sgach::identifiable_2ec(g->g, u, v) ? 1 : 0;
    } else {
      auto s = sgach::identifiable_signed(sgach::SignedClass(g->g), u, v);
      *yes = s ? 1 : 0;
      if (s && resign_u) *resign_u = s->empty() ? 0 : 1;
    }
  });
}

sgach_status sgach_is_clique(const sgach_graph* g, sgach_mode mode, int* yes) {
  return guarded([&] {
    require(g, "graph");
    require(yes, "yes");
    *yes = (mode == SGACH_MODE_2EC ? sgach::is_2ec_clique(g->g)
                                   : sgach::is_signed_clique(sgach::SignedClass(g->g)))
               ? 1
               : 0;
  });
}

sgach_status sgach_find_identifiable_pair(const sgach_graph* g, sgach_mode mode, int* found,
                                          uint32_t* u, uint32_t* v) {
  return guarded([&] {
    require(g, "graph");
    require(found, "found");
    auto pair = mode == SGACH_MODE_2EC
                    ? sgach::find_identifiable_pair_2ec(g->g)
                    : sgach::find_identifiable_pair_signed(sgach::SignedClass(g->g));
    *found = pair ? 1 : 0;
    if (pair) {
      if (u) *u = pair->first;
      if (v) *v = pair->second;
    }
  });
}

sgach_status sgach_twins(const sgach_graph* g, sgach_mode mode, uint32_t u, uint32_t v,
                         int* yes) {
  return guarded([&] {
    require(g, "graph");
    require(yes, "yes");
    *yes = (mode == SGACH_MODE_2EC ? sgach::twins_2ec(g->g, u, v)
                                   : sgach::twins_signed(sgach::SignedClass(g->g), u, v))
               ? 1
               : 0;
  });
}

sgach_status sgach_rc_classes(const sgach_graph* g, uint32_t* class_of, size_t* class_count) {
  return guarded([&] {
    require(g, "graph");
    require(class_of, "class_of");
    const auto classes = sgach::rc_classes(g->g.underlying());
    for (size_t c = 0; c < classes.size(); ++c) {
      for (auto v : classes[c]) class_of[v] = static_cast<uint32_t>(c);
    }
    if (class_count) *class_count = classes.size();
  });
}

sgach_status sgach_coloring_parse(const char* text, const sgach_graph* g, sgach_coloring** out) {
  return guarded([&] {
    require(text, "text");
    require(g, "graph");
    require(out, "out");
    *out = new sgach_coloring{sgach::parse_coloring(text, g->g)};
  });
}

sgach_status sgach_coloring_load(const char* path, const sgach_graph* g, sgach_coloring** out) {
  return guarded([&] {
    require(path, "path");
    require(g, "graph");
    require(out, "out");
    *out = new sgach_coloring{sgach::load_coloring(path, g->g)};
  });
}

sgach_status sgach_coloring_serialize(const sgach_coloring* c, const sgach_graph* g, char** out) {
  return guarded([&] {
    require(c, "colouring");
    require(g, "graph");
    require(out, "out");
    *out = copy_string(sgach::serialize_coloring(c->c, g->g));
  });
}

void sgach_coloring_free(sgach_coloring* c) { delete c; }

size_t sgach_coloring_color_count(const sgach_coloring* c) { return c ? c->c.color_count() : 0; }

sgach_status sgach_coloring_color(const sgach_coloring* c, uint32_t v, uint32_t* color) {
  return guarded([&] {
    require(c, "colouring");
    require(color, "color");
    if (v >= c->c.vertex_count()) sgach::fail(sgach::ErrorCode::invalid_argument, "vertex out of range");
    *color = c->c[v];
  });
}

sgach_status sgach_verify_coloring(const sgach_graph* g, const sgach_coloring* c,
                                   sgach_mode mode, int complete, int* ok, char** reason) {
  return guarded([&] {
    require(g, "graph");
    require(c, "colouring");
    require(ok, "ok");
    if (reason) *reason = nullptr;
    if (c->c.vertex_count() != g->g.vertex_count()) {
      sgach::fail(sgach::ErrorCode::invalid_argument, "colouring size does not match the graph");
    }
    const bool is_signed = mode == SGACH_MODE_SIGNED;
    const auto& colored = is_signed && c->c.switching()
                              ? sgach::apply_switching(g->g, *c->c.switching())
                              : g->g;
    auto q = sgach::quotient(colored, c->c);
    std::string why;
    if (!q.graph) {
      why = sgach::describe(colored, *q.violation);
    } else if (complete) {
      auto pair = is_signed
                      ? sgach::find_identifiable_pair_signed(sgach::SignedClass(*q.graph))
                      : sgach::find_identifiable_pair_2ec(*q.graph);
      if (pair) {
        why = "colours " + std::to_string(pair->first + 1) + " and " +
              std::to_string(pair->second + 1) + " are identifiable in the quotient";
      }
    }
    *ok = why.empty() ? 1 : 0;
    if (reason && !why.empty()) *reason = copy_string(why);
  });
}

void sgach_solver_options_default(sgach_solver_options* opts) {
  if (opts == nullptr) return;
  const sgach::SolverOptions d;
  opts->max_vertices_2ec = d.max_vertices_2ec;
  opts->max_vertices_signed = d.max_vertices_signed;
  opts->max_edges_graph = d.max_edges_graph;
  opts->max_edges_signed = d.max_edges_signed;
  opts->threads = d.threads;
}

sgach_status sgach_param_parse(const char* name, sgach_param* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    auto p = sgach::parse_param(name);
    if (!p) sgach::fail(sgach::ErrorCode::invalid_argument, std::string("unknown parameter '") + name + "'");
    *out = static_cast<sgach_param>(*p);
  });
}

const char* sgach_param_name(sgach_param p) {
  if (p < SGACH_PARAM_PSI || p > SGACH_PARAM_CHIS) return nullptr;
  return sgach::param_name(static_cast<sgach::Param>(p)).data();
}

int sgach_param_is_signed(sgach_param p) {
  return sgach::is_signed_param(static_cast<sgach::Param>(p)) ? 1 : 0;
}

sgach_status sgach_compute(const sgach_graph* g, sgach_param param,
                           const sgach_solver_options* opts, sgach_result** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (param < SGACH_PARAM_PSI || param > SGACH_PARAM_CHIS) {
      sgach::fail(sgach::ErrorCode::invalid_argument, "unknown parameter");
    }
    auto r = sgach::compute(static_cast<sgach::Param>(param), g->g, to_options(opts));
    auto res = std::make_unique<sgach_result>();
    res->base.g = r.base;
    res->colored.g = r.colored;
    res->certificate.g = r.certificate;
    res->r = std::move(r);
    *out = res.release();
  });
}

void sgach_result_free(sgach_result* r) { delete r; }

size_t sgach_result_value(const sgach_result* r) { return r ? r->r.value : 0; }

const sgach_graph* sgach_result_base(const sgach_result* r) { return r ? &r->base : nullptr; }

const sgach_graph* sgach_result_colored(const sgach_result* r) {
  return r ? &r->colored : nullptr;
}

const sgach_graph* sgach_result_certificate(const sgach_result* r) {
  return r ? &r->certificate : nullptr;
}

sgach_status sgach_result_coloring(const sgach_result* r, sgach_coloring** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    auto col = r->r.coloring;
    if (sgach::is_signed_param(r->r.param) || r->r.switching) {
      col = col.with_switching(r->r.switching.value_or(sgach::SwitchingSet{}));
    }
    *out = new sgach_coloring{std::move(col)};
  });
}

int sgach_result_certify(const sgach_result* r) {
  if (r == nullptr) return 0;
  try {
    return sgach::certify(r->r) ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

sgach_status sgach_instance_parse(const char* text, sgach_instance** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new sgach_instance{sgach::parse_instance(text)};
  });
}

sgach_status sgach_instance_load(const char* path, sgach_instance** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new sgach_instance{sgach::load_instance(path)};
  });
}

void sgach_instance_free(sgach_instance* inst) { delete inst; }

sgach_status sgach_default_params(const sgach_instance* inst, int connected,
                                  sgach_reduction_params* out) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    *out = to_c(sgach::default_params(sgach::normalize_instance(inst->inst), connected != 0));
  });
}

sgach_status sgach_reduce3p(const sgach_instance* inst, int connected,
                            const sgach_reduction_params* params, int prime,
                            size_t max_vertices, sgach_graph** out, uint64_t* k,
                            sgach_reduction_params* params_out) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    const auto norm = sgach::normalize_instance(inst->inst);
    auto p = params ? from_c(*params) : sgach::default_params(norm, connected != 0);
    p.connected = connected != 0;
    sgach::ReductionOptions opts;
    if (max_vertices > 0) opts.max_vertices = max_vertices;
    if (prime) {
      *out = wrap(sgach::build_H_prime(norm, p, opts).all_positive());
    } else {
      *out = wrap(sgach::build_H(norm, p, opts));
    }
    if (k) *k = prime ? sgach::k_prime(norm, p) : sgach::k_of(norm, p);
    if (params_out) *params_out = to_c(p);
  });
}

sgach_status sgach_reduce3p_witness(const sgach_instance* inst,
                                    const sgach_reduction_params* params, int* solvable,
                                    sgach_coloring** out) {
  return guarded([&] {
    require(inst, "instance");
    require(params, "params");
    require(solvable, "solvable");
    require(out, "out");
    *out = nullptr;
    const auto norm = sgach::normalize_instance(inst->inst);
    auto sol = sgach::brute_force_3partition(norm);
    *solvable = sol ? 1 : 0;
    if (sol) *out = new sgach_coloring{sgach::witness_coloring(norm, from_c(*params), *sol).coloring};
  });
}

sgach_status sgach_find_diamond(const sgach_graph* g, size_t max_vertices, int* found,
                                uint32_t abcd[4]) {
  return guarded([&] {
    require(g, "graph");
    require(found, "found");
    auto d = max_vertices > 0 ? sgach::find_diamond(g->g, max_vertices)
                              : sgach::find_diamond(g->g);
    *found = d ? 1 : 0;
    if (d && abcd) {
      abcd[0] = d->a;
      abcd[1] = d->b;
      abcd[2] = d->c;
      abcd[3] = d->d;
    }
  });
}

sgach_status sgach_reduce_apex(const sgach_graph* g, sgach_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = wrap(sgach::apex_reduction(g->g.underlying()).representative());
  });
}

}  // extern "C"
