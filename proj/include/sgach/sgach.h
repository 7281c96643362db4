/* C interface to the sgach library: 2-edge-colored and signed graphs,
 * homomorphisms, cliques, achromatic and chromatic parameters, and the
 * 3-partition gadgets.
 *
 * Every fallible call returns an sgach_status; on failure the message is
 * available from sgach_last_error() on the same thread until the next call.
 * Handles are opaque, immutable once created, and released with their
 * matching *_free function. Strings returned through char** are released
 * with sgach_string_free. Vertex ids are 0-based.
 */
#ifndef SGACH_SGACH_H
#define SGACH_SGACH_H

#include <stddef.h>
#include <stdint.h>

#if defined(SGACH_BUILDING_LIBRARY)
#define SGACH_API __attribute__((visibility("default")))
#else
#define SGACH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sgach_status {
  SGACH_OK = 0,
  SGACH_E_INVALID_ARGUMENT = 1,
  SGACH_E_INVALID_GRAPH = 2,
  SGACH_E_PARSE = 3,
  SGACH_E_SIZE_GUARD = 4,
  SGACH_E_NOT_IDENTIFIABLE = 5,
  SGACH_E_INVALID_SOLUTION = 6,
  SGACH_E_IO = 7,
  SGACH_E_INTERNAL = 8
} sgach_status;

typedef enum sgach_mode { SGACH_MODE_2EC = 0, SGACH_MODE_SIGNED = 1 } sgach_mode;

typedef enum sgach_param {
  SGACH_PARAM_PSI = 0,
  SGACH_PARAM_PSI2,
  SGACH_PARAM_PSIS,
  SGACH_PARAM_PSI_MAX_CLASS,
  SGACH_PARAM_PSI_MIN_CLASS,
  SGACH_PARAM_PSI_MAX,
  SGACH_PARAM_PSI_MIN,
  SGACH_PARAM_PSI_MAX_SIGNED,
  SGACH_PARAM_PSI_MIN_SIGNED,
  SGACH_PARAM_CHI2,
  SGACH_PARAM_CHIS
} sgach_param;

typedef struct sgach_graph sgach_graph;
typedef struct sgach_coloring sgach_coloring;
typedef struct sgach_result sgach_result;
typedef struct sgach_instance sgach_instance;

SGACH_API const char* sgach_last_error(void);
SGACH_API const char* sgach_status_name(sgach_status status);
SGACH_API void sgach_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

/* negative[i] != 0 makes edge (us[i], vs[i]) negative. names may be NULL
 * for the default names v0..v(n-1). */
SGACH_API sgach_status sgach_graph_create(size_t n, const uint32_t* us, const uint32_t* vs,
                                          const int* negative, size_t edge_count,
                                          const char* const* names, sgach_graph** out);
SGACH_API sgach_status sgach_graph_parse(const char* text, sgach_graph** out);
SGACH_API sgach_status sgach_graph_load(const char* path, sgach_graph** out);
SGACH_API sgach_status sgach_graph_serialize(const sgach_graph* g, char** out);
/* comment may be NULL; otherwise it becomes a leading "# " line. */
SGACH_API sgach_status sgach_graph_save(const sgach_graph* g, const char* path,
                                        const char* comment);
SGACH_API void sgach_graph_free(sgach_graph* g);

SGACH_API size_t sgach_graph_vertex_count(const sgach_graph* g);
SGACH_API size_t sgach_graph_edge_count(const sgach_graph* g);
/* NULL for an out-of-range id. The pointer lives as long as the graph. */
SGACH_API const char* sgach_graph_vertex_name(const sgach_graph* g, uint32_t v);
SGACH_API sgach_status sgach_graph_find(const sgach_graph* g, const char* name, uint32_t* out);
/* Edges are ordered by (u, v) with u < v. */
SGACH_API sgach_status sgach_graph_edge(const sgach_graph* g, size_t index, uint32_t* u,
                                        uint32_t* v, int* negative);

SGACH_API sgach_status sgach_graph_resign(const sgach_graph* g, uint32_t v, sgach_graph** out);
SGACH_API sgach_status sgach_graph_switch(const sgach_graph* g, const uint32_t* members,
                                          size_t count, sgach_graph** out);
SGACH_API sgach_status sgach_graph_without_vertex(const sgach_graph* g, uint32_t v,
                                                  sgach_graph** out);
/* The canonical member of the switching class. */
SGACH_API sgach_status sgach_canonical_signature(const sgach_graph* g, sgach_graph** out);

/* *equivalent is set to 0 or 1. When equivalent and members is not NULL,
 * the switching set from g1 to g2 is written there (capacity: vertex count)
 * and its size to *count. */
SGACH_API sgach_status sgach_equivalence(const sgach_graph* g1, const sgach_graph* g2,
                                         int* equivalent, uint32_t* members, size_t* count);

/* ---- structure and cliques -------------------------------------------- */

/* For SGACH_MODE_SIGNED, *resign_u (if not NULL) is 1 when u must be
 * re-signed before the identification. */
SGACH_API sgach_status sgach_identifiable(const sgach_graph* g, sgach_mode mode, uint32_t u,
                                          uint32_t v, int* yes, int* resign_u);
SGACH_API sgach_status sgach_is_clique(const sgach_graph* g, sgach_mode mode, int* yes);
/* *found = 0 when every pair is non-identifiable (the graph is a clique). */
SGACH_API sgach_status sgach_find_identifiable_pair(const sgach_graph* g, sgach_mode mode,
                                                    int* found, uint32_t* u, uint32_t* v);
SGACH_API sgach_status sgach_twins(const sgach_graph* g, sgach_mode mode, uint32_t u,
                                   uint32_t v, int* yes);
/* class_of must hold vertex_count entries; classes are numbered by their
 * lowest member. */
SGACH_API sgach_status sgach_rc_classes(const sgach_graph* g, uint32_t* class_of,
                                        size_t* class_count);

/* ---- colourings -------------------------------------------------------- */

SGACH_API sgach_status sgach_coloring_parse(const char* text, const sgach_graph* g,
                                            sgach_coloring** out);
SGACH_API sgach_status sgach_coloring_load(const char* path, const sgach_graph* g,
                                           sgach_coloring** out);
SGACH_API sgach_status sgach_coloring_serialize(const sgach_coloring* c, const sgach_graph* g,
                                                char** out);
SGACH_API void sgach_coloring_free(sgach_coloring* c);
SGACH_API size_t sgach_coloring_color_count(const sgach_coloring* c);
/* 0-based colour of v through *color. */
SGACH_API sgach_status sgach_coloring_color(const sgach_coloring* c, uint32_t v,
                                            uint32_t* color);

/* Checks that the colouring is a homomorphism (the quotient is simple) and,
 * when complete != 0, that the quotient is a clique of the mode's kind. In
 * signed mode the colouring's switch line is applied first. On failure
 * *reason (if not NULL) receives an explanation. */
SGACH_API sgach_status sgach_verify_coloring(const sgach_graph* g, const sgach_coloring* c,
                                             sgach_mode mode, int complete, int* ok,
                                             char** reason);

/* ---- parameters -------------------------------------------------------- */

typedef struct sgach_solver_options {
  size_t max_vertices_2ec;
  size_t max_vertices_signed;
  size_t max_edges_graph;
  size_t max_edges_signed;
  unsigned threads;
} sgach_solver_options;

SGACH_API void sgach_solver_options_default(sgach_solver_options* opts);
/* Accepts psi, psi2, psis, psi-max-class, psi-min-class, psi-max, psi-min,
 * psi-max-signed, psi-min-signed, chi2, chis. */
SGACH_API sgach_status sgach_param_parse(const char* name, sgach_param* out);
SGACH_API const char* sgach_param_name(sgach_param p);
SGACH_API int sgach_param_is_signed(sgach_param p);

/* opts may be NULL for the defaults. */
SGACH_API sgach_status sgach_compute(const sgach_graph* g, sgach_param param,
                                     const sgach_solver_options* opts, sgach_result** out);
SGACH_API void sgach_result_free(sgach_result* r);
SGACH_API size_t sgach_result_value(const sgach_result* r);
/* Borrowed views, valid while the result lives. base is the searched
 * signature, colored is base after the witness switching, certificate the
 * quotient. */
SGACH_API const sgach_graph* sgach_result_base(const sgach_result* r);
SGACH_API const sgach_graph* sgach_result_colored(const sgach_result* r);
SGACH_API const sgach_graph* sgach_result_certificate(const sgach_result* r);
/* The witness colouring (with its switching for signed parameters), as a
 * colouring of base. */
SGACH_API sgach_status sgach_result_coloring(const sgach_result* r, sgach_coloring** out);
SGACH_API int sgach_result_certify(const sgach_result* r);

/* ---- reductions -------------------------------------------------------- */

SGACH_API sgach_status sgach_instance_parse(const char* text, sgach_instance** out);
SGACH_API sgach_status sgach_instance_load(const char* path, sgach_instance** out);
SGACH_API void sgach_instance_free(sgach_instance* inst);

typedef struct sgach_reduction_params {
  uint64_t q;
  uint64_t r;
  uint64_t p;
  int connected;
} sgach_reduction_params;

/* Defaults for the (normalized) instance. */
SGACH_API sgach_status sgach_default_params(const sgach_instance* inst, int connected,
                                            sgach_reduction_params* out);

/* Builds H(I) (prime == 0) or H'(I) (prime != 0) for the normalized
 * instance. params NULL selects the defaults for `connected`. *k receives
 * k(I) or k'(I); params_out, if not NULL, the parameters used.
 * max_vertices 0 keeps the default cap of 50000. */
SGACH_API sgach_status sgach_reduce3p(const sgach_instance* inst, int connected,
                                      const sgach_reduction_params* params, int prime,
                                      size_t max_vertices, sgach_graph** out, uint64_t* k,
                                      sgach_reduction_params* params_out);

/* Solves the normalized instance by exhaustive search (m <= 3) and returns
 * the witness colouring of H(I); *solvable = 0 leaves *out NULL. */
SGACH_API sgach_status sgach_reduce3p_witness(const sgach_instance* inst,
                                              const sgach_reduction_params* params,
                                              int* solvable, sgach_coloring** out);

/* *found = 1 and the four vertices (shared edge a b, then the non-adjacent
 * pair c d) when g has an induced diamond. */
SGACH_API sgach_status sgach_find_diamond(const sgach_graph* g, size_t max_vertices,
                                          int* found, uint32_t abcd[4]);

/* Underlying graph of g plus a universal vertex z, all edges positive. */
SGACH_API sgach_status sgach_reduce_apex(const sgach_graph* g, sgach_graph** out);

#ifdef __cplusplus
}
#endif

#endif
