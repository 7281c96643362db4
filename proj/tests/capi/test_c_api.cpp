#include <gtest/gtest.h>

#include <cstring>
#include <memory>
#include <string>

#include "sgach/sgach.h"

namespace {

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
using Graph = std::unique_ptr<sgach_graph, GraphDeleter>;
using Col = std::unique_ptr<sgach_coloring, ColoringDeleter>;
using Result = std::unique_ptr<sgach_result, ResultDeleter>;
using Instance = std::unique_ptr<sgach_instance, InstanceDeleter>;

constexpr const char* kHexagon =
    "signed 6\nv a\nv b\nv c\nv d\nv e\nv f\n"
    "e f a -\ne a b +\ne b c +\ne c d -\ne d e +\ne e a +\n";
constexpr const char* kUc4 = "signed 4\ne v0 v1 +\ne v1 v2 +\ne v2 v3 +\ne v3 v0 -\n";

Graph parse(const char* text) {
  sgach_graph* g = nullptr;
  EXPECT_EQ(sgach_graph_parse(text, &g), SGACH_OK) << sgach_last_error();
  return Graph(g);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  sgach_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, CreateAndInspect) {
  const uint32_t us[] = {0, 1};
  const uint32_t vs[] = {1, 2};
  const int neg[] = {1, 0};
  const char* names[] = {"a", "b", "c"};
  sgach_graph* raw = nullptr;
  ASSERT_EQ(sgach_graph_create(3, us, vs, neg, 2, names, &raw), SGACH_OK);
  Graph g(raw);
  EXPECT_EQ(sgach_graph_vertex_count(g.get()), 3u);
  EXPECT_EQ(sgach_graph_edge_count(g.get()), 2u);
  EXPECT_STREQ(sgach_graph_vertex_name(g.get(), 2), "c");
  EXPECT_EQ(sgach_graph_vertex_name(g.get(), 3), nullptr);
  uint32_t id = 0;
  ASSERT_EQ(sgach_graph_find(g.get(), "b", &id), SGACH_OK);
  EXPECT_EQ(id, 1u);
  EXPECT_EQ(sgach_graph_find(g.get(), "q", &id), SGACH_E_INVALID_ARGUMENT);
  uint32_t u = 0, v = 0;
  int negative = 0;
  ASSERT_EQ(sgach_graph_edge(g.get(), 0, &u, &v, &negative), SGACH_OK);
  EXPECT_EQ(negative, 1);
  EXPECT_EQ(sgach_graph_edge(g.get(), 2, &u, &v, &negative), SGACH_E_INVALID_ARGUMENT);
  EXPECT_EQ(take([&] {
              char* s = nullptr;
              sgach_graph_serialize(g.get(), &s);
              return s;
            }()),
            "signed 3\nv a\nv b\nv c\ne a b -\ne b c +\n");
}

TEST(CApi, ErrorsCarryStatusAndMessage) {
  sgach_graph* g = nullptr;
  EXPECT_EQ(sgach_graph_parse("signed 2\ne v0 v1 +\ne v0 v1 -\n", &g), SGACH_E_PARSE);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::strstr(sgach_last_error(), "line 3"), nullptr);
  const uint32_t loop[] = {0};
  const int neg[] = {0};
  EXPECT_EQ(sgach_graph_create(1, loop, loop, neg, 1, nullptr, &g), SGACH_E_INVALID_GRAPH);
  EXPECT_EQ(sgach_graph_load("/nonexistent/x.sg", &g), SGACH_E_IO);
  EXPECT_EQ(sgach_graph_parse(nullptr, &g), SGACH_E_INVALID_ARGUMENT);
  EXPECT_STREQ(sgach_status_name(SGACH_E_SIZE_GUARD), "size guard exceeded");
}

TEST(CApi, SwitchingAndEquivalence) {
  auto up3 = parse("signed 3\ne v0 v1 -\ne v1 v2 +\n");
  auto pos = parse("signed 3\ne v0 v1 +\ne v1 v2 +\n");
  int eq = 0;
  uint32_t members[3];
  size_t count = 0;
  ASSERT_EQ(sgach_equivalence(up3.get(), pos.get(), &eq, members, &count), SGACH_OK);
  EXPECT_EQ(eq, 1);
  sgach_graph* raw = nullptr;
  ASSERT_EQ(sgach_graph_switch(up3.get(), members, count, &raw), SGACH_OK);
  Graph switched(raw);
  char* a = nullptr;
  char* b = nullptr;
  sgach_graph_serialize(switched.get(), &a);
  sgach_graph_serialize(pos.get(), &b);
  EXPECT_EQ(take(a), take(b));

  auto c4 = parse("signed 4\ne v0 v1 +\ne v1 v2 +\ne v2 v3 +\ne v3 v0 +\n");
  ASSERT_EQ(sgach_equivalence(parse(kUc4).get(), c4.get(), &eq, nullptr, nullptr), SGACH_OK);
  EXPECT_EQ(eq, 0);
  EXPECT_EQ(sgach_equivalence(up3.get(), c4.get(), &eq, nullptr, nullptr),
            SGACH_E_INVALID_ARGUMENT);

  ASSERT_EQ(sgach_canonical_signature(up3.get(), &raw), SGACH_OK);
  Graph canon(raw);
  ASSERT_EQ(sgach_graph_resign(up3.get(), 1, &raw), SGACH_OK);
  Graph resigned(raw);
  ASSERT_EQ(sgach_graph_without_vertex(up3.get(), 0, &raw), SGACH_OK);
  Graph smaller(raw);
  EXPECT_EQ(sgach_graph_vertex_count(smaller.get()), 2u);
  uint32_t u = 0, v = 0;
  int negative = 1;
  for (size_t i = 0; i < 2; ++i) {
    ASSERT_EQ(sgach_graph_edge(canon.get(), i, &u, &v, &negative), SGACH_OK);
    EXPECT_EQ(negative, 0);
    ASSERT_EQ(sgach_graph_edge(resigned.get(), i, &u, &v, &negative), SGACH_OK);
    EXPECT_EQ(negative, i == 0 ? 0 : 1);
  }
}

TEST(CApi, CliquesAndIdentifiability) {
  auto up3 = parse("signed 3\ne v0 v1 -\ne v1 v2 +\n");
  int yes = 0, resign = 0;
  ASSERT_EQ(sgach_is_clique(up3.get(), SGACH_MODE_2EC, &yes), SGACH_OK);
  EXPECT_EQ(yes, 1);
  ASSERT_EQ(sgach_is_clique(up3.get(), SGACH_MODE_SIGNED, &yes), SGACH_OK);
  EXPECT_EQ(yes, 0);
  ASSERT_EQ(sgach_identifiable(up3.get(), SGACH_MODE_SIGNED, 0, 2, &yes, &resign), SGACH_OK);
  EXPECT_EQ(yes, 1);
  EXPECT_EQ(resign, 1);
  ASSERT_EQ(sgach_identifiable(up3.get(), SGACH_MODE_2EC, 0, 2, &yes, nullptr), SGACH_OK);
  EXPECT_EQ(yes, 0);
  EXPECT_EQ(sgach_identifiable(up3.get(), SGACH_MODE_2EC, 0, 0, &yes, nullptr),
            SGACH_E_INVALID_ARGUMENT);
  int found = 0;
  uint32_t u = 0, v = 0;
  ASSERT_EQ(sgach_find_identifiable_pair(up3.get(), SGACH_MODE_SIGNED, &found, &u, &v), SGACH_OK);
  EXPECT_EQ(found, 1);
  EXPECT_EQ(u, 0u);
  EXPECT_EQ(v, 2u);
  ASSERT_EQ(sgach_is_clique(parse(kUc4).get(), SGACH_MODE_SIGNED, &yes), SGACH_OK);
  EXPECT_EQ(yes, 1);
  ASSERT_EQ(sgach_twins(up3.get(), SGACH_MODE_SIGNED, 0, 2, &yes), SGACH_OK);
  EXPECT_EQ(yes, 1);
  ASSERT_EQ(sgach_twins(up3.get(), SGACH_MODE_2EC, 0, 2, &yes), SGACH_OK);
  EXPECT_EQ(yes, 0);
  uint32_t class_of[3];
  size_t classes = 0;
  ASSERT_EQ(sgach_rc_classes(up3.get(), class_of, &classes), SGACH_OK);
  EXPECT_EQ(classes, 2u);
  EXPECT_EQ(class_of[0], class_of[2]);
}

TEST(CApi, ComputeAndVerify) {
  auto g = parse(kHexagon);
  sgach_param p;
  ASSERT_EQ(sgach_param_parse("psi2", &p), SGACH_OK);
  EXPECT_EQ(sgach_param_parse("nope", &p), SGACH_E_INVALID_ARGUMENT);
  EXPECT_STREQ(sgach_param_name(SGACH_PARAM_PSI_MAX_CLASS), "psi-max-class");
  sgach_result* raw = nullptr;
  ASSERT_EQ(sgach_compute(g.get(), SGACH_PARAM_PSI2, nullptr, &raw), SGACH_OK);
  Result r(raw);
  EXPECT_EQ(sgach_result_value(r.get()), 3u);
  EXPECT_EQ(sgach_result_certify(r.get()), 1);
  EXPECT_EQ(sgach_graph_vertex_count(sgach_result_certificate(r.get())), 3u);
  sgach_coloring* c = nullptr;
  ASSERT_EQ(sgach_result_coloring(r.get(), &c), SGACH_OK);
  Col col(c);
  EXPECT_EQ(sgach_coloring_color_count(col.get()), 3u);
  int ok = 0;
  char* reason = nullptr;
  ASSERT_EQ(sgach_verify_coloring(g.get(), col.get(), SGACH_MODE_2EC, 1, &ok, &reason), SGACH_OK);
  EXPECT_EQ(ok, 1);
  take(reason);

  ASSERT_EQ(sgach_coloring_parse("c a 1\nc b 1\nc c 2\nc d 3\nc e 4\nc f 5\n", g.get(), &c),
            SGACH_OK);
  Col bad(c);
  ASSERT_EQ(sgach_verify_coloring(g.get(), bad.get(), SGACH_MODE_2EC, 0, &ok, &reason), SGACH_OK);
  EXPECT_EQ(ok, 0);
  EXPECT_NE(take(reason).find("monochromatic"), std::string::npos);

  sgach_solver_options opts;
  sgach_solver_options_default(&opts);
  EXPECT_EQ(opts.max_vertices_2ec, 12u);
  opts.max_vertices_signed = 3;
  EXPECT_EQ(sgach_compute(g.get(), SGACH_PARAM_PSIS, &opts, &raw), SGACH_E_SIZE_GUARD);
  opts.max_vertices_signed = 10;
  opts.threads = 3;
  ASSERT_EQ(sgach_compute(g.get(), SGACH_PARAM_PSIS, &opts, &raw), SGACH_OK);
  Result rs(raw);
  EXPECT_EQ(sgach_result_value(rs.get()), 4u);
  ASSERT_EQ(sgach_result_coloring(rs.get(), &c), SGACH_OK);
  Col signed_col(c);
  ASSERT_EQ(sgach_verify_coloring(g.get(), signed_col.get(), SGACH_MODE_SIGNED, 1, &ok, nullptr),
            SGACH_OK);
  EXPECT_EQ(ok, 1);
  char* text = nullptr;
  ASSERT_EQ(sgach_coloring_serialize(signed_col.get(), g.get(), &text), SGACH_OK);
  EXPECT_NE(take(text).find("switch"), std::string::npos);
}

TEST(CApi, Reductions) {
  sgach_instance* raw = nullptr;
  ASSERT_EQ(sgach_instance_parse("3p 1 12\na 4\na 4\na 4\n", &raw), SGACH_OK);
  Instance inst(raw);
  EXPECT_EQ(sgach_instance_parse("3p 1 12\na 4\n", &raw), SGACH_E_PARSE);
  sgach_reduction_params defaults;
  ASSERT_EQ(sgach_default_params(inst.get(), 0, &defaults), SGACH_OK);
  EXPECT_EQ(defaults.q, 30u);
  EXPECT_EQ(defaults.r, 31u);
  EXPECT_EQ(defaults.p, 177u);

  sgach_reduction_params small{2, 2, 3, 0};
  sgach_graph* h = nullptr;
  uint64_t k = 0;
  ASSERT_EQ(sgach_reduce3p(inst.get(), 0, &small, 0, 50000, &h, &k, nullptr), SGACH_OK);
  Graph gadget(h);
  EXPECT_EQ(sgach_graph_vertex_count(gadget.get()), 64u);
  EXPECT_EQ(k, 49u);
  EXPECT_EQ(sgach_reduce3p(inst.get(), 0, nullptr, 0, 1000, &h, &k, nullptr), SGACH_E_SIZE_GUARD);
  ASSERT_EQ(sgach_reduce3p(inst.get(), 0, &small, 1, 50000, &h, &k, nullptr), SGACH_OK);
  Graph prime(h);
  EXPECT_EQ(sgach_graph_vertex_count(prime.get()), 65u);
  EXPECT_EQ(k, 50u);

  int solvable = 0;
  sgach_coloring* c = nullptr;
  ASSERT_EQ(sgach_reduce3p_witness(inst.get(), &small, &solvable, &c), SGACH_OK);
  Col w(c);
  EXPECT_EQ(solvable, 1);
  int ok = 0;
  ASSERT_EQ(sgach_verify_coloring(gadget.get(), w.get(), SGACH_MODE_2EC, 1, &ok, nullptr),
            SGACH_OK);
  EXPECT_EQ(ok, 1);

  int found = 0;
  uint32_t abcd[4];
  ASSERT_EQ(sgach_find_diamond(gadget.get(), 20000, &found, abcd), SGACH_OK);
  EXPECT_EQ(found, 1);

  sgach_graph* apex = nullptr;
  ASSERT_EQ(sgach_reduce_apex(parse(kUc4).get(), &apex), SGACH_OK);
  Graph a(apex);
  EXPECT_EQ(sgach_graph_vertex_count(a.get()), 5u);
  EXPECT_EQ(sgach_graph_edge_count(a.get()), 8u);
}
