#include <gtest/gtest.h>

#include "sgach/error.hpp"
#include "sgach/structure.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/random_graphs.hpp"

using namespace sgach;

TEST(SignProduct, PathsAndCycles) {
  auto g = fixtures::up3();
  const auto a = *g.find("a"), b = *g.find("b"), c = *g.find("c");
  EXPECT_EQ(sign_product(g, PathWitness{{a, b, c}}), Sign::negative);
  EXPECT_EQ(sign_product(g, PathWitness{{b, c}}), Sign::positive);
  EXPECT_EQ(sign_product(g, PathWitness{{a}}), Sign::positive);
  EXPECT_THROW(sign_product(g, PathWitness{{a, c}}), Error);
  EXPECT_THROW(sign_product(g, PathWitness{}), Error);

  auto uc4 = fixtures::uc4();
  EXPECT_EQ(cycle_balance(uc4, CycleWitness{{0, 1, 2, 3}}), Balance::unbalanced);
  EXPECT_EQ(cycle_balance(fixtures::cycle(5, 2), CycleWitness{{0, 1, 2, 3, 4}}),
            Balance::balanced);
  EXPECT_THROW(cycle_balance(uc4, CycleWitness{{0, 1, 2}}), Error);     // 2-0 missing
  EXPECT_THROW(cycle_balance(uc4, CycleWitness{{0, 1, 0, 1}}), Error);  // repeats
  EXPECT_THROW(cycle_balance(uc4, CycleWitness{{0, 1}}), Error);
}

TEST(Up3, FindsLowestMiddleVertex) {
  auto g = fixtures::up3();
  auto w = up3_between(g, *g.find("a"), *g.find("c"));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->vertices, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_FALSE(up3_between(fixtures::path(3), 0, 2));
  EXPECT_FALSE(up3_between(fixtures::path(4), 0, 3));
  EXPECT_THROW(up3_between(g, 0, 0), Error);
  EXPECT_THROW(up3_between(g, 0, 7), Error);
}

TEST(Uc4, AntipodalPairsOfTheUc4) {
  SignedClass uc4(fixtures::uc4());
  auto c = uc4_antipodal(uc4, 0, 2);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->vertices, (std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_EQ(cycle_balance(uc4.representative(), *c), Balance::unbalanced);
  EXPECT_TRUE(uc4_antipodal(uc4, 1, 3));
  EXPECT_FALSE(uc4_antipodal(SignedClass(fixtures::cycle(4)), 0, 2));
  EXPECT_THROW(uc4_antipodal(uc4, 0, 1), Error);
}

// Nonempty iff two common neighbours have differing sign products; the same
// answer on every member of the class.
TEST(Uc4, CharacterizationAndClassInvariance) {
  randgraph::Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = randgraph::any(rng, 2, 7);
    const auto m = oracle::from(g);
    for (int u = 0; u < m.n; ++u) {
      for (int v = u + 1; v < m.n; ++v) {
        if (m.at(u, v) != 0) continue;
        const bool expected = oracle::has_up3(m, u, v) && oracle::has_bp3(m, u, v);
        for (std::uint32_t s = 0; s < (1u << m.n); s += 3) {
          std::vector<bool> flags(g.vertex_count());
          for (int x = 0; x < m.n; ++x) flags[static_cast<std::size_t>(x)] = (s >> x) & 1;
          SignedClass sc(apply_switching(g, SwitchingSet::from_flags(flags)));
          auto c = uc4_antipodal(sc, static_cast<VertexId>(u), static_cast<VertexId>(v));
          ASSERT_EQ(c.has_value(), expected);
          if (c) {
            EXPECT_EQ(cycle_balance(sc.representative(), *c), Balance::unbalanced);
          }
        }
      }
    }
  }
}

TEST(Twins, TwoEdgeColored) {
  auto star = fixtures::make({"c", "x", "y", "z"},
                             {{"c", "x", '+'}, {"c", "y", '+'}, {"c", "z", '-'}});
  EXPECT_TRUE(twins_2ec(star, 1, 2));
  EXPECT_FALSE(twins_2ec(star, 1, 3));
  EXPECT_FALSE(twins_2ec(fixtures::complete(2), 0, 1));
  EXPECT_TRUE(twins_2ec(Graph2EC(2, {}), 0, 1));
  EXPECT_THROW(twins_2ec(star, 1, 1), Error);
}

TEST(Twins, SignedAllowsResigning) {
  auto star = fixtures::make({"c", "x", "y", "z"},
                             {{"c", "x", '+'}, {"c", "y", '+'}, {"c", "z", '-'}});
  SignedClass sc(star);
  EXPECT_TRUE(twins_signed(sc, 1, 3));
  EXPECT_TRUE(twins_signed(sc.switched({0}), 1, 3));
  auto mixed = fixtures::make({"p", "q", "u", "v"},
                              {{"u", "p", '+'}, {"u", "q", '+'}, {"v", "p", '+'}, {"v", "q", '-'}});
  EXPECT_FALSE(twins_signed(SignedClass(mixed), 2, 3));
}

TEST(RcClasses, Examples) {
  EXPECT_EQ(rc_classes(fixtures::complete(3).underlying()),
            (std::vector<std::vector<VertexId>>{{0}, {1}, {2}}));
  UnsignedGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(rc_classes(star), (std::vector<std::vector<VertexId>>{{0}, {1, 2, 3}}));
  EXPECT_EQ(rc_classes(fixtures::path(4).underlying()).size(), 4u);
  UnsignedGraph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  EXPECT_EQ(rc_classes(k23), (std::vector<std::vector<VertexId>>{{0, 1}, {2, 3, 4}}));
}
