#include "test_util.hpp"

using namespace prvkit;
using prvkit::test::W;

TEST(RootCore, PositiveRootCounts) {
  const std::pair<const char*, std::size_t> cases[] = {{"A1", 1}, {"A2", 3}, {"B2", 4}, {"G2", 6}, {"A3", 6},
                                                       {"B3", 9}, {"C3", 9}, {"D4", 12}, {"F4", 24}, {"A1xA2", 4}};
  for (const auto& [label, n] : cases) EXPECT_EQ(RootSystem::build(label).num_positive(), n) << label;
}

TEST(RootCore, WeylOrdersMatchEnumeration) {
  for (const char* label : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA1", "D4"}) {
    RootSystem rs = RootSystem::build(label);
    const WeylGroup& W = enumerate_weyl(rs);
    EXPECT_EQ(W.size(), rs.weyl_order()) << label;
    EXPECT_EQ(W.longest().length(), rs.num_positive()) << label;
    EXPECT_TRUE(W[0].is_identity());
  }
}

TEST(RootCore, WeylCapIsEnforced) {
  RootSystem rs = RootSystem::build("B3");
  EXPECT_THROW(enumerate_weyl(rs, 47), CapExceeded);
}

TEST(RootCore, SimpleRootsComeFirst) {
  RootSystem rs = RootSystem::build("G2");
  for (std::size_t i = 0; i < rs.rank(); ++i) EXPECT_EQ(rs.positive_roots()[i], rs.simple_root(i));
  for (std::size_t k = 1; k < rs.num_positive(); ++k)
    EXPECT_LE(sum(rs.positive_roots()[k - 1]), sum(rs.positive_roots()[k]));
}

TEST(RootCore, SimpleReflection) {
  RootSystem rs = RootSystem::build("B2");
  IVec lambda{3, -2};
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    IVec s = rs.reflect(lambda, i);
    IVec alpha = rs.root_to_weight(rs.simple_root(i));
    EXPECT_EQ(s, lambda - scaled(alpha, lambda[i]));
    EXPECT_EQ(rs.reflect(s, i), lambda);
  }
}

TEST(RootCore, RhoPairsToOneWithSimpleCoroots) {
  for (const char* label : {"A2", "B3", "G2", "C3"}) {
    RootSystem rs = RootSystem::build(label);
    for (std::size_t i = 0; i < rs.rank(); ++i) EXPECT_EQ(rs.coroot_pairing(rs.rho_ints(), i), 1);
  }
}

TEST(RootCore, CorootPairingOfRootWithItselfIsTwo) {
  for (const char* label : {"B2", "G2", "C3"}) {
    RootSystem rs = RootSystem::build(label);
    for (std::size_t k = 0; k < rs.num_positive(); ++k)
      EXPECT_EQ(rs.coroot_pairing(rs.root_to_weight(rs.positive_roots()[k]), k), 2) << label << " root " << k;
  }
}

TEST(RootCore, TwistedActionFixesMinusRho) {
  RootSystem rs = RootSystem::build("A2");
  Weight minus_rho = -rs.rho();
  for (const auto& w : enumerate_weyl(rs).elements()) EXPECT_EQ(twisted_action(rs, w, minus_rho), minus_rho);
}

TEST(RootCore, TwistedActionIsAnAction) {
  RootSystem rs = RootSystem::build("B2");
  const WeylGroup& G = enumerate_weyl(rs);
  Weight lambda = W("1/2,-3");
  for (const auto& a : G.elements())
    for (const auto& b : G.elements())
      EXPECT_EQ(twisted_action(rs, compose(rs, a, b), lambda), twisted_action(rs, a, twisted_action(rs, b, lambda)));
}

TEST(RootCore, OrbitStabilizer) {
  RootSystem rs = RootSystem::build("B3");
  for (const IVec& l : std::vector<IVec>{{0, 0, 0}, {1, 0, 0}, {0, 1, 1}, {1, 1, 1}, {2, 0, 3}}) {
    auto orbit = weyl_orbit(rs, l);
    auto stab = stabilizer(enumerate_weyl(rs), Weight::from_ints(l));
    EXPECT_EQ(orbit.size() * stab.size(), rs.weyl_order());
    for (const auto& x : orbit) EXPECT_EQ(dominant_rep(rs, x), l);
  }
}

TEST(RootCore, DoubleCosetCounts) {
  RootSystem rs = RootSystem::build("A2");
  EXPECT_EQ(double_cosets(rs, W("1,1"), W("2,3")).count(), 6U);
  EXPECT_EQ(double_cosets(rs, W("0,0"), W("2,3")).count(), 1U);
  EXPECT_EQ(double_cosets(rs, W("1,0"), W("1,0")).count(), 2U);
}

TEST(RootCore, DominanceAndHull) {
  RootSystem rs = RootSystem::build("A2");
  EXPECT_TRUE(dominates(rs, {2, 2}, {1, 1}));
  EXPECT_FALSE(dominates(rs, {2, 2}, {2, 0}));
  EXPECT_FALSE(dominates(rs, {1, 1}, {3, 0}));
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b) {
      auto [dom, hull] = dominance_hull_equiv(rs, W("2,2"), Weight::from_ints({a, b}));
      EXPECT_EQ(dom, hull) << a << "," << b;
    }
}

TEST(RootCore, BruhatOrder) {
  RootSystem rs = RootSystem::build("A2");
  const WeylGroup& G = enumerate_weyl(rs);
  for (const auto& w : G.elements()) {
    EXPECT_TRUE(bruhat_leq(rs, G[0], w));
    EXPECT_TRUE(bruhat_leq(rs, w, G.longest()));
  }
  EXPECT_FALSE(bruhat_leq(rs, weyl_from_word(rs, {0}), weyl_from_word(rs, {1})));
  EXPECT_TRUE(bruhat_leq(rs, weyl_from_word(rs, {0}), weyl_from_word(rs, {1, 0})));
}

TEST(RootCore, ParsingRejectsMalformedInput) {
  EXPECT_THROW(parse_weight("1,,2"), UsageError);
  EXPECT_THROW(parse_weight("a"), UsageError);
  EXPECT_THROW(parse_weight("1/0"), UsageError);
  EXPECT_THROW(RootSystem::build("X2"), UsageError);
  EXPECT_THROW(RootSystem::build("B1"), UsageError);
  EXPECT_EQ(parse_weight("-3/6,2").to_string(), "-1/2,2");
}
