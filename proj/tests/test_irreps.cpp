#include "test_util.hpp"

using namespace prvkit;
using prvkit::test::W;

TEST(Irreps, RealizationMatchesCharacter) {
  for (const auto& [label, l] : std::vector<std::pair<const char*, const char*>>{{"A2", "2,1"}, {"B2", "1,1"}, {"G2", "1,0"}}) {
    RootSystem rs = RootSystem::build(label);
    IrrepRealization V = realize(rs, W(l));
    Character ch = character_of(rs, W(l));
    EXPECT_EQ(V.dim(), static_cast<std::size_t>(ch.total()));
    for (const auto& [x, m] : ch.entries) EXPECT_EQ(V.weight_dim(x), static_cast<std::size_t>(m)) << label;
  }
}

TEST(Irreps, RealizationSatisfiesCommutationRelations) {
  for (const auto& [label, l] : std::vector<std::pair<const char*, const char*>>{{"A2", "1,2"}, {"B2", "2,1"}, {"G2", "0,1"}}) {
    RootSystem rs = RootSystem::build(label);
    IrrepRealization V = realize(rs, W(l));
    for (const auto& w : V.weights())
      for (std::size_t i = 0; i < rs.rank(); ++i)
        for (std::size_t j = 0; j < rs.rank(); ++j) {
          QMatrix ef = V.simple_action(i, true, w - V.simple_root_weight(j)) * V.simple_action(j, false, w);
          QMatrix fe = V.simple_action(j, false, w + V.simple_root_weight(i)) * V.simple_action(i, true, w);
          ASSERT_EQ(ef.rows(), fe.rows());
          ASSERT_EQ(ef.cols(), fe.cols());
          if (i == j)
            ASSERT_EQ(ef - fe, QMatrix::identity(V.weight_dim(w)).scaled(w[i])) << label << " at " << format_ivec(w);
          else
            ASSERT_TRUE((ef - fe).is_zero()) << label << " at " << format_ivec(w) << " i=" << i << " j=" << j;
        }
  }
}

TEST(Irreps, RealizationCap) {
  RootSystem rs = RootSystem::build("A2");
  EXPECT_THROW(realize(rs, W("5,5"), 100), CapExceeded);
}

TEST(Irreps, TruncatedRealizationKeepsTopLayers) {
  RootSystem rs = RootSystem::build("A2");
  IrrepRealization full = realize(rs, W("2,2"));
  IrrepRealization top = realize(rs, W("2,2"), 10, 2);
  EXPECT_TRUE(top.truncated());
  for (const auto& w : top.weights()) EXPECT_EQ(top.weight_dim(w), full.weight_dim(w));
  EXPECT_LT(top.dim(), full.dim());
}

TEST(Irreps, ExtremeSpacesGiveTensorMultiplicities) {
  RootSystem rs = RootSystem::build("A2");
  auto V = shared_realization(rs, {1, 1});
  // m^nu_{rho, rho} = dim V+(rho; nu - rho, rho).
  EXPECT_EQ(v_extremes(*V, {0, 0}, {1, 1}).dim, 2U);
  EXPECT_EQ(v_extremes(*V, {1, 1}, {1, 1}).dim, 1U);
  EXPECT_EQ(v_extremes(*V, {-1, -1}, {1, 1}).dim, 1U);
  EXPECT_EQ(v_extremes(*V, {-1, -1}, {1, 1}, false).dim, v_extremes(*V, {1, 1}, {1, 1}, true).dim);
}

TEST(Irreps, Sl2ZeroWeightSpectrum) {
  RootSystem rs = RootSystem::build("A1");
  auto recipe = chevalley_recipe(rs);
  for (long m = 0; m <= 8; m += 2) {
    IrrepRealization V = realize(rs, Weight::from_ints({m}));
    auto sp = zero_weight_spectrum(V, recipe, 0);
    EXPECT_EQ(sp.zero_dim, 1U);
    EXPECT_EQ(sp.mult, (std::map<long, long>{{m / 2, 1}}));
  }
}

TEST(Irreps, KprvMultiplicityIsOne) {
  RootSystem rs = RootSystem::build("A2");
  for (const auto& w : enumerate_weyl(rs).elements()) EXPECT_EQ(kprv_multiplicity(rs, W("1,1"), W("1,1"), w), 1U);
}

TEST(Irreps, ExtremalSubmodulesGrowAlongBruhatOrder) {
  RootSystem rs = RootSystem::build("A2");
  TensorModule T(shared_realization(rs, {1, 0}), shared_realization(rs, {1, 1}));
  const WeylGroup& G = enumerate_weyl(rs);
  for (const auto& u : G.elements())
    for (const auto& w : G.elements())
      if (bruhat_leq(rs, u, w)) EXPECT_TRUE(extremal_submodule(T, w).contains(extremal_submodule(T, u)));
  EXPECT_EQ(extremal_submodule(T, G.longest()).dim(), 24U);
}
