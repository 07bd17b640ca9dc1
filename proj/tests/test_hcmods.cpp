#include "test_util.hpp"

using namespace prvkit;
using prvkit::test::W;

TEST(HCMods, MinimalTypeIsDominantRepOfNu) {
  RootSystem rs = RootSystem::build("A2");
  auto inv = invariants(rs, {W("1/2,0"), W("-2,1")});
  EXPECT_EQ(inv.minimal_type, dominant_rep(rs, {-2, 1}));
}

TEST(HCMods, MinimalTypeMinimizesNorm) {
  for (const char* label : {"A2", "B2", "G2"}) {
    RootSystem rs = RootSystem::build(label);
    for (const IVec& nu : std::vector<IVec>{{0, 0}, {1, -1}, {-2, 1}, {3, 0}})
      EXPECT_TRUE(minimal_type_minimizes_norm(rs, nu, 3)) << label << " " << format_ivec(nu);
  }
}

TEST(HCMods, Sl2WitnessEquivalence) {
  RootSystem rs = RootSystem::build("A1");
  for (const char* l : {"0", "1/2", "-3", "5/3"})
    for (long n = -3; n <= 3; ++n) {
      Weight lambda = W(l), nu = Weight::from_ints({n});
      HCParams q{-lambda - Weight::from_ints({2}), -nu};
      auto w = equivalent(rs, {lambda, nu}, q);
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(w->word_string(), "s1");
    }
}

TEST(HCMods, InequivalentParameters) {
  RootSystem rs = RootSystem::build("A1");
  EXPECT_FALSE(equivalent(rs, {W("1"), W("2")}, {W("1"), W("-2")}).has_value());
}

TEST(HCMods, EquivalentParametersShareInvariants) {
  RootSystem rs = RootSystem::build("B2");
  HCParams p{W("1/2,-1"), W("2,-3")};
  for (const auto& w : enumerate_weyl(rs).elements()) {
    HCParams q{twisted_action(rs, w, p.lambda), apply_weyl(rs, w, p.nu)};
    auto a = invariants(rs, p), b = invariants(rs, q);
    EXPECT_EQ(a.minimal_type, b.minimal_type);
    EXPECT_EQ(a.inf_char, b.inf_char);
  }
}

TEST(HCMods, FiniteDimensionalMembers) {
  RootSystem rs = RootSystem::build("A1");
  // lambda = 3, nu = 1: mu = -w0(lambda - nu) = 2.
  auto fd = finite_dimensional(rs, {W("3"), W("1")});
  ASSERT_TRUE(fd);
  EXPECT_EQ(fd->first, IVec{3});
  EXPECT_EQ(fd->second, IVec{2});
  EXPECT_FALSE(finite_dimensional(rs, {W("1/2"), W("1")}));
  EXPECT_FALSE(finite_dimensional(rs, {W("1"), W("3")}));
}

TEST(HCMods, FiniteDimensionalMinimalTypeMatchesTensorProduct) {
  RootSystem rs = RootSystem::build("A2");
  for (const char* l : {"1,0", "2,1", "1,1"})
    for (const char* n : {"0,0", "1,-1", "2,0", "-1,1"}) {
      HCParams p{W(l), W(n)};
      auto fd = finite_dimensional(rs, p);
      if (!fd) continue;
      auto t = extreme_types(rs, Weight::from_ints(fd->first), Weight::from_ints(fd->second));
      EXPECT_EQ(t.minimal, invariants(rs, p).minimal_type) << l << " " << n;
    }
}

TEST(HCMods, ClassZero) {
  RootSystem rs = RootSystem::build("A2");
  EXPECT_TRUE(class_zero(rs, W("-1,-1")).complete);
  EXPECT_TRUE(class_zero(rs, W("1/3,1/3")).complete);
  // (lambda + rho)(h_2) = 1 is a nonzero integer.
  EXPECT_FALSE(class_zero(rs, W("1/2,0")).complete);
  EXPECT_FALSE(class_zero(rs, W("1,1")).complete);
  auto rep = class_zero(rs, W("1,0"));
  ASSERT_TRUE(rep.mults);
  EXPECT_EQ(rep.mults->entries, (std::map<IVec, long>{{{1, 1}, 1}, {{0, 0}, 1}}));
}

TEST(HCMods, IsoclassCounts) {
  RootSystem rs = RootSystem::build("B2");
  EXPECT_EQ(isoclass_count(rs, W("1,1"), W("2,1")), 8U);
  EXPECT_EQ(isoclass_count(rs, W("0,0"), W("0,0")), 1U);
  EXPECT_EQ(isoclass_count(rs, W("1,0"), W("1,0")), 3U);
}

TEST(HCMods, KTypeBound) {
  RootSystem rs = RootSystem::build("A2");
  EXPECT_EQ(ktype_bound(rs, {W("0,0"), W("0,0")}, W("1,1")), 2);
  EXPECT_EQ(ktype_bound(rs, {W("0,0"), W("1,0")}, W("1,1")), 0);
}

TEST(HCMods, NonUniquenessWitness) {
  RootSystem a1 = RootSystem::build("A1");
  EXPECT_FALSE(find_nonuniqueness_witness(a1, 4, 4).has_value());
  RootSystem a2 = RootSystem::build("A2");
  auto w = find_nonuniqueness_witness(a2, 3, 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(equivalent(a2, w->p, w->q).has_value());
  auto a = invariants(a2, w->p), b = invariants(a2, w->q);
  EXPECT_EQ(a.minimal_type, b.minimal_type);
  EXPECT_EQ(a.inf_char, b.inf_char);
}

TEST(HCMods, RejectsNonIntegralNu) {
  RootSystem rs = RootSystem::build("A1");
  EXPECT_THROW(invariants(rs, {W("1"), W("1/2")}), UsageError);
}
