#include "test_util.hpp"

using namespace prvkit;
using prvkit::test::W;

TEST(Kostant, WeylDimensions) {
  RootSystem a2 = RootSystem::build("A2");
  EXPECT_EQ(weyl_dimension(a2, {1, 1}), 8U);
  EXPECT_EQ(weyl_dimension(a2, {3, 0}), 10U);
  RootSystem g2 = RootSystem::build("G2");
  std::set<unsigned long long> fund{weyl_dimension(g2, {1, 0}), weyl_dimension(g2, {0, 1})};
  EXPECT_EQ(fund, (std::set<unsigned long long>{7, 14}));
  RootSystem b2 = RootSystem::build("B2");
  std::set<unsigned long long> fb{weyl_dimension(b2, {1, 0}), weyl_dimension(b2, {0, 1})};
  EXPECT_EQ(fb, (std::set<unsigned long long>{4, 5}));
}

TEST(Kostant, PartitionFunctionA2) {
  RootSystem rs = RootSystem::build("A2");
  for (long n = 0; n <= 6; ++n) EXPECT_EQ(partition_function(rs, {n, n}), n + 1);
  EXPECT_EQ(partition_function(rs, {2, 0}), 1);
  EXPECT_EQ(partition_function(rs, {-1, 0}), 0);
}

TEST(Kostant, KostantAgreesWithFreudenthal) {
  for (const char* label : {"A2", "B2", "G2", "A3"}) {
    RootSystem rs = RootSystem::build(label);
    IVec l(rs.rank(), 0);
    l[0] = 2;
    l.back() += 1;
    auto k = dominant_multiplicities(rs, l, MultAlgo::Kostant);
    auto f = dominant_multiplicities(rs, l, MultAlgo::Freudenthal);
    EXPECT_EQ(*k, *f) << label;
  }
}

TEST(Kostant, CharacterTotalsAndSymmetry) {
  RootSystem rs = RootSystem::build("B2");
  Character ch = character_of(rs, W("2,1"));
  EXPECT_EQ(static_cast<unsigned long long>(ch.total()), weyl_dimension(rs, {2, 1}));
  for (const auto& [x, m] : ch.entries)
    for (std::size_t i = 0; i < rs.rank(); ++i) EXPECT_EQ(ch.at(rs.reflect(x, i)), m);
}

TEST(Kostant, AdjointZeroWeight) {
  RootSystem rs = RootSystem::build("G2");
  for (const auto& h : rs.highest_roots()) {
    IVec adj = rs.root_to_weight(h);
    EXPECT_EQ(weight_multiplicity(rs, Weight::from_ints(adj), W("0,0")), 2);
  }
}

TEST(Kostant, CharacterCap) {
  RootSystem rs = RootSystem::build("A2");
  EXPECT_THROW(character_of(rs, W("20,20"), 100), CapExceeded);
}

TEST(Kostant, NonIntegralOrOffLatticeWeightsHaveZeroMultiplicity) {
  RootSystem rs = RootSystem::build("A2");
  EXPECT_EQ(weight_multiplicity(rs, W("1,1"), W("1/2,0")), 0);
  EXPECT_EQ(weight_multiplicity(rs, W("1,1"), W("1,0")), 0);
}
