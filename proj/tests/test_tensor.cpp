#include "test_util.hpp"

using namespace prvkit;
using prvkit::test::W;

namespace {

std::map<IVec, long> entries(std::initializer_list<std::pair<IVec, long>> l) { return {l.begin(), l.end()}; }

}  // namespace

TEST(Tensor, ClebschGordan) {
  RootSystem rs = RootSystem::build("A1");
  for (long l = 0; l <= 8; ++l)
    for (long m = 0; m <= l; ++m) {
      std::map<IVec, long> expect;
      for (long n = l - m; n <= l + m; n += 2) expect[{n}] = 1;
      for (Method meth : {Method::Character, Method::Steinberg, Method::Klimyk, Method::Prv})
        EXPECT_EQ(decompose(rs, Weight::from_ints({l}), Weight::from_ints({m}), meth).entries, expect);
    }
}

TEST(Tensor, A2AdjointSquared) {
  RootSystem rs = RootSystem::build("A2");
  auto expect = entries({{{2, 2}, 1}, {{3, 0}, 1}, {{0, 3}, 1}, {{1, 1}, 2}, {{0, 0}, 1}});
  for (Method meth : {Method::Character, Method::Steinberg, Method::Klimyk, Method::Prv})
    EXPECT_EQ(decompose(rs, W("1,1"), W("1,1"), meth).entries, expect) << method_name(meth);
}

TEST(Tensor, MethodsAgreeOnSmallPairs) {
  for (const char* label : {"B2", "G2", "A1xA1"}) {
    RootSystem rs = RootSystem::build(label);
    for (const char* l : {"1,0", "0,1", "1,1"})
      for (const char* m : {"1,0", "0,1", "2,0"}) {
        auto ref = decompose(rs, W(l), W(m), Method::Character);
        for (Method meth : {Method::Steinberg, Method::Klimyk, Method::Prv})
          EXPECT_EQ(decompose(rs, W(l), W(m), meth), ref) << label << " " << l << " " << m << " " << method_name(meth);
      }
  }
}

TEST(Tensor, DecompositionIsSymmetric) {
  RootSystem rs = RootSystem::build("B2");
  EXPECT_EQ(decompose(rs, W("2,1"), W("0,1"), Method::Klimyk).entries,
            decompose(rs, W("0,1"), W("2,1"), Method::Klimyk).entries);
}

TEST(Tensor, TwoExpressionsForMultiplicity) {
  RootSystem rs = RootSystem::build("A2");
  auto d = decompose(rs, W("2,1"), W("1,1"), Method::Character);
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 4; ++b)
      EXPECT_EQ(multiplicity(rs, W("2,1"), W("1,1"), Weight::from_ints({a, b})), d.at({a, b})) << a << "," << b;
}

TEST(Tensor, CartanAndMinimalComponents) {
  RootSystem rs = RootSystem::build("A1");
  auto t = extreme_types(rs, W("3"), W("1"));
  EXPECT_EQ(t.cartan, IVec{4});
  EXPECT_EQ(t.minimal, IVec{2});
  RootSystem a2 = RootSystem::build("A2");
  auto u = extreme_types(a2, W("2,0"), W("1,0"));
  EXPECT_EQ(u.cartan, (IVec{3, 0}));
  EXPECT_EQ(u.minimal, (IVec{1, 1}));
}

TEST(Tensor, GeneralizedPrvBounds) {
  RootSystem rs = RootSystem::build("A2");
  const WeylGroup& G = enumerate_weyl(rs);
  for (const auto& w : G.elements()) {
    auto g = generalized_prv(rs, W("1,1"), W("1,1"), w);
    EXPECT_GE(g.mult, std::max(1L, g.lower_bound));
    if (g.w_dominant) EXPECT_EQ(g.mult, 1);
  }
  // s1 s2 rho: rho + s1 s2 rho = (-1, 2), whose component V(1,1) has multiplicity 2.
  auto g = generalized_prv(rs, W("1,1"), W("1,1"), weyl_from_word(rs, {0, 1}));
  EXPECT_EQ(g.component, (IVec{1, 1}));
  EXPECT_EQ(g.mult, 2);
  EXPECT_EQ(g.kprv_mult, 1);
}

TEST(Tensor, MinusculeDecomposition) {
  RootSystem rs = RootSystem::build("A3");
  EXPECT_TRUE(is_minuscule(rs, {0, 1, 0}));
  EXPECT_FALSE(is_minuscule(rs, {1, 0, 1}));
  auto d = minuscule_decompose(rs, W("1,1,0"), W("0,1,0"));
  EXPECT_EQ(d, decompose(rs, W("1,1,0"), W("0,1,0"), Method::Klimyk));
  EXPECT_THROW(minuscule_decompose(rs, W("1,1,0"), W("1,0,1")), UsageError);
}

TEST(Tensor, ComponentTests) {
  for (const char* label : {"A2", "B2", "G2"}) {
    RootSystem rs = RootSystem::build(label);
    for (const char* l : {"1,1", "2,0", "0,3"})
      for (const char* m : {"1,0", "1,1"}) EXPECT_TRUE(component_tests(rs, W(l), W(m)).ok) << label << " " << l << " " << m;
  }
}

TEST(Tensor, InputValidation) {
  RootSystem rs = RootSystem::build("A2");
  EXPECT_THROW(decompose(rs, W("-1,0"), W("1,0"), Method::Klimyk), UsageError);
  EXPECT_THROW(decompose(rs, W("1/2,0"), W("1,0"), Method::Klimyk), UsageError);
  EXPECT_THROW(parse_method("lr"), UsageError);
  TensorCaps caps;
  caps.max_dim = 10;
  EXPECT_THROW(decompose(rs, W("3,3"), W("3,3"), Method::Character, caps), CapExceeded);
}
