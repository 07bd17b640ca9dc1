#include "test_util.hpp"

using namespace prvkit;
using prvkit::test::W;

namespace {

SparseVec bracket_of(const LieBasis& L, const SparseVec& a, std::size_t b) {
  SparseVec out;
  for (const auto& [i, c] : a) detail::add_to(out, L.br(i, b), c);
  return out;
}

}  // namespace

TEST(Envalg, JacobiIdentity) {
  for (const char* label : {"A2", "B2", "G2", "A1xA1"}) {
    ChevalleyBasis cb = chevalley_basis(RootSystem::build(label));
    const LieBasis& L = cb.lie();
    for (std::size_t a = 0; a < L.n; ++a)
      for (std::size_t b = 0; b < L.n; ++b)
        for (std::size_t c = 0; c < L.n; ++c) {
          SparseVec sum = bracket_of(L, L.br(a, b), c);
          detail::add_to(sum, bracket_of(L, L.br(b, c), a), 1);
          detail::add_to(sum, bracket_of(L, L.br(c, a), b), 1);
          ASSERT_TRUE(sum.empty()) << label << " " << a << " " << b << " " << c;
        }
  }
}

TEST(Envalg, SimpleGeneratorsSatisfySerreRelations) {
  RootSystem rs = RootSystem::build("G2");
  Enveloping U(rs);
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j) {
      UElement c = U.commutator(U.e(i), U.f(j));
      if (i == j)
        EXPECT_EQ(c, U.h(i));
      else
        EXPECT_TRUE(c.is_zero());
      UElement h = U.commutator(U.h(i), U.e(j));
      EXPECT_EQ(h, U.e(j).scaled(rs.cartan(i, j)));
      if (i != j) {
        UElement ad = U.e(j);
        for (long t = 0; t < 1 - rs.cartan(i, j); ++t) ad = U.commutator(U.e(i), ad);
        EXPECT_TRUE(ad.is_zero()) << i << " " << j;
      }
    }
}

TEST(Envalg, Sl2CasimirNormalForm) {
  Enveloping U(RootSystem::build("A1"));
  Casimir c = U.casimir();
  UElement expect = U.mul(U.f(0), U.e(0)).scaled(4) + U.mul(U.h(0), U.h(0)) + U.h(0).scaled(2);
  EXPECT_EQ(c.element, expect);
  EXPECT_EQ(c.scale, 2);
}

TEST(Envalg, CasimirIsCentralWithQuadraticEigenvalue) {
  for (const char* label : {"A2", "B2", "G2"}) {
    RootSystem rs = RootSystem::build(label);
    Enveloping U(rs);
    Casimir c = U.casimir();
    EXPECT_TRUE(U.is_central(c.element)) << label;
    for (const char* l : {"0,0", "1,0", "2,-1", "1/2,3"}) {
      Weight lambda = W(l);
      Rational expect = c.scale * (rs.form(lambda + rs.rho(), lambda + rs.rho()) - rs.form(rs.rho(), rs.rho()));
      EXPECT_EQ(central_character(U, lambda, c.element), expect) << label << " " << l;
    }
  }
}

TEST(Envalg, NonCentralElementIsRejected) {
  Enveloping U(RootSystem::build("A1"));
  EXPECT_THROW(central_character(U, W("1"), U.h(0)), UsageError);
}

TEST(Envalg, TransposeIsAnAntiAutomorphism) {
  Enveloping U(RootSystem::build("A2"));
  UElement a = U.mul(U.e(0), U.f(2)) + U.h(1);
  UElement b = U.mul(U.f(1), U.e(2));
  EXPECT_EQ(U.transpose(U.mul(a, b)), U.mul(U.transpose(b), U.transpose(a)));
}

TEST(Envalg, MultiplicationIsAssociative) {
  Enveloping U(RootSystem::build("B2"));
  UElement a = U.e(3) + U.f(0), b = U.mul(U.f(2), U.h(1)), c = U.e(1) + U.f(3);
  EXPECT_EQ(U.mul(U.mul(a, b), c), U.mul(a, U.mul(b, c)));
}

TEST(Envalg, HarishChandraProjectionOfFE) {
  Enveloping U(RootSystem::build("A1"));
  // e f = f e + h projects to h.
  EXPECT_EQ(U.hc_projection(U.mul(U.e(0), U.f(0))), Poly::variable(1, 0));
  EXPECT_TRUE(U.hc_projection(U.mul(U.f(0), U.e(0))).is_zero());
}

TEST(Envalg, ShapovalovGramIsSymmetric) {
  Enveloping U(RootSystem::build("A2"));
  auto g = U.shapovalov_gram({2, 1});
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) EXPECT_EQ(g[i][j], g[j][i]);
}

TEST(Envalg, EngineRankCap) { EXPECT_THROW(Enveloping(RootSystem::build("A4"), 3), CapExceeded); }
