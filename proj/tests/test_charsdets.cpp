#include "test_util.hpp"

using namespace prvkit;
using prvkit::test::W;

TEST(CharsDets, Sl2CasimirEigenvalue) {
  Enveloping U(RootSystem::build("A1"));
  Casimir c = U.casimir();
  for (long z = -3; z <= 5; ++z) EXPECT_EQ(central_character(U, Weight::from_ints({z}), c.element), z * z + 2 * z);
}

TEST(CharsDets, CentralCharacterConstantOnTwistedOrbits) {
  for (const char* label : {"A2", "B2"}) {
    RootSystem rs = RootSystem::build(label);
    Enveloping U(rs);
    UElement z2 = U.pow(U.casimir().element, 2);
    Weight lambda = W("1/3,-2");
    Rational v = central_character(U, lambda, z2);
    for (const auto& w : enumerate_weyl(rs).elements()) {
      Weight x = twisted_action(rs, w, lambda);
      EXPECT_EQ(central_character(U, x, z2), v);
      EXPECT_EQ(central_character_id(rs, x), central_character_id(rs, lambda));
    }
  }
}

TEST(CharsDets, InfinitesimalCharacterPair) {
  RootSystem rs = RootSystem::build("A1");
  auto c = hc_inf_character(rs, W("3"), W("1"));
  EXPECT_EQ(c.left.rep, W("3"));
  // nu - lambda - 2 rho = -4 lies on the twisted orbit of 2.
  EXPECT_EQ(c.right.rep, W("2"));
}

TEST(CharsDets, Sl2OmegaImages) {
  Sl2OmegaResult r = sl2_omega(W("1/2"), W("3"));
  Poly hb = Poly::variable(2, 0), h1 = Poly::variable(2, 1);
  Poly two = Poly::constant(2, 2);
  EXPECT_EQ(r.delta1, h1 * h1 + two * h1);
  EXPECT_EQ(r.delta2, hb * hb - two * hb * h1 + h1 * h1 - two * hb + two * h1);
  EXPECT_EQ(r.delta_bar, hb * hb + two * hb);
  EXPECT_EQ(r.v1, Rational(5, 4));
  EXPECT_EQ(r.vbar, 15);
  EXPECT_TRUE(r.omega_commutes);
}

TEST(CharsDets, Sl2OmegaAtZeroIsTwistedInvariant) {
  Sl2OmegaResult r = sl2_omega(W("0"), W("0"));
  for (const Poly& p : sl2_omega_images_at(r, 0)) EXPECT_TRUE(in_twisted_invariants_sl2(p)) << p.to_string();
  EXPECT_FALSE(in_twisted_invariants_sl2(Poly::variable(1, 0)));
}

TEST(CharsDets, ShapovalovSl2) {
  Enveloping U(RootSystem::build("A1"));
  Poly h = Poly::variable(1, 0);
  EXPECT_EQ(shapovalov_det(U, {2}, DetMode::Direct).expanded, (h * (h - Poly::constant(1, 1))).scaled(2));
  for (long d = 0; d <= 6; ++d) {
    auto r = shapovalov_ratio(U, {d});
    ASSERT_TRUE(r.has_value());
    Rational fact = 1;
    for (long t = 2; t <= d; ++t) fact *= t;
    EXPECT_EQ(*r, fact);
  }
}

TEST(CharsDets, ShapovalovFormulaMatchesDirectInA2) {
  Enveloping U(RootSystem::build("A2"));
  for (const IVec& nu : std::vector<IVec>{{1, 0}, {1, 1}, {2, 1}, {2, 2}}) EXPECT_TRUE(shapovalov_ratio(U, nu)) << format_ivec(nu);
}

TEST(CharsDets, SingularVectorsAtDeterminantZeros) {
  Enveloping U(RootSystem::build("A1"));
  for (long d = 1; d <= 4; ++d)
    for (long l = -2; l <= 5; ++l)
      EXPECT_EQ(verma_singular_dim(U, {d}, Weight::from_ints({l})), l == d - 1 ? 1U : 0U) << d << " " << l;
}

TEST(CharsDets, GramDeterminantVanishesOnFactors) {
  RootSystem rs = RootSystem::build("A2");
  Enveloping U(rs);
  auto det = shapovalov_det(U, {1, 1}, DetMode::Formula);
  for (const char* l : {"0,3", "-2,1", "1/2,-3/2", "2,5"}) {
    Weight lambda = W(l);
    bool zero = sgn(det.expanded.evaluate(lambda.coords)) == 0;
    EXPECT_EQ(zero, rank(shapovalov_gram_at(U, {1, 1}, lambda)) < shapovalov_gram_at(U, {1, 1}, lambda).rows()) << l;
  }
}

TEST(CharsDets, PrvDeterminantSl2) {
  RootSystem rs = RootSystem::build("A1");
  for (long m = 0; m <= 10; m += 2) {
    auto p = prv_det(rs, Weight::from_ints({m}));
    EXPECT_TRUE(p.kprime.expanded.ratio_to(falling_factorial_h(m / 2)).has_value()) << m;
  }
  EXPECT_TRUE(prv_det(rs, W("3")).empty);
}

TEST(CharsDets, PrvDeterminantA2Rho) {
  RootSystem rs = RootSystem::build("A2");
  auto p = prv_det(rs, W("1,1"));
  Poly h1 = Poly::variable(2, 0), h2 = Poly::variable(2, 1);
  EXPECT_EQ(p.kprime.expanded, (h1 * h2 * (h1 + h2 + Poly::constant(2, 1))).scaled(-1));
  EXPECT_EQ(p.k.expanded, h1 * h2 * (h1 + h2));
  EXPECT_EQ(p.sum_m, 3);
}

TEST(CharsDets, PrvBracket) {
  Poly a = Poly::variable(1, 0);
  auto b = prv_bracket(a, 2);
  EXPECT_EQ(b.expanded, (a * (a - Poly::constant(1, 1))).scaled(2));
  EXPECT_EQ(prv_bracket(a, 0).expanded, Poly::constant(1, 1));
}
