#include <gtest/gtest.h>

#include "k0ring/moduli.hpp"
#include "k0ring/reprings.hpp"

namespace k0 {
namespace {

LaurentPolynomial AB(const std::string& s) {
  return LaurentPolynomial::parse(alphabets::characters(), s);
}

TEST(Reprings, NormalForm) {
  EXPECT_EQ(GClass::parse("gam^3"), GClass::gam());
  EXPECT_EQ(GClass::parse("eps*gam"), GClass::eps());
  EXPECT_EQ(GClass::parse("gam^-1"), GClass::gam());
  EXPECT_EQ(GClass::gam() * GClass::gam(), GClass::one());
}

TEST(Reprings, SmallClasses) {
  EXPECT_EQ(w_class(0), GClass::parse("1 + gam"));
  EXPECT_EQ(w_class(1), GClass::eps());
  EXPECT_EQ(w_class(2), GClass::parse("eps^2 - lam - lam*gam"));
  EXPECT_EQ(det_class(2), GClass::parse("gam*lam^2"));
  EXPECT_EQ(det_class(3), GClass::lam(3));
  EXPECT_EQ(w_class(-3), GClass::lam(-3) * w_class(3));
}

TEST(Reprings, Recursion) {
  for (int n = 2; n <= 12; ++n)
    ASSERT_EQ(w_class(n - 1) * GClass::eps(),
              w_class(n) + GClass::lam() * GClass::gam() * w_class(n - 2))
        << "n = " << n;
}

TEST(Reprings, Duality) {
  for (int n = 1; n <= 12; ++n) ASSERT_EQ(dual_w_class(n) * GClass::lam(n), w_class(n));
}

TEST(Reprings, GammaAbsorption) {
  for (int n = 1; n <= 12; ++n) ASSERT_EQ(GClass::gam() * w_class(n), w_class(n));
}

TEST(Reprings, RestrictionIsInducedCharacter) {
  for (int n = 1; n <= 12; ++n) {
    const auto expected = LaurentPolynomial::monomial(alphabets::characters(), {n, 0}) +
                          LaurentPolynomial::monomial(alphabets::characters(), {0, n});
    ASSERT_EQ(restrict_to_torus(w_class(n)), expected) << "n = " << n;
  }
}

TEST(Reprings, InductionIsSymmetric) {
  for (int m = -6; m <= 6; ++m)
    for (int n = -6; n <= 6; ++n) {
      ASSERT_EQ(induce_character(m, n), induce_character(n, m));
      const auto chars = LaurentPolynomial::monomial(alphabets::characters(), {m, n});
      if (m != n) {
        ASSERT_EQ(restrict_to_torus(induce_character(m, n)), chars + swap_ab(chars));
      }
    }
  EXPECT_EQ(induce_character(0, 0), GClass::parse("1 + gam"));
  EXPECT_EQ(induce(AB("a^2 + b^2")), w_class(2) + w_class(2));
}

TEST(Reprings, DualFixtures) {
  const auto fx = load_fixture(default_data_dir() / "fixtures" / "dual_w.txt");
  ASSERT_EQ(fx.polys.size(), 2u);
  EXPECT_EQ(GClass(fx.polys[0]), dual_w_class(4));
  EXPECT_EQ(GClass(fx.polys[1]), dual_w_class(6));
}

TEST(Reprings, EulerClass) {
  const auto one = euler_lambda_minus1_dual({1});
  EXPECT_EQ(one, GClass::one() - dual_w_class(1) + GClass::lam(-1));
  EXPECT_EQ(euler_lambda_minus1_dual({1, 2}), one * euler_lambda_minus1_dual({2}));
}

TEST(Reprings, BoundaryRelationsRestrictToTorus) {
  const auto rel = boundary_relations_r1_r2();
  EXPECT_EQ(restrict_to_torus(rel.r1), AB("2 - a^-4 - b^-4 - a^-6 - b^-6 + a^-10 + b^-10"));
}

}  // namespace
}  // namespace k0
