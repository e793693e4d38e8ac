#include <gtest/gtest.h>

#include <random>

#include "k0ring/symfun.hpp"
#include "support/oracle.hpp"

namespace k0 {
namespace {

LaurentPolynomial AB(const std::string& s) {
  return LaurentPolynomial::parse(alphabets::characters(), s);
}
LaurentPolynomial E(const std::string& s) {
  return LaurentPolynomial::parse(alphabets::symmetric(), s);
}

TEST(Symfun, CompleteHomogeneousCharacters) {
  for (int n = 0; n <= 20; ++n) {
    LaurentPolynomial expected(alphabets::characters());
    for (int i = 0; i <= n; ++i) expected += LaurentPolynomial::monomial(expected.alphabet(), {n - i, i});
    ASSERT_EQ(to_characters(complete_homogeneous(n)), expected) << "n = " << n;
  }
}

TEST(Symfun, NewtonStyleIdentities) {
  EXPECT_EQ(h(1), E("e1"));
  EXPECT_EQ(h(2) - E("e1") * h(1) + E("e2") * h(0), E("0"));
  for (int n = 2; n <= 20; ++n) ASSERT_EQ(h(n), E("e1") * h(n - 1) - E("e2") * h(n - 2));
  EXPECT_EQ(h(-1), E("0"));
}

TEST(Symfun, KnownConversions) {
  EXPECT_EQ(from_characters(AB("a^2 + b^2")).poly(), E("e1^2 - 2*e2"));
  EXPECT_EQ(from_characters(AB("a^-1 + b^-1")).poly(), E("e1*e2^-1"));
  EXPECT_EQ(SymmetricExpression::parse("e1*e2^-1").poly(), E("e1*e2^-1"));
  EXPECT_THROW(from_characters(AB("a")), NotSymmetric);
  EXPECT_THROW(from_characters(AB("a^2*b + b")), NotSymmetric);
}

TEST(Symfun, GradedConversion) {
  const auto abt = alphabets::characters_t();
  const auto f = LaurentPolynomial::parse(abt, "a + b - a*b*t^-1");
  EXPECT_EQ(from_characters_graded(f, "t", alphabets::symmetric_t()),
            LaurentPolynomial::parse(alphabets::symmetric_t(), "e1 - e2*t^-1"));
}

TEST(SymfunProperties, RoundtripFromSymmetric) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const SymmetricExpression s(oracle::random_poly(rng, alphabets::symmetric(), 5, 4, 9));
    ASSERT_EQ(from_characters(to_characters(s)), s);
  }
}

TEST(SymfunProperties, RoundtripFromCharacters) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 1000; ++i) {
    const auto g = oracle::random_poly(rng, alphabets::characters(), 5, 4, 9);
    const auto f = g + swap_ab(g);
    ASSERT_EQ(to_characters(from_characters(f)), f);
  }
}

}  // namespace
}  // namespace k0
