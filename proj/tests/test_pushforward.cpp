#include <gtest/gtest.h>

#include "k0ring/ktproj.hpp"
#include "k0ring/moduli.hpp"
#include "k0ring/pushforward.hpp"
#include "support/oracle.hpp"

namespace k0 {
namespace {

LaurentPolynomial P(const std::string& s) {
  return LaurentPolynomial::parse(alphabets::characters_t(), s);
}

TEST(ProjSpace, Presentation) {
  EXPECT_EQ(proj_presentation(1).relation, P("1 - a*t^-1") * P("1 - b*t^-1"));
  EXPECT_EQ(proj_weight_factor(2, 1), P("1 - a*b*t^-1"));
  EXPECT_EQ(hypersurface_class(2, P("a*b")), P("1 - a^-1*b^-1*t^-2"));
  EXPECT_THROW(proj_presentation(-1), DomainError);
  EXPECT_THROW(fixed_point_class(3, 4), DomainError);
}

TEST(ProjSpace, RelationFactorsThroughEveryFixedPoint) {
  for (int N = 0; N <= 8; ++N)
    for (int k = 0; k <= N; ++k)
      ASSERT_EQ(fixed_point_class(N, k) * proj_weight_factor(N, k), proj_presentation(N).relation);
}

TEST(ProjSpace, FixedPointClassShape) {
  for (int N = 1; N <= 8; ++N)
    for (int k = 0; k <= N; ++k) {
      auto rest = fixed_point_class(N, k);
      for (int i = 0; i <= N; ++i)
        if (i != k) rest = exact_divide(rest, proj_weight_factor(N, i));
      ASSERT_EQ(rest, P("1"));
      ASSERT_EQ(swap_ab(fixed_point_class(N, k)), fixed_point_class(N, N - k));
    }
}

TEST(Pushforward, DomainChecks) {
  EXPECT_THROW(pushforward_power_map(4, 1, 6, 0), DomainError);
  EXPECT_THROW(pushforward_power_map(2, 0, 6, 0), DomainError);
  EXPECT_THROW(pushforward_power_map(2, 4, 6, 0), DomainError);
  EXPECT_THROW(pushforward_power_map(2, 1, 6, 2), DomainError);
  EXPECT_THROW(conormal_euler(1, 1, {2, 0}), DomainError);
}

TEST(Pushforward, ConormalEulerIsPolynomial) {
  const auto e = conormal_euler(1, 0, {0, 0});
  EXPECT_EQ(e.denominator(), P("1"));
  EXPECT_EQ(e.numerator(), P("1 - a^-1*b"));
}

TEST(Pushforward, VeroneseFixtures) {
  const auto fx = load_fixture(default_data_dir() / "fixtures" / "veronese.txt");
  EXPECT_EQ(pushforward_power_map(2, 1, 2, 0).value, fx.polys.at(0));
  EXPECT_EQ(pushforward_power_map(2, 1, 2, 1).value, fx.polys.at(1));
  EXPECT_EQ(fx.polys.at(0), P("1 - a*b*t^-1") * P("1 + a*b*t^-1"));
  EXPECT_EQ(fx.polys.at(1), P("a + b") * P("1 - a*b*t^-1"));
}

TEST(Pushforward, SexticFixtures) {
  const auto fx = load_fixture(default_data_dir() / "fixtures" / "sextic_pushforwards.txt");
  EXPECT_EQ(pushforward_power_map(2, 1, 6, 0).value, fx.polys.at(0));
  EXPECT_EQ(pushforward_power_map(2, 1, 6, 1).value, fx.polys.at(1));
}

TEST(Pushforward, ChartValuesInCompleteHomogeneous) {
  const auto E = alphabets::symmetric();
  const auto e1 = LaurentPolynomial::parse(E, "e1");
  const auto e2i = LaurentPolynomial::parse(E, "e2^-1");
  EXPECT_EQ(pushforward_on_moduli_chart(2, 1, 6, 0).poly(),
            h(0) + e1 * e2i * h(3) - e2i * e2i * h(8));
  EXPECT_EQ(pushforward_on_moduli_chart(2, 1, 6, 1).poly(), h(1) + e1 * h(2) - e2i * h(7));
}

struct Case {
  int q, r, N, k;
};

std::vector<Case> all_cases() {
  std::vector<Case> out;
  for (int q = 2; q <= 3; ++q)
    for (int r = 1; r <= 3; ++r)
      for (int N = q * r; N <= 8; ++N)
        for (int k = 0; k <= r; ++k) out.push_back({q, r, N, k});
  return out;
}

TEST(PushforwardProperties, PolynomialityCertificate) {
  for (const auto& c : all_cases()) {
    const auto res = pushforward_power_map(c.q, c.r, c.N, c.k);
    SCOPED_TRACE(testing::Message() << c.q << " " << c.r << " " << c.N << " " << c.k);
    ASSERT_TRUE(res.certificate.exact_division);
    ASSERT_TRUE(res.certificate.multiply_back_verified);
    ASSERT_EQ(res.certificate.fixed_points, (c.r + 1) * (c.N - c.q * c.r + 1));
  }
}

TEST(PushforwardProperties, SymmetryAndDegreeBound) {
  for (const auto& c : all_cases()) {
    const auto v = pushforward_power_map(c.q, c.r, c.N, c.k).value;
    ASSERT_EQ(swap_ab(v), v);
    ASSERT_GE(v.min_exponent(2), -c.N);
    ASSERT_LE(v.max_exponent(2), 0);
  }
}

TEST(PushforwardProperties, WellDefinedInPresentedRing) {
  for (const auto& c : all_cases()) {
    const auto rel = proj_presentation(c.N).relation;
    const auto v = pushforward_power_map(c.q, c.r, c.N, c.k).value;
    ASSERT_EQ(exact_divide(v * rel, rel), v);
  }
}

// Independent numeric evaluation of the fixed-point sum.
TEST(PushforwardProperties, AgreesWithNumericLocalization) {
  const std::vector<std::vector<mpq_class>> points = {
      {mpq_class(2, 3), mpq_class(5, 7), mpq_class(11, 13)},
      {mpq_class(-3, 2), mpq_class(7, 5), mpq_class(2)},
      {mpq_class(3), mpq_class(-1, 4), mpq_class(-5, 3)}};
  for (const auto& c : all_cases()) {
    const auto v = pushforward_power_map(c.q, c.r, c.N, c.k).value;
    for (const auto& pt : points)
      ASSERT_EQ(oracle::evaluate(v, pt),
                oracle::localization_sum(c.q, c.r, c.N, c.k, pt[0], pt[1], pt[2]));
  }
}

}  // namespace
}  // namespace k0
