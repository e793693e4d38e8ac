#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "k0ring/zgroebner.hpp"
#include "support/oracle.hpp"

namespace k0 {
namespace {

AlphabetPtr xyz() {
  static const auto a = make_alphabet({"x", "y", "z"});
  return a;
}
LaurentPolynomial X(const std::string& s) { return LaurentPolynomial::parse(xyz(), s); }

TEST(ZGroebner, IntegerBasisKeepsCoefficients) {
  const std::vector<LaurentPolynomial> gens{X("2*x"), X("3*y")};
  const auto gb = strong_gb(gens, make_ring(xyz()));
  EXPECT_TRUE(ideal_contains(gb, X("6*x*y")));
  EXPECT_TRUE(ideal_contains(gb, X("2*x*z + 3*y")));
  // gcd combination: x*y = x*(3y) - y*(2x)
  EXPECT_TRUE(ideal_contains(gb, X("x*y")));
  EXPECT_FALSE(ideal_contains(gb, X("x")));
  EXPECT_FALSE(ideal_contains(gb, X("x + y")));
}

TEST(ZGroebner, LaurentUnitRelations) {
  const auto A = make_alphabet({"u", "v"}, {"u"});
  const auto ring = make_ring(A);
  const std::vector<LaurentPolynomial> gens{LaurentPolynomial::parse(A, "u*v - 1")};
  const auto gb = strong_gb(gens, ring);
  EXPECT_TRUE(ideal_contains(gb, LaurentPolynomial::parse(A, "v - u^-1")));
  EXPECT_EQ(normal_form(LaurentPolynomial::parse(A, "u^-3*v"), gb),
            normal_form(LaurentPolynomial::parse(A, "v^4"), gb));
  EXPECT_EQ(ring->inverse_names(), std::vector<std::string>{"u_inv"});
}

TEST(ZGroebner, QuotientReportOfCyclicGroup) {
  const auto A = make_alphabet({"x"});
  const std::vector<LaurentPolynomial> gens{LaurentPolynomial::parse(A, "x^2"),
                                            LaurentPolynomial::parse(A, "6*x")};
  const auto rep = quotient_report(gens, make_ring(A), {2, 3, 5});
  EXPECT_EQ(rep.rank_Q, 1u);
  EXPECT_FALSE(rep.free);
  EXPECT_EQ(rep.torsion_invariants, std::vector<mpz_class>{6});
  EXPECT_EQ(rep.rank_mod_p.at(2), std::optional<std::size_t>(2));
  EXPECT_EQ(rep.rank_mod_p.at(5), std::optional<std::size_t>(1));
}

TEST(ZGroebner, InfiniteRankThrows) {
  const std::vector<LaurentPolynomial> gens{X("x^2"), X("y")};
  EXPECT_THROW(quotient_report(gens, make_ring(xyz()), {2}), InfiniteRank);
}

TEST(ZGroebner, BudgetExceeded) {
  const std::vector<LaurentPolynomial> gens{X("x^2 - 2*y*z"), X("3*x*y - z^2 + 1"), X("y^2 - x*z")};
  const auto steps = strong_gb(gens, make_ring(xyz())).stats().steps;
  ASSERT_GT(steps, 1u);
  GbOptions exact;
  exact.step_budget = steps;
  EXPECT_NO_THROW(strong_gb(gens, make_ring(xyz()), exact));
  exact.step_budget = steps - 1;
  EXPECT_THROW(strong_gb(gens, make_ring(xyz()), exact), BudgetExceeded);
}

TEST(ZGroebner, EliminationOrderChecks) {
  const auto ring = make_ring(xyz(), {{"x"}, {"y", "z"}});
  const std::vector<LaurentPolynomial> gens{X("x - y^2"), X("x - z^3")};
  const auto gb = strong_gb(gens, ring);
  const auto out = eliminate(gb, {"x"});
  ASSERT_FALSE(out.empty());
  for (const auto& f : out) {
    EXPECT_EQ(f.max_exponent(0), 0);
    EXPECT_TRUE(ideal_contains(gb, f));
  }
  EXPECT_THROW(eliminate(gb, {"y"}), OrderMismatch);
}

TEST(ZGroebner, IntersectionAndContraction) {
  const auto A = make_alphabet({"x", "u"}, {"u"});
  const auto ring = make_ring(A);
  auto L = [&](const char* s) { return LaurentPolynomial::parse(A, s); };
  const std::vector<LaurentPolynomial> I{L("x"), L("2")}, J{L("x - u")};
  const auto meet = ideal_intersect(I, J, ring);
  const auto gb = strong_gb(meet, ring);
  EXPECT_TRUE(ideal_contains(gb, L("x^2 - x*u")));
  EXPECT_TRUE(ideal_contains(gb, L("2*x - 2*u")));
  EXPECT_FALSE(ideal_contains(gb, L("x - u")));
  const std::vector<LaurentPolynomial> K{L("u*x - 1")};
  const auto c = contraction(K, ring);
  EXPECT_TRUE(ideals_equal(c, K, ring));
}

TEST(ZGroebner, SmithAndDeterminant) {
  EXPECT_EQ(smith_invariants({{2, 0}, {0, 3}}), (std::vector<mpz_class>{1, 6}));
  EXPECT_EQ(smith_invariants({{4, 6}, {6, 4}}), (std::vector<mpz_class>{2, 10}));
  EXPECT_EQ(smith_invariants({{0, 0}}), std::vector<mpz_class>{});
  EXPECT_EQ(bareiss_determinant({{2, 1}, {5, 3}}), 1);
  EXPECT_EQ(bareiss_determinant({{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}), -2);
  EXPECT_EQ(primes_up_to(20), (std::vector<unsigned long>{2, 3, 5, 7, 11, 13, 17, 19}));
}

TEST(ZGroebner, CandidateBasis) {
  const auto A = make_alphabet({"x"});
  auto L = [&](const char* s) { return LaurentPolynomial::parse(A, s); };
  const std::vector<LaurentPolynomial> gens{L("x^2 - 1")};
  const std::vector<LaurentPolynomial> good{L("1"), L("x + 1")}, bad{L("1 + x"), L("1 - x")};
  const auto gb = strong_gb(gens, make_ring(A));
  const auto rep = quotient_report(gb, gens, {2, 3});
  EXPECT_TRUE(verify_candidate_basis(gb, rep, good).passed);
  const auto check = verify_candidate_basis(gb, rep, bad);
  EXPECT_FALSE(check.passed);
  ASSERT_TRUE(check.determinant);
  EXPECT_EQ(abs(*check.determinant), 2);
}

TEST(ZGroebner, FreeQuotientWithoutMonomialBasis) {
  // 2x + 3y = 0 leaves Z + Z(x, y)/(2, 3), free of rank 2, but neither x nor
  // y generates the second summand
  const std::vector<LaurentPolynomial> gens{X("x^2"), X("x*y"), X("y^2"), X("z"), X("2*x + 3*y")};
  const auto gb = strong_gb(gens, make_ring(xyz()));
  const auto rep = quotient_report(gb, gens, {2, 3, 5});
  EXPECT_EQ(rep.rank_Q, 2u);
  EXPECT_TRUE(rep.free);
  ASSERT_EQ(rep.basis.size(), 2u);
  EXPECT_TRUE(verify_candidate_basis(gb, rep, rep.basis).passed);
  const std::vector<LaurentPolynomial> monomials{X("1"), X("y")};
  EXPECT_FALSE(verify_candidate_basis(gb, rep, monomials).passed);
  const std::vector<LaurentPolynomial> combos{X("1"), X("x + y")};
  EXPECT_TRUE(verify_candidate_basis(gb, rep, combos).passed);
}

// Random ideals (x^d1, y^d2, z^d3, g1, g2) with a finite quotient, checked
// against dense linear algebra over the monomial box.
class RandomIdeals : public ::testing::Test {
 protected:
  std::mt19937_64 rng{424242};

  oracle::BoxIdeal next() {
    std::uniform_int_distribution<int> deg(1, 3), count(1, 2);
    std::vector<int> d{deg(rng), deg(rng), deg(rng)};
    std::vector<LaurentPolynomial> extra;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) extra.push_back(oracle::random_poly(rng, xyz(), 3, 3, 9));
    return oracle::BoxIdeal(xyz(), d, extra);
  }
};

TEST_F(RandomIdeals, MembershipAgreesWithOracle) {
  int members = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto box = next();
    const auto gb = strong_gb(box.generators(), make_ring(xyz()));
    SCOPED_TRACE(testing::Message() << "trial " << trial);
    for (int j = 0; j < 4; ++j) {
      const auto f = oracle::random_poly(rng, xyz(), 3, 3, 9);
      const bool in = box.contains(f);
      members += in;
      ASSERT_EQ(normal_form(f, gb).is_zero(), in) << f;
    }
    LaurentPolynomial combo(xyz());
    for (const auto& g : box.generators()) combo += oracle::random_poly(rng, xyz(), 2, 2, 5) * g;
    ASSERT_TRUE(box.contains(combo));
    ASSERT_TRUE(ideal_contains(gb, combo));
  }
  RecordProperty("random_members", members);
}

TEST_F(RandomIdeals, QuotientStructureAgreesWithOracle) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto box = next();
    SCOPED_TRACE(testing::Message() << "trial " << trial);
    const auto rep = quotient_report(box.generators(), make_ring(xyz()), {2, 3, 5, 7});
    ASSERT_EQ(rep.rank_Q, box.rank_Q());
    ASSERT_EQ(rep.torsion_invariants, box.torsion());
    ASSERT_EQ(rep.free, box.torsion().empty());
    for (const auto& [p, r] : rep.rank_mod_p) ASSERT_EQ(r, std::optional(box.rank_mod_p(p)));
    // every prime of the torsion is among the tested primes
    for (auto t : box.torsion())
      for (unsigned long p : primes_up_to(100))
        if (t % p == 0) {
          ASSERT_TRUE(std::count(rep.prime_set.begin(), rep.prime_set.end(), p)) << p;
        }
    if (rep.max_leading_coefficient <= 100000) {
      for (unsigned long p : primes_up_to(rep.max_leading_coefficient.get_ui()))
        ASSERT_TRUE(std::count(rep.prime_set.begin(), rep.prime_set.end(), p));
    }
    if (rep.free) {
      const auto gb = strong_gb(box.generators(), make_ring(xyz()));
      ASSERT_TRUE(verify_candidate_basis(gb, rep, rep.basis).passed);
    }
  }
}

TEST_F(RandomIdeals, DeterministicUnderPermutation) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto box = next();
    auto gens = box.generators();
    const auto gb = strong_gb(gens, make_ring(xyz()));
    std::shuffle(gens.begin(), gens.end(), rng);
    ASSERT_EQ(strong_gb(gens, make_ring(xyz())).generators(), gb.generators());
    std::reverse(gens.begin(), gens.end());
    ASSERT_EQ(strong_gb(gens, make_ring(xyz())).generators(), gb.generators());
  }
}

TEST_F(RandomIdeals, CriteriaDoNotChangeTheBasis) {
  GbOptions off;
  off.product_criterion = false;
  off.chain_criterion = false;
  for (int trial = 0; trial < 100; ++trial) {
    const auto box = next();
    const auto on = strong_gb(box.generators(), make_ring(xyz()));
    ASSERT_EQ(strong_gb(box.generators(), make_ring(xyz()), off).generators(), on.generators());
  }
}

TEST_F(RandomIdeals, EliminationStaysInTheIdeal) {
  const auto ring = make_ring(xyz(), {{"x"}, {"y", "z"}});
  for (int trial = 0; trial < 50; ++trial) {
    const auto box = next();
    const auto gb = strong_gb(box.generators(), ring);
    for (const auto& f : eliminate(gb, {"x"})) {
      ASSERT_EQ(f.max_exponent(0), 0);
      ASSERT_TRUE(box.contains(f));
    }
  }
}

TEST(Oracle, InvariantFactors) {
  EXPECT_EQ(oracle::invariant_factors({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}),
            (std::vector<mpz_class>{2, 6, 12}));
  EXPECT_EQ(smith_invariants({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}),
            (std::vector<mpz_class>{2, 6, 12}));
}

}  // namespace
}  // namespace k0
