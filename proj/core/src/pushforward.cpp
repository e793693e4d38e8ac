#include "k0ring/pushforward.hpp"

#include <cstdlib>

#include "k0ring/ktproj.hpp"

namespace k0 {

namespace {

void check_point(int r, int s, FixedPoint p) {
  if (r < 0 || s < 0 || p.i < 0 || p.i > r || p.j < 0 || p.j > s)
    throw DomainError("fixed point (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                      ") out of range for P^" + std::to_string(r) + " x P^" +
                      std::to_string(s));
}

const AlphabetPtr& abt() {
  static const AlphabetPtr p = alphabets::characters_t();
  return p;
}

// x = a^-1 b; every tangent weight ratio at a coordinate point is a power of x.
LaurentPolynomial x_power(int d) { return LaurentPolynomial::monomial(abt(), {-d, d, 0}); }

LaurentPolynomial one_minus_x(int d) {
  return LaurentPolynomial::constant(abt(), 1) - x_power(d);
}

// Euler class of one projective factor at point i of P^n as
//   unit * prod_{d in factors} (1 - x^d),  all d > 0,
// using 1 - x^-d = -x^-d (1 - x^d).
struct FactoredEuler {
  LaurentPolynomial unit;
  std::map<int, int> factors;
};

void accumulate_factor(int n, int i, FactoredEuler& acc) {
  for (int k = 0; k <= n; ++k) {
    if (k == i) continue;
    const int d = k - i;  // weight ratio a^{n-k} b^k / a^{n-i} b^i = x^d
    if (d > 0) {
      ++acc.factors[d];
    } else {
      acc.unit *= -x_power(d);
      ++acc.factors[-d];
    }
  }
}

}  // namespace

RationalClass conormal_euler(int r, int s, FixedPoint p) {
  check_point(r, s, p);
  LaurentPolynomial e = LaurentPolynomial::constant(abt(), 1);
  for (int k = 0; k <= r; ++k)
    if (k != p.i) e *= one_minus_x(k - p.i);
  for (int k = 0; k <= s; ++k)
    if (k != p.j) e *= one_minus_x(k - p.j);
  return RationalClass(std::move(e));
}

PushforwardResult pushforward_power_map(int q, int r, int N, int k) {
  if (q != 2 && q != 3) throw DomainError("power map exponent q must be 2 or 3");
  if (r < 1) throw DomainError("r must be >= 1");
  const int s = N - q * r;
  if (s < 0) throw DomainError("N - q*r must be >= 0");
  if (k < 0 || k > r) throw DomainError("k must lie in 0..r");

  struct Contribution {
    LaurentPolynomial numerator;
    std::map<int, int> factors;
  };
  std::vector<Contribution> parts;
  std::map<int, int> common;  // multiset lcm of all denominators
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= s; ++j) {
      FactoredEuler eu{LaurentPolynomial::constant(abt(), 1), {}};
      accumulate_factor(r, i, eu);
      accumulate_factor(s, j, eu);
      // weight of O(1)^k at P_{i,j}, divided by the unit part of the Euler class
      LaurentPolynomial num = LaurentPolynomial::monomial(abt(), {(r - i) * k, i * k, 0});
      num *= eu.unit.pow(-1);
      num *= fixed_point_class(N, q * i + j);
      for (const auto& [d, m] : eu.factors) common[d] = std::max(common[d], m);
      parts.push_back({std::move(num), std::move(eu.factors)});
    }
  }

  PushforwardCertificate cert;
  cert.fixed_points = static_cast<int>(parts.size());
  cert.denominator_factors = common;

  LaurentPolynomial numerator(abt());
  for (auto& part : parts) {
    LaurentPolynomial term = std::move(part.numerator);
    for (const auto& [d, m] : common) {
      const int missing = m - (part.factors.count(d) ? part.factors.at(d) : 0);
      for (int c = 0; c < missing; ++c) term *= one_minus_x(d);
    }
    numerator += term;
  }
  LaurentPolynomial denominator = LaurentPolynomial::constant(abt(), 1);
  for (const auto& [d, m] : common)
    for (int c = 0; c < m; ++c) denominator *= one_minus_x(d);

  cert.numerator_terms = numerator.size();
  LaurentPolynomial value = exact_divide(numerator, denominator);
  cert.exact_division = true;
  cert.multiply_back_verified = (value * denominator == numerator);
  if (!cert.multiply_back_verified) throw InexactDivision("localization sum check failed");
  return {q, r, N, k, std::move(value), std::move(cert)};
}

SymmetricExpression pushforward_on_moduli_chart(int q, int r, int N, int k) {
  const auto result = pushforward_power_map(q, r, N, k);
  const auto ab2 = LaurentPolynomial::monomial(abt(), {2, 2, 0});
  const auto chart = substitute(result.value, "t", ab2).over(alphabets::characters());
  return from_characters(chart);
}

}  // namespace k0
