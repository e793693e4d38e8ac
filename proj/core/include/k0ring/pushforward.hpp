#pragma once

// Torus localization for the power maps
//   P^r x P^s -> P^N,  (f, g) -> f^q g,  s = N - q r,
// computing the pushforward of x_1^k = [O(1, 0)]^k into K_0(P^N, T2).

#include <map>
#include <vector>

#include "k0ring/laurent.hpp"
#include "k0ring/symfun.hpp"

namespace k0 {

struct FixedPoint {
  int i;  // coordinate point of P^r
  int j;  // coordinate point of P^s
};

/// Record of the fixed-point summation. The sum is only accepted once the
/// common denominator divides the numerator exactly and the product checks.
struct PushforwardCertificate {
  int fixed_points = 0;
  /// Common denominator prod_d (1 - (a^-1 b)^d)^{mult}, keyed by d.
  std::map<int, int> denominator_factors;
  std::size_t numerator_terms = 0;
  bool exact_division = false;
  bool multiply_back_verified = false;
};

struct PushforwardResult {
  int q, r, N, k;
  LaurentPolynomial value;  // over {a~, b~, t~}
  PushforwardCertificate certificate;
};

/// lambda_{-1} of the conormal space at P_{i,j}, a Laurent polynomial in a, b
/// (denominator 1).
RationalClass conormal_euler(int r, int s, FixedPoint p);

/// q in {2, 3}, r >= 1, N - q r >= 0, 0 <= k <= r. Throws InexactDivision if
/// the localization sum does not cancel.
PushforwardResult pushforward_power_map(int q, int r, int N, int k);

/// The pushforward with t -> (ab)^2, rewritten in e1, e2.
SymmetricExpression pushforward_on_moduli_chart(int q, int r, int N, int k);

}  // namespace k0
