#include "k0ring/ktproj.hpp"

namespace k0 {

LaurentPolynomial proj_weight_factor(int N, int k) {
  const auto alpha = alphabets::characters_t();
  return LaurentPolynomial::constant(alpha, 1) -
         LaurentPolynomial::monomial(alpha, {N - k, k, -1});
}

ProjSpacePresentation proj_presentation(int N) {
  if (N < 0) throw DomainError("projective space dimension must be >= 0");
  LaurentPolynomial rel = LaurentPolynomial::constant(alphabets::characters_t(), 1);
  for (int k = 0; k <= N; ++k) rel *= proj_weight_factor(N, k);
  return {N, std::move(rel)};
}

LaurentPolynomial fixed_point_class(int N, int k) {
  if (N < 0 || k < 0 || k > N)
    throw DomainError("fixed point index " + std::to_string(k) + " out of range for P^" +
                      std::to_string(N));
  LaurentPolynomial cls = LaurentPolynomial::constant(alphabets::characters_t(), 1);
  for (int i = 0; i <= N; ++i)
    if (i != k) cls *= proj_weight_factor(N, i);
  return cls;
}

LaurentPolynomial hypersurface_class(int d, const LaurentPolynomial& chi) {
  if (d < 1) throw DomainError("hypersurface degree must be >= 1");
  const auto alpha = alphabets::characters_t();
  LaurentPolynomial c = chi.over(alpha);
  if (!c.is_monomial() || c.max_exponent(2) != 0 || c.terms().begin()->second != 1)
    throw DomainError("hypersurface character must be a unit monomial in a, b: " +
                      chi.to_string());
  const auto t_inv_d = LaurentPolynomial::monomial(alpha, {0, 0, -d});
  return LaurentPolynomial::constant(alpha, 1) - c.pow(-1) * t_inv_d;
}

}  // namespace k0
