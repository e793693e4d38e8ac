#pragma once

// Reference implementations used only by the tests: dense integer linear
// algebra over explicit monomial boxes, and numeric fixed-point sums.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "k0ring/laurent.hpp"

namespace k0::oracle {

using Row = std::vector<mpz_class>;
using Matrix = std::vector<Row>;

/// Row echelon form over Z with positive pivots (rows of zeros dropped).
Matrix hermite(Matrix rows);

/// Whether v lies in the Z-span of the rows of an echelon matrix.
bool in_row_span(const Matrix& echelon, Row v);

/// Invariant factors of the row lattice, computed from the echelon form by
/// alternating row and column gcd steps. Zero factors are omitted.
std::vector<mpz_class> invariant_factors(const Matrix& rows);

/// Ideal (x1^d1, ..., xn^dn, extra...) of Z[x1..xn] with every di >= 1. The
/// quotient is a finitely generated abelian group on the monomials of the
/// box prod [0, di).
class BoxIdeal {
 public:
  BoxIdeal(AlphabetPtr alphabet, std::vector<int> degrees,
           std::vector<LaurentPolynomial> extra);

  const std::vector<LaurentPolynomial>& generators() const { return gens_; }
  std::size_t box_size() const { return box_.size(); }

  bool contains(const LaurentPolynomial& f) const;
  std::size_t rank_Q() const;
  /// Invariant factors > 1 of the torsion of the quotient.
  std::vector<mpz_class> torsion() const;
  std::size_t rank_mod_p(unsigned long p) const;

 private:
  Row coordinates(const LaurentPolynomial& f) const;

  AlphabetPtr alphabet_;
  std::vector<int> degrees_;
  std::vector<LaurentPolynomial> gens_;
  std::vector<Exponents> box_;
  Matrix echelon_;
  std::vector<mpz_class> factors_;
};

/// Random polynomial over `alphabet`: up to `terms` terms of total degree at
/// most `degree`, coefficients in [-bound, bound]. Exponents of invertible
/// variables range over [-degree, degree].
LaurentPolynomial random_poly(std::mt19937_64& rng, const AlphabetPtr& alphabet, int terms,
                              int degree, int bound);

/// Evaluates a polynomial over {a~, b~, t~} (or a subset) at rationals.
mpq_class evaluate(const LaurentPolynomial& f, const std::vector<mpq_class>& point);

/// Atiyah-Bott sum for the pushforward of O(1,0)^k along
/// P^r x P^s -> P^N, (f, g) -> f^q g, evaluated at (a, b, t). Characters of
/// coordinate points and tangent weights are written out directly.
mpq_class localization_sum(int q, int r, int N, int k, const mpq_class& a, const mpq_class& b,
                           const mpq_class& t);

}  // namespace k0::oracle
