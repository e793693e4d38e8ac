#pragma once

// Symmetric Laurent polynomials in two characters a, b written in the
// elementary basis e1 = a + b, e2 = ab (e2 invertible).

#include "k0ring/laurent.hpp"

namespace k0 {

/// A Laurent polynomial over {e1, e2~}.
class SymmetricExpression {
 public:
  explicit SymmetricExpression(LaurentPolynomial poly);
  static SymmetricExpression parse(std::string_view text);

  const LaurentPolynomial& poly() const { return poly_; }
  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const SymmetricExpression&, const SymmetricExpression&) = default;

 private:
  LaurentPolynomial poly_;
};

/// h_n via h_n = e1 h_{n-1} - e2 h_{n-2}, h_{-1} = 0, h_0 = 1. Memoized.
SymmetricExpression complete_homogeneous(int n);

/// Convenience: h_n as a plain polynomial over {e1, e2~}.
const LaurentPolynomial& h(int n);

/// e1 -> a + b, e2 -> ab.
LaurentPolynomial to_characters(const SymmetricExpression& s);

/// Unique preimage of an a<->b symmetric polynomial. Throws NotSymmetric.
SymmetricExpression from_characters(const LaurentPolynomial& f);

/// Applies from_characters to each power of `var` separately. Input lives
/// over an alphabet containing a, b and `var`; output over {e1, e2~, var}.
LaurentPolynomial from_characters_graded(const LaurentPolynomial& f, std::string_view var,
                                         const AlphabetPtr& target);

}  // namespace k0
