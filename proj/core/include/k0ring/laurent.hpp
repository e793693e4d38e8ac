#pragma once

// Exact multivariate Laurent polynomials over the integers.
//
// A LaurentPolynomial is a finite map from exponent vectors to nonzero
// integer coefficients. Negative exponents are only allowed on variables that
// the alphabet marks invertible. Terms are kept in ascending lexicographic
// order of exponent vectors; that order is also the serialization order.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k0ring/errors.hpp"

namespace k0 {

class VariableAlphabet {
 public:
  /// `invertible` must be a subset of `names`; names must be unique and
  /// start with a letter.
  VariableAlphabet(std::vector<std::string> names,
                   const std::vector<std::string>& invertible = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  bool invertible(std::size_t i) const { return invertible_.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws DomainError for unknown names.
  std::size_t index(std::string_view name) const;

  /// e.g. "a~,b~,t~" -- invertible names carry a trailing '~'.
  std::string describe() const;
  /// Inverse of describe(); accepts commas and/or whitespace as separators.
  static std::shared_ptr<const VariableAlphabet> parse(std::string_view text);

  friend bool operator==(const VariableAlphabet& x, const VariableAlphabet& y) {
    return x.names_ == y.names_ && x.invertible_ == y.invertible_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<bool> invertible_;
};

using AlphabetPtr = std::shared_ptr<const VariableAlphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names,
                          const std::vector<std::string>& invertible = {});

/// Alphabets shared by the downstream modules.
namespace alphabets {
AlphabetPtr characters();        // a~ b~
AlphabetPtr characters_t();      // a~ b~ t~
AlphabetPtr symmetric();         // e1 e2~
AlphabetPtr symmetric_t();       // e1 e2~ t~
AlphabetPtr g_classes();         // eps lam~ gam~
AlphabetPtr boundary();          // eps lam~ del~
AlphabetPtr hodge();             // eps lam~
}  // namespace alphabets

bool same_alphabet(const AlphabetPtr& x, const AlphabetPtr& y);

using Exponents = std::vector<int>;

class LaurentPolynomial {
 public:
  using TermMap = std::map<Exponents, mpz_class>;

  explicit LaurentPolynomial(AlphabetPtr alphabet);

  static LaurentPolynomial constant(AlphabetPtr alphabet, const mpz_class& c);
  static LaurentPolynomial variable(AlphabetPtr alphabet, std::string_view name);
  static LaurentPolynomial monomial(AlphabetPtr alphabet, Exponents exps,
                                    const mpz_class& c = 1);
  /// Parses the shared text grammar `term (+|- term)*` where a term is
  /// `[int][*var^int]*`. Whitespace is ignored.
  static LaurentPolynomial parse(AlphabetPtr alphabet, std::string_view text);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  mpz_class coefficient(const Exponents& exps) const;

  /// Single term with coefficient +-1 and negative exponents only on
  /// invertible variables.
  bool is_unit_monomial() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;

  /// Smallest / largest exponent of variable `var` over all terms (0 for the
  /// zero polynomial).
  int min_exponent(std::size_t var) const;
  int max_exponent(std::size_t var) const;

  /// Adds `c * x^exps`; drops the term if it cancels.
  void add_term(const Exponents& exps, const mpz_class& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& g);
  LaurentPolynomial& operator-=(const LaurentPolynomial& g);
  LaurentPolynomial& operator*=(const LaurentPolynomial& g);
  LaurentPolynomial& operator*=(const mpz_class& c);
  LaurentPolynomial operator-() const;

  /// Nonnegative power; negative powers only for unit monomials.
  LaurentPolynomial pow(int n) const;
  /// Multiplies by the monomial x^shift (shift must respect invertibility).
  LaurentPolynomial shifted(const Exponents& shift) const;

  /// Re-expresses the polynomial over `target`; variable i goes to the target
  /// variable named `rename(name(i))` (identity when not listed). Variables
  /// missing from the target must not occur.
  LaurentPolynomial over(AlphabetPtr target,
                         const std::map<std::string, std::string>& rename = {}) const;

  std::string to_string() const;

  friend bool operator==(const LaurentPolynomial& f, const LaurentPolynomial& g);

 private:
  void check_exponents(const Exponents& exps) const;

  AlphabetPtr alphabet_;
  TermMap terms_;
};

LaurentPolynomial operator+(LaurentPolynomial f, const LaurentPolynomial& g);
LaurentPolynomial operator-(LaurentPolynomial f, const LaurentPolynomial& g);
LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial operator*(LaurentPolynomial f, const mpz_class& c);
LaurentPolynomial operator*(const mpz_class& c, LaurentPolynomial f);

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& f);

enum class ArithOp { add, sub, mul };

/// Dispatching form of + - * used by the command line and tests.
LaurentPolynomial lp_arith(const LaurentPolynomial& f, const LaurentPolynomial& g,
                           ArithOp op);

/// Image of f under var -> value. Invertible variables only accept unit
/// monomials so that negative powers stay meaningful.
LaurentPolynomial substitute(const LaurentPolynomial& f, std::string_view var,
                             const LaurentPolynomial& value);

/// Ring homomorphism to `target`: each variable goes to its entry in
/// `images`, or to the target variable of the same name. Variables occurring
/// with negative exponents need unit monomial images.
LaurentPolynomial ring_map(const LaurentPolynomial& f, AlphabetPtr target,
                           const std::map<std::string, LaurentPolynomial>& images);

/// q with f = q * g. Throws DivisionByZero for g = 0 and InexactDivision when
/// no Laurent polynomial quotient exists.
LaurentPolynomial exact_divide(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// Exchanges the exponents of `a` and `b`.
LaurentPolynomial swap_ab(const LaurentPolynomial& f);

/// Formal quotient numerator / denominator. No gcd cancellation happens;
/// to_polynomial() performs the final exact division.
class RationalClass {
 public:
  RationalClass(LaurentPolynomial numerator, LaurentPolynomial denominator);
  explicit RationalClass(LaurentPolynomial polynomial);

  const LaurentPolynomial& numerator() const { return numerator_; }
  const LaurentPolynomial& denominator() const { return denominator_; }
  const AlphabetPtr& alphabet() const { return numerator_.alphabet(); }

  /// Throws InexactDivision if the denominator does not divide.
  LaurentPolynomial to_polynomial() const;

  friend bool operator==(const RationalClass& x, const RationalClass& y);

 private:
  LaurentPolynomial numerator_;
  LaurentPolynomial denominator_;
};

/// Sum over a common denominator with the numerator fully expanded. Equal
/// denominators are merged without cross-multiplication.
RationalClass rc_sum(std::span<const RationalClass> classes);

}  // namespace k0
