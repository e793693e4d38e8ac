#pragma once

// Strong Groebner bases over Z for ideals of Laurent polynomial rings.
//
// A Laurent ring Z[x1..xn, y1^+-1..ym^+-1] is handled as the polynomial ring
// with an extra variable y_inv per invertible y and the unit relations
// y*y_inv - 1, which join every generator set automatically.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "k0ring/laurent.hpp"

namespace k0 {

/// Block order: blocks compared left to right by total degree, graded
/// reverse lexicographic inside a block.
struct TermOrder {
  std::vector<std::vector<std::string>> blocks;

  /// e.g. "[w] > [lam_inv,del_inv] > [eps,lam,del]"
  std::string describe() const;
  friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

class PolynomializedRing {
 public:
  /// `base_blocks` partitions the base variables into elimination blocks
  /// (default: one block in alphabet order). `tags` are extra polynomial
  /// variables placed in a leading block of their own.
  explicit PolynomializedRing(AlphabetPtr base,
                              std::vector<std::vector<std::string>> base_blocks = {},
                              std::vector<std::string> tags = {});

  const AlphabetPtr& base() const { return base_; }
  /// Tags, then inverse variables, then base variables; nothing invertible.
  const AlphabetPtr& poly_alphabet() const { return poly_; }
  const TermOrder& order() const { return order_; }
  const std::vector<std::string>& tags() const { return tags_; }
  const std::vector<std::vector<std::string>>& base_blocks() const { return base_blocks_; }
  /// y_inv for every invertible base variable y, in base order.
  std::vector<std::string> inverse_names() const;
  /// Sizes of the order blocks over poly_alphabet().
  const std::vector<std::size_t>& block_sizes() const { return block_sizes_; }

  /// Writes each y^-k as y_inv^k.
  LaurentPolynomial to_poly(const LaurentPolynomial& f) const;
  /// Inverse of to_poly modulo unit relations. Tags must not occur.
  LaurentPolynomial from_poly(const LaurentPolynomial& p) const;
  /// y*y_inv - 1 for every invertible base variable, over poly_alphabet().
  std::vector<LaurentPolynomial> unit_relations() const;

  /// Same base and blocks with `tags` prepended.
  std::shared_ptr<const PolynomializedRing> with_tags(std::vector<std::string> tags) const;

 private:
  AlphabetPtr base_;
  AlphabetPtr poly_;
  std::vector<std::vector<std::string>> base_blocks_;
  std::vector<std::string> tags_;
  TermOrder order_;
  std::vector<std::size_t> block_sizes_;
  std::vector<std::size_t> base_to_poly_;      // base index -> poly index
  std::vector<std::optional<std::size_t>> inv_of_;  // base index -> y_inv index
};

using RingPtr = std::shared_ptr<const PolynomializedRing>;

/// One block holding every base variable.
RingPtr make_ring(AlphabetPtr base, std::vector<std::vector<std::string>> base_blocks = {});

struct GbOptions {
  std::uint64_t step_budget = 10'000'000;
  bool product_criterion = true;
  bool chain_criterion = true;
};

struct GbStats {
  std::uint64_t steps = 0;
  std::uint64_t pairs_processed = 0;
  std::uint64_t pairs_skipped = 0;
  std::size_t max_basis = 0;
};

class StrongGroebnerBasis {
 public:
  struct Impl;

  StrongGroebnerBasis(RingPtr ring, std::shared_ptr<const Impl> impl);

  const PolynomializedRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const TermOrder& order() const { return ring_->order(); }
  bool reduced() const { return true; }
  /// Reduced basis over ring().poly_alphabet(), sorted by decreasing leading
  /// monomial, leading coefficients positive.
  const std::vector<LaurentPolynomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  /// Leading coefficient times leading monomial of each generator.
  std::vector<LaurentPolynomial> leading_terms() const;
  mpz_class max_leading_coefficient() const;
  const GbStats& stats() const;
  const Impl& impl() const { return *impl_; }

  friend bool operator==(const StrongGroebnerBasis& x, const StrongGroebnerBasis& y) {
    return x.generators_ == y.generators_;
  }

 private:
  RingPtr ring_;
  std::shared_ptr<const Impl> impl_;
  std::vector<LaurentPolynomial> generators_;
};

/// gens over ring->base(). Throws BudgetExceeded when the step budget runs
/// out and DomainError when there is nothing to compute with.
StrongGroebnerBasis strong_gb(std::span<const LaurentPolynomial> gens, RingPtr ring,
                              const GbOptions& options = {});
/// gens over ring->poly_alphabet() (may involve tags).
StrongGroebnerBasis strong_gb_poly(std::span<const LaurentPolynomial> gens, RingPtr ring,
                                   const GbOptions& options = {});

/// Remainder of f (over the base alphabet) on division by gb, returned over
/// the base alphabet. Zero iff f lies in the ideal.
LaurentPolynomial normal_form(const LaurentPolynomial& f, const StrongGroebnerBasis& gb);
/// Same for f over the polynomial alphabet; result stays there.
LaurentPolynomial normal_form_poly(const LaurentPolynomial& f, const StrongGroebnerBasis& gb);
bool ideal_contains(const StrongGroebnerBasis& gb, const LaurentPolynomial& f);

/// Generators of gb's ideal intersected with the subring without
/// `drop_vars`, mapped to the base alphabet. `drop_vars` (names in the
/// polynomial alphabet) must be exactly the variables of some leading blocks
/// of the order; otherwise throws OrderMismatch.
std::vector<LaurentPolynomial> eliminate(const StrongGroebnerBasis& gb,
                                         const std::vector<std::string>& drop_vars);

/// Generators of I cap J over the Laurent ring. I and J are first contracted
/// to the polynomial subring (inverse variables eliminated); the tag
/// construction (w I, (1 - w) J) then runs there without unit relations, and
/// the result generates I cap J after extension.
std::vector<LaurentPolynomial> ideal_intersect(std::span<const LaurentPolynomial> I,
                                               std::span<const LaurentPolynomial> J,
                                               RingPtr ring, const GbOptions& options = {});

/// Generators of (gens) cap Z[base variables], over ring->base().
std::vector<LaurentPolynomial> contraction(std::span<const LaurentPolynomial> gens, RingPtr ring,
                                          const GbOptions& options = {});

/// Mutual membership.
bool ideals_equal(std::span<const LaurentPolynomial> I, std::span<const LaurentPolynomial> J,
                  RingPtr ring, const GbOptions& options = {});

struct CandidateBasisCheck {
  bool supplied = false;
  bool passed = false;
  std::size_t size = 0;
  std::string failure;  // empty when passed
  std::optional<mpz_class> determinant;
  /// Candidates whose normal forms are zero or repeat another's.
  std::vector<std::string> offending;
};

struct TorsionEntry {
  LaurentPolynomial monomial;  // over the base alphabet
  mpz_class order;
};

struct QuotientReport {
  std::size_t rank_Q = 0;
  /// nullopt: infinite over F_p.
  std::map<unsigned long, std::optional<std::size_t>> rank_mod_p;
  bool free = false;
  /// A Z-basis when free: monomials when the relations among the spanning
  /// monomials have a unimodular maximal minor, integer combinations of them
  /// otherwise. When not free, the Q-basis of standard monomials.
  std::vector<LaurentPolynomial> basis;
  std::vector<unsigned long> prime_set;
  mpz_class max_leading_coefficient;
  /// Monomials m outside the Q-basis that still span: c*m reduces to lower
  /// terms exactly for the multiples c of `order`. torsion_bounded is false
  /// when there are infinitely many.
  std::vector<TorsionEntry> torsion;
  bool torsion_bounded = true;
  /// Invariant factors > 1 of the torsion subgroup (Smith normal form of the
  /// relations among the spanning monomials).
  std::vector<mpz_class> torsion_invariants;
  /// Every F_p rank equals what the Z-module structure predicts.
  bool mod_p_consistent = true;
  std::size_t gb_size = 0;
  std::string order;
  CandidateBasisCheck candidate;
};

/// Computes the Z-module structure of Z[ring]/(gens). The tested primes are
/// `primes`, every prime dividing a leading coefficient, and every prime up
/// to the largest leading coefficient when that is at most 10^5. Throws
/// InfiniteRank if the rank over Q is infinite. A supplied candidate basis is
/// checked and the verdict recorded in `candidate`.
QuotientReport quotient_report(std::span<const LaurentPolynomial> gens, RingPtr ring,
                               const std::vector<unsigned long>& primes,
                               const std::optional<std::vector<LaurentPolynomial>>& candidate =
                                   std::nullopt,
                               const GbOptions& options = {});

/// Checks that `candidate` (over the base alphabet) is a Z-basis of the
/// quotient described by `gb` and `report`: right cardinality and a
/// unimodular change of basis to the standard monomials.
CandidateBasisCheck verify_candidate_basis(const StrongGroebnerBasis& gb,
                                           const QuotientReport& report,
                                           std::span<const LaurentPolynomial> candidate);

/// quotient_report from an already computed basis of the same ideal.
QuotientReport quotient_report(const StrongGroebnerBasis& gb,
                               std::span<const LaurentPolynomial> gens,
                               const std::vector<unsigned long>& primes,
                               const GbOptions& options = {});

/// Rank of the quotient over F_p; nullopt when infinite.
std::optional<std::size_t> rank_mod_p(std::span<const LaurentPolynomial> gens, RingPtr ring,
                                      unsigned long p, const GbOptions& options = {});

/// Nonzero diagonal entries of the Smith normal form, in divisibility order.
std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> m);

/// Fraction-free Gaussian elimination; exact.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

/// Primes <= n.
std::vector<unsigned long> primes_up_to(unsigned long n);

}  // namespace k0
