#pragma once

// Representation ring of G = T2 x| S2 presented as
//   Z[eps, lam^{+-1}, gam^{+-1}] / (gam^2 - 1, eps (1 - gam))
// with eps = [W_1], lam = [det W_1] and gam the sign character.

#include <vector>

#include "k0ring/laurent.hpp"

namespace k0 {

/// An element of R(G) kept in normal form: gam-degree 0 or 1 and no term
/// containing both eps and gam.
class GClass {
 public:
  /// Normalizes any polynomial over {eps, lam~, gam~}.
  explicit GClass(const LaurentPolynomial& poly);
  static GClass parse(std::string_view text);
  static GClass one();
  static GClass eps();
  static GClass lam(int power = 1);
  static GClass gam();

  const LaurentPolynomial& poly() const { return poly_; }
  std::string to_string() const { return poly_.to_string(); }

  GClass& operator+=(const GClass& o);
  GClass& operator-=(const GClass& o);
  GClass& operator*=(const GClass& o);

  friend GClass operator+(GClass x, const GClass& y) { return x += y; }
  friend GClass operator-(GClass x, const GClass& y) { return x -= y; }
  friend GClass operator*(GClass x, const GClass& y) { return x *= y; }
  friend bool operator==(const GClass&, const GClass&) = default;

 private:
  LaurentPolynomial poly_;
};

/// Reduces modulo gam^2 = 1 and eps*gam = eps.
LaurentPolynomial g_normal_form(const LaurentPolynomial& poly);

struct TwoDimBundleClass {
  GClass rank2_class;  // [W_n]
  GClass det_class;    // [wedge^2 W_n]
  int index;
};

/// [W_n] for any integer n; [W_n] = lam^n [W_{-n}] for n < 0.
GClass w_class(int n);
/// [wedge^2 W_n]: gam lam^n for even n, lam^n for odd n.
GClass det_class(int n);
TwoDimBundleClass bundle(int n);

/// [W_n^dual] = lam^{-n} [W_n].
GClass dual_w_class(int n);

/// Pushforward of the character a^m b^n along R(T2) -> R(G).
GClass induce_character(int m, int n);

/// Ring map eps -> a + b, lam -> ab, gam -> 1.
LaurentPolynomial restrict_to_torus(const GClass& c);

/// prod_i (1 - [W_{n_i}^dual] + [wedge^2 W_{n_i}^dual]).
GClass euler_lambda_minus1_dual(const std::vector<int>& indices);

struct BoundaryRelations {
  GClass r1;
  GClass r2;
};

/// R1 = (1+gam) - gam(lam^-4 [W4] + lam^-6 [W6] - lam^-10 [W10]),
/// R2 = eps - gam(lam^-4 [W5] + lam^-6 [W7] - lam^-10 [W11]).
BoundaryRelations boundary_relations_r1_r2();

/// Pushforward of an arbitrary Laurent polynomial in a, b to R(G), term by
/// term through induce_character.
GClass induce(const LaurentPolynomial& f);

}  // namespace k0
