#pragma once

// T2-equivariant K-theory of P^N = P(Sym^N V*), alphabet {a~, b~, t~} with
// t = [O(1)]. Coordinate X_i carries the weight a^{N-i} b^i.

#include "k0ring/laurent.hpp"

namespace k0 {

struct ProjSpacePresentation {
  int N;
  LaurentPolynomial relation;  // prod_{k=0}^{N} (1 - a^{N-k} b^k t^-1)
};

/// 1 - a^{N-k} b^k t^-1
LaurentPolynomial proj_weight_factor(int N, int k);

ProjSpacePresentation proj_presentation(int N);

/// j_*[Q_k] = prod_{i != k} (1 - a^{N-i} b^i t^-1).
LaurentPolynomial fixed_point_class(int N, int k);

/// [O_H] = 1 - chi^-1 t^-d for a hypersurface of degree d with character chi.
LaurentPolynomial hypersurface_class(int d, const LaurentPolynomial& chi);

}  // namespace k0
