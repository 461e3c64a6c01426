#pragma once

#include <utility>
#include <vector>

#include "witt/poly.hpp"

namespace witt {

/// p = unit * prod f_i^{e_i} with f_i monic irreducible over Q, sorted by (degree, coefficients).
struct Factorization {
  Rational unit;
  std::vector<std::pair<QPoly, int>> factors;
};

/// Yun's squarefree decomposition: p = lc * prod a_i^i, a_i monic squarefree coprime.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

/// Complete factorization over Q (Zassenhaus: Cantor-Zassenhaus mod p, Hensel lifting,
/// subset recombination).
Factorization factor(const QPoly& p);

bool is_irreducible(const QPoly& p);

/// Canonical total order on monic polynomials (degree, then coefficients high to low).
bool poly_less(const QPoly& a, const QPoly& b);

}  // namespace witt
