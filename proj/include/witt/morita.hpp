#pragma once

#include <optional>
#include <vector>

#include "witt/quaternion.hpp"
#include "witt/series.hpp"

namespace witt {

/// Residues of the quadratic form B attached to a skew-hermitian h over (D, conjugation) at a
/// real valuation v where D splits over the henselization: with e = (1 + y)/2 for a pure y with
/// y^2 = 1 and z spanning (1 - e) D e, h(x, w) = B(x, w) z on V e. B is determined up to a
/// scalar, which does not affect weak isotropy.
struct MoritaResidues {
  std::vector<NFElem> first, second;
  /// Set when some 2x2 block of B is certified isotropic.
  bool isotropic = false;
  int precision = 0;
};

/// nullopt when no point on the conic a y1^2 + b y2^2 = 1 was found. Doubles the series
/// precision from 2 * (max entry valuation) + 4 on PrecisionExhausted up to precision_cap, then
/// rethrows.
std::optional<MoritaResidues> morita_residues(const SkewHermitianForm<RationalFunction>& h, const RealValuation& v,
                                              int precision_cap = 64);

}  // namespace witt
