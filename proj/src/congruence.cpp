#include "witt/congruence.hpp"

namespace witt {

std::optional<Rational> field_sqrt(const Rational& x) { return rational_sqrt(x); }

std::optional<RationalFunction> field_sqrt(const RationalFunction& x) {
  if (x.is_zero()) return RationalFunction();
  auto [cls, scale] = square_class(x);
  if (cls != RationalFunction(1)) return std::nullopt;
  return scale;
}

std::optional<NFElem> field_sqrt(const NFElem& x) { return x.sqrt(); }

}  // namespace witt
