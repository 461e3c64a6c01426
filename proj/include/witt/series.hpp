#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "witt/number_field.hpp"
#include "witt/places.hpp"

namespace witt {

struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const std::string& what) : std::runtime_error("precision exhausted: " + what) {}
};

/// Truncated Laurent series sum c_i pi^(val+i) + O(pi^prec) over a residue field.
/// An element with val >= prec is known only to lie in O(pi^prec).
class SeriesElement {
 public:
  SeriesElement() = default;
  SeriesElement(NFPtr field, int val, std::vector<NFElem> coeffs, int prec);
  static SeriesElement constant(NFPtr field, const NFElem& c, int prec);
  static SeriesElement zero(NFPtr field, int prec) { return SeriesElement(std::move(field), prec, {}, prec); }

  const NFPtr& field() const { return field_; }
  int valuation() const { return val_; }
  int precision() const { return prec_; }
  /// Coefficient of pi^e (e < precision).
  NFElem coeff(int e) const;
  /// True when no coefficient below the precision is nonzero.
  bool is_indistinguishable_from_zero() const { return val_ >= prec_; }
  /// Leading coefficient; throws PrecisionExhausted if unknown.
  const NFElem& leading() const;

  SeriesElement operator-() const;
  friend SeriesElement operator+(const SeriesElement& a, const SeriesElement& b);
  friend SeriesElement operator-(const SeriesElement& a, const SeriesElement& b) { return a + (-b); }
  friend SeriesElement operator*(const SeriesElement& a, const SeriesElement& b);
  friend SeriesElement operator/(const SeriesElement& a, const SeriesElement& b) { return a * b.inverse(); }
  SeriesElement inverse() const;
  SeriesElement shifted(int k) const;  // times pi^k
  SeriesElement truncated(int prec) const;
  /// Square root when the valuation is even and the leading coefficient is a square in the field.
  std::optional<SeriesElement> sqrt() const;

  std::string to_text() const;

 private:
  void normalize();
  NFPtr field_;
  int val_ = 0;
  std::vector<NFElem> coeffs_;  // coeffs_[i] multiplies pi^(val_+i); size == prec_ - val_ when known
  int prec_ = 0;
};

inline bool is_zero(const SeriesElement& x) { return x.is_indistinguishable_from_zero(); }
inline SeriesElement zero_like(const SeriesElement& x) { return SeriesElement::zero(x.field(), x.precision()); }
inline SeriesElement one_like(const SeriesElement& x) {
  return SeriesElement::constant(x.field(), NFElem(x.field(), Rational(1)), x.precision());
}
inline std::string to_text(const SeriesElement& x) { return x.to_text(); }

/// Expansion of f in the completion at v, exact below absolute precision prec.
SeriesElement expand(const RationalFunction& f, const RealValuation& v, int prec);

/// A point (x, y, z) with x != 0 on x^2 - a y^2 - b z^2 = 0 over the completion at v, to the
/// given absolute precision. nullopt when the residue analysis certifies there is none or when
/// no residue point was found.
std::optional<std::array<SeriesElement, 3>> hensel_lift_conic(const RationalFunction& a, const RationalFunction& b,
                                                              const RealValuation& v, int target_precision);

}  // namespace witt
