#pragma once

#include <string>
#include <vector>

#include "witt/poly.hpp"

namespace witt {

/// Sturm sequence of p (each term rescaled by a positive constant).
std::vector<QPoly> sturm_sequence(const QPoly& p);

/// Sign variations of a Sturm sequence at x.
int sturm_variations(const std::vector<QPoly>& seq, const Rational& x);
int sturm_variations_at_infinity(const std::vector<QPoly>& seq, bool positive);

/// Distinct real roots of p in (lo, hi], lo not a root.
int count_roots(const QPoly& p, const Rational& lo, const Rational& hi);
/// Distinct real roots of p.
int count_real_roots(const QPoly& p);

/// All real roots lie in (-bound, bound).
Rational root_bound(const QPoly& p);

/// A real algebraic number: a root of a monic irreducible polynomial over Q isolated by an
/// open rational interval. Degree-one numbers are stored exactly.
class AlgebraicReal {
 public:
  AlgebraicReal() = default;
  explicit AlgebraicReal(const Rational& r);
  /// minpoly must be monic irreducible of degree >= 2 with exactly one root in (lo, hi).
  AlgebraicReal(QPoly minpoly, Rational lo, Rational hi);

  const QPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  bool is_rational() const { return minpoly_.degree() == 1; }
  Rational rational_value() const;
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  /// Halves the isolating interval (no-op for rationals).
  void refine() const;
  void refine_below(const Rational& width) const;
  /// A rational within the current interval (the value itself when rational).
  Rational approx() const;
  double to_double() const;

  /// Sign of q(alpha).
  int sign_of(const QPoly& q) const;
  int sign() const;

  /// 1-based position among the real roots of the minimal polynomial, ascending.
  int root_index() const;

  friend int compare(const AlgebraicReal& a, const AlgebraicReal& b);
  friend int compare(const AlgebraicReal& a, const Rational& b);
  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }
  friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; }

  std::string to_text() const;

 private:
  QPoly minpoly_;
  mutable Rational lo_, hi_;
};

/// Distinct real roots of p != 0, ascending.
std::vector<AlgebraicReal> real_roots(const QPoly& p);

/// The k-th (1-based, ascending) real root of an irreducible polynomial.
AlgebraicReal real_root(const QPoly& irreducible, int k);

}  // namespace witt
