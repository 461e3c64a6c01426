#pragma once

#include <string>

#include "witt/poly.hpp"

namespace witt {

/// Element of Q(t): num/den with den monic and gcd(num, den) = 1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(QPoly::constant(Rational(1))) {}
  RationalFunction(const Rational& c) : num_(QPoly::constant(c)), den_(QPoly::constant(Rational(1))) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(const QPoly& p) : num_(p), den_(QPoly::constant(Rational(1))) {}  // NOLINT
  RationalFunction(const QPoly& num, const QPoly& den);

  static RationalFunction t() { return RationalFunction(qpoly({0, 1})); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rational constant_value() const;
  /// deg num - deg den.
  int degree() const { return num_.degree() - den_.degree(); }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, true); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction inverse() const;
  RationalFunction pow(unsigned e) const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  Rational operator()(const Rational& at) const;

  std::string to_text() const;

 private:
  RationalFunction(QPoly num, QPoly den, bool /*reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  QPoly num_, den_;
};

inline bool is_zero(const RationalFunction& x) { return x.is_zero(); }
inline RationalFunction zero_like(const RationalFunction&) { return RationalFunction(); }
inline RationalFunction one_like(const RationalFunction&) { return RationalFunction(1); }
std::string to_text(const RationalFunction& f);

}  // namespace witt
