#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "witt/rational.hpp"

namespace witt {

namespace detail {
template <class T>
bool elem_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial over a field R, coefficients low degree first.
/// R must provide + - * /, is_zero(R), zero_like(R) and one_like(R).
template <class R>
class UPoly {
 public:
  UPoly() : zero_(R(0)) {}
  explicit UPoly(R zero) : zero_(zero_like(zero)) {}
  UPoly(std::vector<R> coeffs, R zero) : coeffs_(std::move(coeffs)), zero_(zero_like(zero)) { trim(); }

  static UPoly constant(const R& c) { return UPoly(std::vector<R>{c}, c); }
  static UPoly monomial(const R& c, std::size_t deg) {
    std::vector<R> v(deg + 1, zero_like(c));
    v[deg] = c;
    return UPoly(std::move(v), c);
  }
  static UPoly x(const R& sample) { return monomial(one_like(sample), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const R& lc() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero_; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& zero_elem() const { return zero_; }
  R one_elem() const { return one_like(zero_); }

  R operator()(const R& at) const {
    R acc = zero_;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// Horner evaluation into any ring S accepting S*S and S+R.
  template <class S>
  S eval_in(const S& at, S zero) const {
    S acc = zero;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<R> v(std::max(a.coeffs_.size(), b.coeffs_.size()), a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = v[i] + a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] + b.coeffs_[i];
    return UPoly(std::move(v), a.zero_);
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.zero_);
    std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::elem_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(v), a.zero_);
  }
  friend UPoly operator*(const R& s, const UPoly& a) {
    std::vector<R> v = a.coeffs_;
    for (auto& c : v) c = s * c;
    return UPoly(std::move(v), a.zero_);
  }
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Euclidean division; throws on division by zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    UPoly r = *this;
    if (degree() < d.degree()) return {UPoly(zero_), r};
    std::vector<R> q(static_cast<std::size_t>(degree() - d.degree() + 1), zero_);
    const R inv = one_like(zero_) / d.lc();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
      const R c = r.lc() * inv;
      q[shift] = c;
      for (std::size_t i = 0; i < d.coeffs_.size(); ++i)
        r.coeffs_[i + shift] = r.coeffs_[i + shift] - c * d.coeffs_[i];
      r.coeffs_.pop_back();
      r.trim();
    }
    return {UPoly(std::move(q), zero_), r};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return a.divmod(b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return a.divmod(b).second; }

  UPoly monic() const {
    if (is_zero()) return *this;
    return (one_like(zero_) / lc()) * *this;
  }
  UPoly derivative() const {
    if (coeffs_.size() <= 1) return UPoly(zero_);
    std::vector<R> v(coeffs_.size() - 1, zero_);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      R k = zero_;
      for (std::size_t j = 0; j < i; ++j) k = k + one_like(zero_);
      v[i - 1] = k * coeffs_[i];
    }
    return UPoly(std::move(v), zero_);
  }
  UPoly compose(const UPoly& inner) const {
    UPoly acc(zero_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }
  UPoly pow(unsigned e) const {
    UPoly result = constant(one_like(zero_)), base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      base = base * base;
      e >>= 1u;
    }
    return result;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::elem_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
  R zero_;
};

/// Monic gcd (zero if both are zero).
template <class R>
UPoly<R> gcd(UPoly<R> a, UPoly<R> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class R>
std::tuple<UPoly<R>, UPoly<R>, UPoly<R>> xgcd(const UPoly<R>& a, const UPoly<R>& b) {
  const R z = a.zero_elem();
  UPoly<R> r0 = a, r1 = b;
  UPoly<R> s0 = UPoly<R>::constant(one_like(z)), s1(z);
  UPoly<R> t0(z), t1 = UPoly<R>::constant(one_like(z));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const R inv = one_like(z) / r0.lc();
  return {inv * r0, inv * s0, inv * t0};
}

using QPoly = UPoly<Rational>;

QPoly qpoly(std::initializer_list<long> low_first);
std::string to_text(const QPoly& p, const std::string& var = "t");
/// Content-free integer-coefficient representative with positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const QPoly& p);
QPoly from_integer_coeffs(const std::vector<Integer>& c);
Rational eval(const QPoly& p, const Rational& x);
int sign_at(const QPoly& p, const Rational& x);
/// Squarefree part (product of distinct irreducible factors), monic.
QPoly squarefree(const QPoly& p);
/// Multiplicity of the irreducible factor f in p (p != 0).
int multiplicity(const QPoly& p, const QPoly& f);
/// Largest absolute value of the coefficients' numerators and denominators.
Integer height(const QPoly& p);

}  // namespace witt
