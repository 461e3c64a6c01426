#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "witt/places.hpp"
#include "witt/quadratic_form.hpp"

namespace witt {

/// x0 + x1 i + x2 j + x3 k.
template <class F>
struct Quaternion {
  std::array<F, 4> c;

  bool is_zero() const {
    for (const auto& x : c)
      if (!detail::elem_is_zero(x)) return false;
    return true;
  }
  bool is_pure() const { return detail::elem_is_zero(c[0]); }
  friend bool operator==(const Quaternion& x, const Quaternion& y) { return x.c == y.c; }
  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {{x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]}};
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {{x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]}};
  }
  friend Quaternion operator*(const F& s, const Quaternion& x) {
    return {{s * x.c[0], s * x.c[1], s * x.c[2], s * x.c[3]}};
  }
};

/// (a, b)_F: i^2 = a, j^2 = b, ij = -ji = k.
template <class F>
class QuaternionAlgebra {
 public:
  QuaternionAlgebra(F a, F b) : a_(std::move(a)), b_(std::move(b)) {
    if (detail::elem_is_zero(a_) || detail::elem_is_zero(b_))
      throw std::invalid_argument("quaternion algebra parameters must be nonzero");
  }

  const F& a() const { return a_; }
  const F& b() const { return b_; }

  Quaternion<F> zero() const { return scalar(zero_like(a_)); }
  Quaternion<F> scalar(const F& s) const {
    const F z = zero_like(a_);
    return {{s, z, z, z}};
  }
  /// 1, i, j, k for k = 0..3.
  Quaternion<F> basis(std::size_t k) const {
    Quaternion<F> x = zero();
    x.c.at(k) = one_like(a_);
    return x;
  }

  Quaternion<F> mul(const Quaternion<F>& x, const Quaternion<F>& y) const {
    const auto& p = x.c;
    const auto& q = y.c;
    const F ab = a_ * b_;
    return {{p[0] * q[0] + a_ * p[1] * q[1] + b_ * p[2] * q[2] - ab * p[3] * q[3],
             p[0] * q[1] + p[1] * q[0] - b_ * p[2] * q[3] + b_ * p[3] * q[2],
             p[0] * q[2] + p[2] * q[0] + a_ * p[1] * q[3] - a_ * p[3] * q[1],
             p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]}};
  }
  Quaternion<F> conj(const Quaternion<F>& x) const { return {{x.c[0], -x.c[1], -x.c[2], -x.c[3]}}; }
  F norm(const Quaternion<F>& x) const {
    const auto& p = x.c;
    return p[0] * p[0] - a_ * p[1] * p[1] - b_ * p[2] * p[2] + a_ * b_ * p[3] * p[3];
  }
  F trd(const Quaternion<F>& x) const { return x.c[0] + x.c[0]; }
  /// Throws std::domain_error when n(x) = 0.
  Quaternion<F> inverse(const Quaternion<F>& x) const {
    const F n = norm(x);
    if (detail::elem_is_zero(n)) throw std::domain_error("quaternion of norm zero is not invertible");
    return (one_like(a_) / n) * conj(x);
  }

  std::string to_text() const { return "quat(" + witt::to_text(a_) + ", " + witt::to_text(b_) + ")"; }
  friend bool operator==(const QuaternionAlgebra& x, const QuaternionAlgebra& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  F a_, b_;
};

/// <1, -a, -b, ab>.
template <class F>
QuadraticForm<F> norm_form(const QuaternionAlgebra<F>& d) {
  return QuadraticForm<F>({one_like(d.a()), -d.a(), -d.b(), d.a() * d.b()});
}

template <class F>
std::string to_text(const Quaternion<F>& x) {
  static const char* names[4] = {"", "i", "j", "k"};
  std::string s;
  for (std::size_t k = 0; k < 4; ++k) {
    if (detail::elem_is_zero(x.c[k])) continue;
    std::string term = witt::to_text(x.c[k]);
    const bool compound = term.find_first_of("+-", 1) != std::string::npos || term.find('/') != std::string::npos;
    if (k > 0) {
      if (term == "1") term = names[k];
      else if (term == "-1") term = std::string("-") + names[k];
      else term = (compound ? "(" + term + ")" : term) + "*" + names[k];
    } else if (compound && !s.empty()) {
      term = "(" + term + ")";
    }
    if (!s.empty()) s += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else s = term;
  }
  return s.empty() ? "0" : s;
}

/// Diagonal hermitian form <alpha_1, ..., alpha_n> over (D, conjugation), alpha_i central.
template <class F>
struct HermitianForm {
  HermitianForm(QuaternionAlgebra<F> d, std::vector<F> e) : algebra(std::move(d)), entries(std::move(e)) {
    if (entries.empty()) throw std::invalid_argument("hermitian forms must have dimension >= 1");
    for (const auto& x : entries)
      if (detail::elem_is_zero(x)) throw NonsingularRequired();
  }
  std::size_t dim() const { return entries.size(); }
  /// h(x, x) = sum alpha_r n(x_r).
  F value(const std::vector<Quaternion<F>>& x) const {
    if (x.size() != entries.size()) throw std::invalid_argument("vector length does not match form dimension");
    F acc = zero_like(entries[0]);
    for (std::size_t r = 0; r < x.size(); ++r) acc = acc + entries[r] * algebra.norm(x[r]);
    return acc;
  }

  QuaternionAlgebra<F> algebra;
  std::vector<F> entries;
};

/// Diagonal skew-hermitian form <d_1, ..., d_n>, each d_r pure and nonzero.
template <class F>
struct SkewHermitianForm {
  SkewHermitianForm(QuaternionAlgebra<F> d, std::vector<Quaternion<F>> e) : algebra(std::move(d)), entries(std::move(e)) {
    if (entries.empty()) throw std::invalid_argument("skew-hermitian forms must have dimension >= 1");
    for (const auto& x : entries) {
      if (!x.is_pure()) throw std::invalid_argument("skew-hermitian entries must be pure quaternions");
      if (x.is_zero()) throw NonsingularRequired();
    }
  }
  std::size_t dim() const { return entries.size(); }
  /// h(x, x) = sum conj(x_r) d_r x_r, a pure quaternion.
  Quaternion<F> value(const std::vector<Quaternion<F>>& x) const {
    if (x.size() != entries.size()) throw std::invalid_argument("vector length does not match form dimension");
    Quaternion<F> acc = algebra.zero();
    for (std::size_t r = 0; r < x.size(); ++r)
      acc = acc + algebra.mul(algebra.mul(algebra.conj(x[r]), entries[r]), x[r]);
    return acc;
  }

  QuaternionAlgebra<F> algebra;
  std::vector<Quaternion<F>> entries;
};

/// q_h(x) = h(x, x) on D^n, coordinates ordered slot-major (x_1 in 1, i, j, k, then x_2, ...):
/// the entries alpha_r * <1, -a, -b, ab>.
template <class F>
QuadraticForm<F> jacobson_trace(const HermitianForm<F>& h) {
  return tensor(QuadraticForm<F>(h.entries), norm_form(h.algebra));
}

/// Gram matrix of x -> h(x, x) on the standard F-basis, computed with quaternion arithmetic.
template <class F>
Matrix<F> jacobson_gram(const HermitianForm<F>& h) {
  const auto& d = h.algebra;
  const std::size_t n = 4 * h.dim();
  const F zero = zero_like(d.a());
  const F half = one_like(zero) / (one_like(zero) + one_like(zero));
  Matrix<F> g(n, n, zero);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w) {
      if (u / 4 != w / 4) continue;
      const auto hw = d.mul(d.conj(d.basis(u % 4)), d.scalar(h.entries[u / 4]));
      const auto huw = d.mul(hw, d.basis(w % 4));
      g(u, w) = half * d.trd(huw);
    }
  return g;
}

/// Whether D is a division algebra; nullopt when undecided.
std::optional<bool> is_division(const QuaternionAlgebra<Rational>& d);
std::optional<bool> is_division(const QuaternionAlgebra<RationalFunction>& d);

/// A nonzero isotropic vector of the norm form, when D is split and one is found.
std::optional<std::vector<Rational>> norm_form_isotropic_vector(const QuaternionAlgebra<Rational>& d);
std::optional<std::vector<RationalFunction>> norm_form_isotropic_vector(const QuaternionAlgebra<RationalFunction>& d);

/// D tensor F_P is division: the norm form is definite at P, i.e. a <_P 0 and b <_P 0.
bool ordering_admissible(const QuaternionAlgebra<Rational>& d);
bool ordering_admissible(const QuaternionAlgebra<RationalFunction>& d, const Cut& P);

/// D tensor F_v^H is division: both residue forms of the norm form are anisotropic over the
/// residue field. nullopt when some residue form cannot be decided.
std::optional<bool> valuation_admissible(const QuaternionAlgebra<RationalFunction>& d, const RealValuation& v);

/// Isotropy of a skew-hermitian form of dimension n over the quaternion division algebra of a
/// real closed field.
bool skew_isotropy_real_closed(std::size_t n, bool d_definite);

}  // namespace witt
