#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "witt/matrix.hpp"
#include "witt/number_field.hpp"
#include "witt/ratfunc.hpp"

namespace witt {

struct NonsingularRequired : std::invalid_argument {
  NonsingularRequired() : std::invalid_argument("form entries must be nonzero") {}
};
struct SingularForm : std::domain_error {
  SingularForm() : std::domain_error("Gram matrix is singular") {}
};

inline std::string to_text(const NFElem& x) { return x.to_text(); }

/// Diagonal quadratic form <e_1, ..., e_n> over a field F (Rational, NFElem or RationalFunction).
/// Nonempty with nonzero entries.
template <class F>
class QuadraticForm {
 public:
  explicit QuadraticForm(std::vector<F> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("quadratic forms must have dimension >= 1");
    for (const auto& e : entries_)
      if (detail::elem_is_zero(e)) throw NonsingularRequired();
  }

  std::size_t dim() const { return entries_.size(); }
  const std::vector<F>& entries() const { return entries_; }
  const F& operator[](std::size_t i) const { return entries_[i]; }

  /// q(x) = sum e_i x_i^2 for a vector of length dim.
  F evaluate(const std::vector<F>& x) const {
    if (x.size() != entries_.size()) throw std::invalid_argument("vector length does not match form dimension");
    F acc = zero_like(entries_[0]);
    for (std::size_t i = 0; i < x.size(); ++i) acc = acc + entries_[i] * x[i] * x[i];
    return acc;
  }

  Matrix<F> gram() const {
    Matrix<F> g(dim(), dim(), zero_like(entries_[0]));
    for (std::size_t i = 0; i < dim(); ++i) g(i, i) = entries_[i];
    return g;
  }

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) { return a.entries_ == b.entries_; }

  std::string to_text() const {
    std::string s = "<";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ", ";
      s += witt::to_text(entries_[i]);
    }
    return s + ">";
  }

 private:
  std::vector<F> entries_;
};

using QForm = QuadraticForm<Rational>;
using NFForm = QuadraticForm<NFElem>;
using TForm = QuadraticForm<RationalFunction>;

template <class F>
QuadraticForm<F> orthogonal_sum(const QuadraticForm<F>& a, const QuadraticForm<F>& b) {
  std::vector<F> e = a.entries();
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return QuadraticForm<F>(std::move(e));
}

template <class F>
QuadraticForm<F> tensor(const QuadraticForm<F>& a, const QuadraticForm<F>& b) {
  std::vector<F> e;
  for (const auto& x : a.entries())
    for (const auto& y : b.entries()) e.push_back(x * y);
  return QuadraticForm<F>(std::move(e));
}

template <class F>
QuadraticForm<F> scaled(const F& c, const QuadraticForm<F>& q) {
  std::vector<F> e;
  for (const auto& x : q.entries()) e.push_back(c * x);
  return QuadraticForm<F>(std::move(e));
}

/// n x q: the orthogonal sum of n copies.
template <class F>
QuadraticForm<F> multiple(std::size_t n, const QuadraticForm<F>& q) {
  if (n == 0) throw std::invalid_argument("multiple needs n >= 1");
  std::vector<F> e;
  for (std::size_t k = 0; k < n; ++k) e.insert(e.end(), q.entries().begin(), q.entries().end());
  return QuadraticForm<F>(std::move(e));
}

/// A diagonal form together with T such that T^t * G * T = diag(form).
template <class F>
struct Diagonalization {
  QuadraticForm<F> form;
  Matrix<F> transform;
};

/// Symmetric Gaussian elimination; throws SingularForm on det = 0.
template <class F>
Diagonalization<F> diagonalize(const Matrix<F>& gram) {
  if (!gram.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
  const std::size_t n = gram.rows();
  if (n == 0) throw std::invalid_argument("empty Gram matrix");
  const F zero = zero_like(gram(0, 0));
  Matrix<F> g = gram;
  Matrix<F> t = Matrix<F>::identity(n, zero);
  auto add_col_row = [&](std::size_t dst, std::size_t src, const F& c) {
    // basis change e_dst += c * e_src
    for (std::size_t r = 0; r < n; ++r) t(r, dst) = t(r, dst) + c * t(r, src);
    for (std::size_t r = 0; r < n; ++r) g(r, dst) = g(r, dst) + c * g(r, src);
    for (std::size_t r = 0; r < n; ++r) g(dst, r) = g(dst, r) + c * g(src, r);
  };
  auto swap_basis = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < n; ++r) std::swap(t(r, a), t(r, b));
    for (std::size_t r = 0; r < n; ++r) std::swap(g(r, a), g(r, b));
    for (std::size_t r = 0; r < n; ++r) std::swap(g(a, r), g(b, r));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (detail::elem_is_zero(g(k, k))) {
      std::size_t j = k + 1;
      while (j < n && detail::elem_is_zero(g(j, j))) ++j;
      if (j < n) {
        swap_basis(k, j);
      } else {
        j = k + 1;
        while (j < n && detail::elem_is_zero(g(k, j))) ++j;
        if (j == n) throw SingularForm();
        add_col_row(k, j, one_like(zero));
      }
    }
    const F inv = one_like(zero) / g(k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (detail::elem_is_zero(g(k, j))) continue;
      add_col_row(j, k, -(g(k, j) * inv));
    }
  }
  std::vector<F> d;
  for (std::size_t k = 0; k < n; ++k) d.push_back(g(k, k));
  return {QuadraticForm<F>(std::move(d)), t};
}

/// Entries in canonical square classes with scale factors: original[i] = scales[i]^2 * form[i].
template <class F>
struct NormalizedForm {
  QuadraticForm<F> form;
  std::vector<F> scales;
};

/// Over Q: squarefree integers.
NormalizedForm<Rational> normalize(const QForm& q);
/// Over Q(t): s * p_1 * ... * p_k with s a squarefree integer and p_i distinct monic irreducibles.
NormalizedForm<RationalFunction> normalize(const TForm& q);
/// Over a number field: entries are kept as they are.
NormalizedForm<NFElem> normalize(const NFForm& q);

/// Square-class representative of a single element.
std::pair<RationalFunction, RationalFunction> square_class(const RationalFunction& f);  // (normalized, scale)

}  // namespace witt
