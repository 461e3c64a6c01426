#pragma once

#include <optional>
#include <vector>

#include "witt/quadratic_form.hpp"

namespace witt {

std::optional<Rational> field_sqrt(const Rational& x);
std::optional<RationalFunction> field_sqrt(const RationalFunction& x);
std::optional<NFElem> field_sqrt(const NFElem& x);

/// T with T^t * a * T == b, verified exactly.
template <class F>
bool is_congruence(const Matrix<F>& a, const Matrix<F>& b, const Matrix<F>& t) {
  if (t.rows() != a.rows() || t.cols() != b.rows()) return false;
  return t.transpose() * a * t == b;
}

/// An explicit T with T^t * gram * T = diag(target), found by diagonalizing gram and matching
/// the diagonal entries to the target up to squares. nullopt when no such matching exists
/// (which does not by itself prove the forms non-isometric).
template <class F>
std::optional<Matrix<F>> find_congruence(const Matrix<F>& gram, const QuadraticForm<F>& target) {
  if (gram.rows() != target.dim()) return std::nullopt;
  Diagonalization<F> d = diagonalize(gram);
  const std::size_t n = target.dim();
  const F zero = zero_like(target[0]);
  std::vector<bool> used(n, false);
  Matrix<F> perm_scale(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (used[j]) continue;
      auto r = field_sqrt(target[i] / d.form[j]);
      if (!r) continue;
      used[j] = true;
      perm_scale(j, i) = *r;
      found = true;
    }
    if (!found) return std::nullopt;
  }
  Matrix<F> t = d.transform * perm_scale;
  if (!is_congruence(gram, target.gram(), t)) return std::nullopt;
  return t;
}

}  // namespace witt
