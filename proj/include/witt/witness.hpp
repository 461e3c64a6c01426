#pragma once

#include <optional>
#include <vector>

#include "witt/budget.hpp"
#include "witt/quadratic_form.hpp"

namespace witt {

/// x in F^(copies*dim), copy-major, with (copies x q)(x) = 0 and x != 0.
template <class F>
struct IsotropyWitness {
  std::size_t copies = 0;
  std::vector<F> vectors;
};

template <class F>
bool verify_witness(const QuadraticForm<F>& q, const IsotropyWitness<F>& w) {
  if (w.copies == 0 || w.vectors.size() != w.copies * q.dim()) return false;
  bool nonzero = false;
  for (const auto& x : w.vectors)
    if (!detail::elem_is_zero(x)) nonzero = true;
  if (!nonzero) return false;
  return detail::elem_is_zero(multiple(w.copies, q).evaluate(w.vectors));
}

struct WitnessBounds {
  std::size_t max_copies = 8;
  int degree_bound = 6;  // coordinate degree over Q(t)
  long height_bound = 3;  // coefficient height in the enumeration phase
  Deadline deadline;
};

std::optional<IsotropyWitness<Rational>> witness_search(const QForm& q, const WitnessBounds& bounds = {});
std::optional<IsotropyWitness<NFElem>> witness_search(const NFForm& q, const WitnessBounds& bounds = {});
/// Over Q(t) coordinates are returned as polynomials.
std::optional<IsotropyWitness<RationalFunction>> witness_search(const TForm& q, const WitnessBounds& bounds = {});

/// Pairwise orthogonal w_k in Q^n (n <= max_n) with |w_k|^2 = d_k, for d_k > 0.
std::optional<std::vector<std::vector<Rational>>> orthogonal_representation(const std::vector<Rational>& d,
                                                                             std::size_t max_n);

}  // namespace witt
