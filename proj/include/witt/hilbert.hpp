#pragma once

#include <array>
#include <optional>
#include <vector>

#include "witt/quadratic_form.hpp"

namespace witt {

/// Hilbert symbol (a, b)_p over Q_p; p = 0 denotes the real place.
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p);

/// 2 and the primes dividing some numerator or denominator, ascending.
std::vector<Integer> relevant_primes(const std::vector<Rational>& entries);

/// Whether x is a square in Q_p (p = 0: in R).
bool is_local_square(const Rational& x, const Integer& p);

/// Whether the form is isotropic over Q_p (p = 0: over R).
bool locally_isotropic(const std::vector<Rational>& entries, const Integer& p);

/// Hasse-Minkowski.
bool isotropic_over_Q(const QForm& q);

/// A square root of a modulo the odd prime p, if a is a square mod p.
std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p);

/// A nontrivial rational solution of x^2 = a y^2 + b z^2, or nullopt if none exists.
std::optional<std::array<Rational, 3>> solve_legendre(const Rational& a, const Rational& b);

/// A nonzero isotropic vector of the diagonal form, or nullopt if it is anisotropic.
std::optional<std::vector<Rational>> isotropic_vector_Q(const std::vector<Rational>& entries);

/// x with sum e_i x_i^2 = c (c != 0), or nullopt if c is not represented.
std::optional<std::vector<Rational>> represent_Q(const std::vector<Rational>& entries, const Rational& c);

}  // namespace witt
