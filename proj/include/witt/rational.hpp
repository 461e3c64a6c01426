#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace witt {

using Integer = mpz_class;
/// Exact rational; GMP keeps numerator/denominator coprime with positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

std::string to_text(const Integer& x);
std::string to_text(const Rational& x);
Rational parse_rational(const std::string& text);

Integer isqrt(const Integer& n);
bool is_square(const Integer& n);
std::optional<Rational> rational_sqrt(const Rational& q);

/// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<Integer, int>> factor_integer(Integer n);
bool is_probable_prime(const Integer& n);

/// Signed squarefree kernel: n = squarefree_part(n) * m^2.
Integer squarefree_part(const Integer& n);
/// Squarefree integer in the square class of q (q != 0).
Integer squarefree_part(const Rational& q);

/// Writes n >= 0 as a sum of at most four squares, preferring fewer terms.
/// Returns the (nonzero) roots; empty for n == 0.
std::vector<Integer> sum_of_squares(const Integer& n);
/// Positive rational as a sum of at most four rational squares.
std::vector<Rational> sum_of_squares(const Rational& q);

/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Integer& a, const Integer& p);

/// Simplest rational (smallest denominator, then numerator) in the open interval (lo, hi).
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace witt
