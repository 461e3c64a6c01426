#include <gtest/gtest.h>

#include <random>

#include "witt/hilbert.hpp"

using namespace witt;

namespace {

// Nontrivial zero of x^2 - a y^2 - b z^2 modulo p^k with some coordinate a unit (primitive solution).
bool primitive_zero_mod(long a, long b, long p, int k) {
  long m = 1;
  for (int i = 0; i < k; ++i) m *= p;
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y)
      for (long z = 0; z < m; ++z) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        long v = (x * x - a * y * y - b * z * z) % m;
        if (v == 0) return true;
      }
  return false;
}

}  // namespace

TEST(Hilbert, Examples) {
  EXPECT_EQ(hilbert_symbol(Rational(-1), Rational(-1), Integer(0)), -1);
  EXPECT_EQ(hilbert_symbol(Rational(-1), Rational(-1), Integer(2)), -1);
  EXPECT_EQ(hilbert_symbol(Rational(-1), Rational(-1), Integer(3)), 1);
  for (long b : {2L, -3L, 5L, 7L}) {
    for (long p : {0L, 2L, 3L, 5L, 7L}) EXPECT_EQ(hilbert_symbol(Rational(1), Rational(b), Integer(p)), 1);
  }
  // (2,3)_3 cross-checked by exhaustive search modulo 3^4: -1 iff no primitive zero.
  const bool solvable = primitive_zero_mod(2, 3, 3, 4);
  EXPECT_EQ(hilbert_symbol(Rational(2), Rational(3), Integer(3)), solvable ? 1 : -1);
}

TEST(Hilbert, Bilinearity) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> d(-60, 60);
  const long primes[] = {0, 2, 3, 5, 7, 11, 13};
  for (int trial = 0; trial < 400; ++trial) {
    long a = d(rng), b1 = d(rng), b2 = d(rng);
    if (a == 0 || b1 == 0 || b2 == 0) continue;
    for (long p : primes) {
      const Integer P(p);
      EXPECT_EQ(hilbert_symbol(Rational(a), Rational(b1 * b2), P),
                hilbert_symbol(Rational(a), Rational(b1), P) * hilbert_symbol(Rational(a), Rational(b2), P));
    }
    // Product formula.
    int prod = hilbert_symbol(Rational(a), Rational(b1), Integer(0));
    for (const auto& p : relevant_primes({Rational(a), Rational(b1)})) prod *= hilbert_symbol(Rational(a), Rational(b1), p);
    EXPECT_EQ(prod, 1);
  }
}

TEST(HasseMinkowski, Examples) {
  EXPECT_TRUE(isotropic_over_Q(QForm({Rational(1), Rational(1), Rational(-2)})));
  EXPECT_FALSE(isotropic_over_Q(QForm({Rational(1), Rational(1), Rational(1)})));
  EXPECT_FALSE(isotropic_over_Q(QForm({Rational(1), Rational(1), Rational(-7)})));
  EXPECT_TRUE(isotropic_over_Q(QForm({Rational(1), Rational(-2), Rational(1), Rational(-2)})));
  EXPECT_FALSE(isotropic_over_Q(QForm({Rational(1), Rational(1), Rational(1), Rational(-7)})));
  EXPECT_TRUE(isotropic_over_Q(QForm({Rational(1), Rational(1), Rational(1), Rational(1), Rational(-7)})));
}

TEST(HasseMinkowski, AgreesWithBoundedSearchTernary) {
  // Primitive integer zeros with |x|,|y|,|z| <= 30 for small ternary forms.
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) {
      if (a == 0 || b == 0) continue;
      const long c = -1;
      bool found = false;
      for (long x = -30; x <= 30 && !found; ++x)
        for (long y = -30; y <= 30 && !found; ++y)
          for (long z = 0; z <= 30 && !found; ++z) {
            if (x == 0 && y == 0 && z == 0) continue;
            if (a * x * x + b * y * y + c * z * z == 0) found = true;
          }
      const bool iso = isotropic_over_Q(QForm({Rational(a), Rational(b), Rational(c)}));
      if (found) EXPECT_TRUE(iso) << a << "," << b;
      if (!iso) EXPECT_FALSE(found);
    }
}

TEST(Legendre, RandomSolvable) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<long> d(-400, 400);
  int solved = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Rational a(d(rng)), b(d(rng));
    if (a == 0 || b == 0) continue;
    const bool iso = isotropic_over_Q(QForm({Rational(1), -a, -b}));
    auto s = solve_legendre(a, b);
    EXPECT_EQ(s.has_value(), iso) << a << " " << b;
    if (s) {
      EXPECT_EQ((*s)[0] * (*s)[0], a * (*s)[1] * (*s)[1] + b * (*s)[2] * (*s)[2]);
      EXPECT_FALSE((*s)[0] == 0 && (*s)[1] == 0 && (*s)[2] == 0);
      ++solved;
    }
  }
  EXPECT_GT(solved, 50);
}

TEST(IsotropicVector, RandomForms) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    std::vector<Rational> e;
    while (e.size() < n) {
      long x = d(rng);
      if (x != 0) e.emplace_back(x);
    }
    auto v = isotropic_vector_Q(e);
    EXPECT_EQ(v.has_value(), isotropic_over_Q(QForm(e)));
    if (!v) continue;
    Rational s = 0;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      s += e[i] * (*v)[i] * (*v)[i];
      if ((*v)[i] != 0) nonzero = true;
    }
    EXPECT_EQ(s, 0);
    EXPECT_TRUE(nonzero);
  }
}

TEST(Represent, PositiveDefiniteQuaternaryIsUniversal) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> d(1, 40);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> e{Rational(d(rng)), Rational(d(rng)), Rational(d(rng)), Rational(d(rng))};
    const Rational c = make_rational(d(rng), d(rng));
    auto x = represent_Q(e, c);
    ASSERT_TRUE(x.has_value());
    Rational s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * (*x)[i] * (*x)[i];
    EXPECT_EQ(s, c);
  }
}
