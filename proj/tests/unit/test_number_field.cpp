#include <gtest/gtest.h>

#include <random>

#include "witt/number_field.hpp"
#include "witt/real_roots.hpp"

using namespace witt;

TEST(RealRoots, Isolation) {
  auto r = real_roots(qpoly({-2, 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_LE(r[0].hi(), 0);
  EXPECT_GE(r[1].lo(), 0);
  r[1].refine_below(make_rational(1, 1000));
  EXPECT_GE(r[1].lo(), 1);
  EXPECT_LE(r[1].hi(), 2);
  EXPECT_TRUE(real_roots(qpoly({1, 0, 1})).empty());
  auto z = real_roots(qpoly({0, 1}));
  ASSERT_EQ(z.size(), 1u);
  EXPECT_TRUE(z[0].is_rational());
  EXPECT_EQ(z[0].rational_value(), 0);
}

TEST(RealRoots, CountMatchesSturmVariations) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> coef(-50, 50);
  for (int trial = 0; trial < 60; ++trial) {
    const int deg = 1 + static_cast<int>(rng() % 8);
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.emplace_back(coef(rng));
    long lead = coef(rng);
    if (lead == 0) lead = 1;
    c.emplace_back(lead);
    QPoly p(c, Rational(0));
    auto roots = real_roots(p);
    EXPECT_EQ(static_cast<int>(roots.size()), count_real_roots(p));
    for (std::size_t i = 0; i < roots.size(); ++i) {
      EXPECT_EQ(roots[i].sign_of(p), 0);
      if (i > 0) EXPECT_LT(compare(roots[i - 1], roots[i]), 0);
    }
  }
}

TEST(RealRoots, SignOfAtRoot) {
  AlgebraicReal s2 = real_root(qpoly({-2, 0, 1}), 2);
  // Convergents of sqrt2 alternate around it; compare with a double oracle.
  const long conv[][2] = {{1, 1}, {3, 2}, {7, 5}, {17, 12}, {41, 29}, {99, 70}, {239, 169}};
  for (const auto& c : conv) {
    const double approx = static_cast<double>(c[1]) * 1.4142135623730951 - static_cast<double>(c[0]);
    EXPECT_EQ(s2.sign_of(qpoly({-c[0], c[1]})), approx > 0 ? 1 : -1) << c[0] << "/" << c[1];
  }
  EXPECT_EQ(s2.root_index(), 2);
}

TEST(NumberField, RejectsReducible) {
  EXPECT_THROW(NumberField::make(qpoly({-4, 0, 1})), std::invalid_argument);
}

TEST(NumberField, ArithmeticAndSqrt) {
  auto k = NumberField::make(qpoly({-2, 0, 1}));
  ASSERT_EQ(k->num_real_embeddings(), 2u);
  NFElem th = NFElem::generator(k);
  EXPECT_EQ(th * th, NFElem(k, Rational(2)));
  EXPECT_EQ(th.sign_at(0), -1);
  EXPECT_EQ(th.sign_at(1), 1);
  EXPECT_EQ(th.norm(), -2);
  NFElem a = th + Rational(3);
  EXPECT_EQ(a * a.inverse(), NFElem(k, Rational(1)));
  EXPECT_EQ(a.norm(), 7);

  NFElem sq = (th + Rational(1)) * (th + Rational(1));  // 3 + 2 sqrt2
  auto r = sq.sqrt();
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * *r, sq);
  EXPECT_TRUE(NFElem(k, Rational(2)).is_square());
  EXPECT_FALSE(NFElem(k, Rational(3)).is_square());
  EXPECT_FALSE(th.is_square());
  EXPECT_FALSE((th + Rational(2)).is_square());
}

TEST(NumberField, SqrtInCubicField) {
  auto k = NumberField::make(qpoly({-2, 0, 0, 1}));
  NFElem x = NFElem::generator(k);
  NFElem b = x * x + Rational(1);
  auto r = (b * b).sqrt();
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * *r, b * b);
  EXPECT_FALSE(x.is_square());
  EXPECT_TRUE((x * x * x * x).is_square());
}
