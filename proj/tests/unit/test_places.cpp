#include <gtest/gtest.h>

#include <random>

#include "witt/places.hpp"
#include "witt/series.hpp"

using namespace witt;

namespace {

RationalFunction T() { return RationalFunction::t(); }

RationalFunction random_function(std::mt19937& rng) {
  std::uniform_int_distribution<long> coef(-6, 6);
  auto poly = [&](int deg) {
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(coef(rng));
    if (c.back() == 0) c.back() = 1;
    return QPoly(c, Rational(0));
  };
  return RationalFunction(poly(static_cast<int>(rng() % 4)), poly(static_cast<int>(rng() % 3)));
}

AlgebraicReal sqrt2() { return real_root(qpoly({-2, 0, 1}), 2); }

}  // namespace

TEST(RationalFunction, Normalization) {
  RationalFunction f(qpoly({-1, 0, 1}), qpoly({2, 2}));  // (t^2-1)/(2t+2) = (t-1)/2
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.num(), QPoly(std::vector<Rational>{make_rational(-1, 2), make_rational(1, 2)}, Rational(0)));
  EXPECT_EQ((T() / (T() + 1)).to_text(), "t/(t+1)");
  EXPECT_EQ(f * f.inverse(), RationalFunction(1));
}

TEST(Cut, SignExamples) {
  EXPECT_EQ(sign_at(T(), Cut::right_of(AlgebraicReal(Rational(0)))), 1);
  EXPECT_EQ(sign_at(T(), Cut::left_of(AlgebraicReal(Rational(0)))), -1);
  EXPECT_EQ(sign_at(T(), Cut::neg_infinity()), -1);
  EXPECT_EQ(sign_at(RationalFunction(qpoly({-2, 0, 1})), Cut::left_of(sqrt2())), -1);
  EXPECT_EQ(sign_at(RationalFunction(qpoly({-2, 0, 1})), Cut::right_of(sqrt2())), 1);
  // Double root: positive on both sides.
  EXPECT_EQ(sign_at(RationalFunction(qpoly({1, -2, 1})), Cut::left_of(AlgebraicReal(Rational(1)))), 1);
}

TEST(Cut, SignCoherence) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    RationalFunction f = random_function(rng), g = random_function(rng);
    if (f.is_zero() || g.is_zero()) continue;
    for (const auto& P : sample_cuts(defining_polys({f, g}))) {
      EXPECT_EQ(sign_at(f * g, P), sign_at(f, P) * sign_at(g, P));
      EXPECT_EQ(sign_at(f * f, P), 1);
    }
  }
}

TEST(Valuation, Examples) {
  auto v0 = RealValuation::finite(qpoly({0, 1}));
  auto [e1, r1] = valuation_and_residue(T().pow(3) / (T() + 1), v0);
  EXPECT_EQ(e1, 3);
  EXPECT_EQ(r1, NFElem(v0.residue_field(), Rational(1)));
  auto vinf = RealValuation::infinity();
  auto [e2, r2] = valuation_and_residue(RationalFunction(qpoly({1, 0, 1})), vinf);
  EXPECT_EQ(e2, -2);
  EXPECT_EQ(r2.rational_value(), 1);
  auto v2 = RealValuation::finite(qpoly({-2, 0, 1}));
  auto [e3, r3] = valuation_and_residue(T(), v2);
  EXPECT_EQ(e3, 0);
  EXPECT_EQ(r3, NFElem::generator(v2.residue_field()));
  EXPECT_THROW(RealValuation::finite(qpoly({1, 0, 1})), std::invalid_argument);
  EXPECT_THROW(valuation_and_residue(RationalFunction(), v0), ZeroFunction);
}

TEST(Valuation, Homomorphism) {
  std::mt19937 rng(5);
  const std::vector<RealValuation> vals{RealValuation::finite(qpoly({0, 1})), RealValuation::finite(qpoly({-1, 1})),
                                        RealValuation::finite(qpoly({-2, 0, 1})), RealValuation::infinity()};
  for (int trial = 0; trial < 40; ++trial) {
    RationalFunction f = random_function(rng), g = random_function(rng);
    if (f.is_zero() || g.is_zero()) continue;
    for (const auto& v : vals) {
      auto [vf, rf] = valuation_and_residue(f, v);
      auto [vg, rg] = valuation_and_residue(g, v);
      auto [vfg, rfg] = valuation_and_residue(f * g, v);
      EXPECT_EQ(vfg, vf + vg);
      EXPECT_EQ(rfg, rf * rg);
    }
  }
}

TEST(TotallyPositive, Examples) {
  EXPECT_TRUE(is_totally_positive(Rational(2)));
  EXPECT_TRUE(is_totally_positive(RationalFunction(qpoly({1, 0, 1}))));
  EXPECT_FALSE(is_totally_positive(T()));
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    RationalFunction f = random_function(rng), g = random_function(rng);
    if (f.is_zero() || g.is_zero()) continue;
    EXPECT_EQ(is_totally_positive(f), is_totally_positive(f * g * g));
  }
}

TEST(Series, ExpansionMatchesFunction) {
  // At t^2 - 2: expand t and check p(t) = pi.
  auto v = RealValuation::finite(qpoly({-2, 0, 1}));
  SeriesElement t = expand(T(), v, 6);
  SeriesElement p = t * t - SeriesElement::constant(v.residue_field(), NFElem(v.residue_field(), Rational(2)), 6);
  EXPECT_EQ(p.valuation(), 1);
  EXPECT_EQ(p.leading(), NFElem(v.residue_field(), Rational(1)));
  for (int e = 2; e < 6; ++e) EXPECT_TRUE(p.coeff(e).is_zero());
  // 1/(1-t) at t = 0 is the geometric series.
  auto v0 = RealValuation::finite(qpoly({0, 1}));
  SeriesElement g = expand(RationalFunction(1) / (RationalFunction(1) - T()), v0, 5);
  for (int e = 0; e < 5; ++e) EXPECT_EQ(g.coeff(e).rational_value(), 1);
  SeriesElement w = expand((T() + 1) / T().pow(2), RealValuation::infinity(), 4);  // 1/t + 1/t^2
  EXPECT_EQ(w.valuation(), 1);
  EXPECT_EQ(w.coeff(2).rational_value(), 1);
  EXPECT_TRUE(w.coeff(3).is_zero());
}

namespace {

void expect_on_conic(const std::array<SeriesElement, 3>& pt, const RationalFunction& a, const RationalFunction& b,
                     const RealValuation& v, int prec) {
  const SeriesElement A = expand(a, v, prec + 8), B = expand(b, v, prec + 8);
  const SeriesElement q = pt[0] * pt[0] - A * pt[1] * pt[1] - B * pt[2] * pt[2];
  EXPECT_TRUE(q.is_indistinguishable_from_zero()) << q.to_text();
  EXPECT_FALSE(pt[0].is_indistinguishable_from_zero());
}

}  // namespace

TEST(Conic, Examples) {
  auto v0 = RealValuation::finite(qpoly({0, 1}));
  auto pt = hensel_lift_conic(T() + 1, RationalFunction(1), v0, 8);
  ASSERT_TRUE(pt.has_value());
  EXPECT_EQ((*pt)[0].coeff(0).rational_value(), 1);
  EXPECT_EQ((*pt)[2].coeff(0).rational_value(), 1);
  expect_on_conic(*pt, T() + 1, RationalFunction(1), v0, 8);
  EXPECT_FALSE(hensel_lift_conic(T(), T(), v0, 8).has_value());
  EXPECT_FALSE(hensel_lift_conic(RationalFunction(-1), RationalFunction(-1), v0, 8).has_value());
  EXPECT_THROW(hensel_lift_conic(T().pow(5), RationalFunction(1), v0, 3), PrecisionExhausted);
}

TEST(Conic, PointsSatisfyEquation) {
  const std::vector<RealValuation> vals{RealValuation::finite(qpoly({0, 1})), RealValuation::finite(qpoly({-2, 0, 1})),
                                        RealValuation::infinity()};
  const std::vector<std::pair<RationalFunction, RationalFunction>> cases{
      {T() + 1, RationalFunction(1)},   {T(), -T()},
      {RationalFunction(2), T() - 3},   {T() * (T() - 1), RationalFunction(-1) * (T() + 5)},
      {RationalFunction(3), RationalFunction(-2)}, {-T(), T() * T() + 7}};
  int found = 0;
  for (const auto& v : vals)
    for (const auto& [a, b] : cases) {
      auto pt = hensel_lift_conic(a, b, v, 10);
      if (!pt) continue;
      ++found;
      expect_on_conic(*pt, a, b, v, 10);
    }
  EXPECT_GE(found, 8);
}
