#include <gtest/gtest.h>

#include <random>

#include "witt/signatures.hpp"
#include "witt/simplex.hpp"
#include "witt/springer.hpp"
#include "witt/witness.hpp"

using namespace witt;

namespace {

RationalFunction T() { return RationalFunction::t(); }
RationalFunction P(std::initializer_list<long> c) { return RationalFunction(qpoly(c)); }

TForm flagship() { return TForm({P({1}), T(), P({-2, 0, 1}), P({0, 2, 0, -1})}); }

QForm qform(std::initializer_list<long> e) {
  std::vector<Rational> v;
  for (long x : e) v.emplace_back(x);
  return QForm(v);
}

}  // namespace

TEST(Diagonalize, Examples) {
  QMatrix h(2, 2, Rational(0));
  h(0, 1) = h(1, 0) = 1;
  auto d = diagonalize(h);
  EXPECT_EQ(d.form.dim(), 2u);
  EXPECT_EQ(signature(d.form), 0);
  EXPECT_EQ(d.transform.transpose() * h * d.transform, d.form.gram());

  std::mt19937 rng(7);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    QMatrix g(3, 3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) g(i, j) = g(j, i) = Rational(c(rng));
    if (g.determinant() == 0) {
      EXPECT_THROW(diagonalize(g), SingularForm);
      continue;
    }
    auto r = diagonalize(g);
    EXPECT_EQ(r.transform.transpose() * g * r.transform, r.form.gram());
  }
}

TEST(Signature, ProfileExamples) {
  auto hyp = signature_profile(TForm({P({1}), P({-1})}));
  for (int v : hyp.values) EXPECT_EQ(v, 0);

  auto p = signature_profile(TForm({P({1}), T()}));
  ASSERT_EQ(p.breakpoints.size(), 1u);
  for (std::size_t i = 0; i < p.cuts.size(); ++i)
    EXPECT_EQ(p.values[i], sign_at(T(), p.cuts[i]) > 0 ? 2 : 0) << p.cuts[i].to_text();

  auto f = signature_profile(flagship());
  EXPECT_EQ(f.breakpoints.size(), 3u);
  for (int v : f.values) EXPECT_LE(std::abs(v), 2);
  EXPECT_TRUE(is_totally_indefinite(flagship()));
  EXPECT_FALSE(is_torsion(TForm({P({1}), T()})));
  EXPECT_TRUE(is_torsion(qform({1, 1, -1, -1})));
  EXPECT_FALSE(is_totally_indefinite(qform({1, 1})));
  EXPECT_TRUE(is_totally_indefinite(TForm({P({1}), P({-1})})));
}

TEST(Signature, AdditiveAndMultiplicative) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> c(-4, 4);
  auto entry = [&] {
    RationalFunction f;
    do f = P({c(rng), c(rng), c(rng)}); while (f.is_zero());
    return f;
  };
  for (int trial = 0; trial < 20; ++trial) {
    TForm a({entry(), entry()}), b({entry(), entry(), entry()});
    auto sum = orthogonal_sum(a, b);
    auto prod = tensor(a, b);
    std::vector<RationalFunction> all = sum.entries();
    for (const auto& P : sample_cuts(defining_polys(all))) {
      EXPECT_EQ(signature(sum, P), signature(a, P) + signature(b, P));
      EXPECT_EQ(signature(prod, P), signature(a, P) * signature(b, P));
      EXPECT_EQ((signature(sum, P) - static_cast<int>(sum.dim())) % 2, 0);
    }
    if (is_torsion(sum)) EXPECT_TRUE(is_totally_indefinite(sum));
  }
}

TEST(Signature, NumberFieldExamples) {
  EXPECT_TRUE(weakly_isotropic_number_field(qform({1, -2})));
  EXPECT_FALSE(weakly_isotropic_number_field(qform({1, 2})));
  auto K = NumberField::make(qpoly({-2, 0, 1}));
  NFForm q({NFElem(K, Rational(1)), NFElem::generator(K)});
  EXPECT_FALSE(weakly_isotropic_number_field(q));
  EXPECT_EQ(signature(q, 0), 0);  // theta -> -sqrt2
  EXPECT_EQ(signature(q, 1), 2);  // theta -> +sqrt2
  auto L = NumberField::make(qpoly({1, 0, 1}));
  EXPECT_TRUE(weakly_isotropic_number_field(NFForm({NFElem(L, Rational(1)), NFElem(L, Rational(1))})));
}

TEST(Springer, Examples) {
  auto r = springer_residues(TForm({P({1}), T()}), RealValuation::finite(qpoly({0, 1})));
  ASSERT_EQ(r.first.size(), 1u);
  ASSERT_EQ(r.second.size(), 1u);
  EXPECT_EQ(r.first[0].rational_value(), 1);
  EXPECT_EQ(r.second[0].rational_value(), 1);

  auto s = springer_residues(TForm({T() * T()}), RealValuation::finite(qpoly({0, 1})));
  EXPECT_EQ(s.first.size(), 1u);
  EXPECT_TRUE(s.second.empty());

  const auto v = RealValuation::finite(qpoly({-2, 0, 1}));
  auto f = springer_residues(flagship(), v);
  ASSERT_EQ(f.first.size(), 2u);
  ASSERT_EQ(f.second.size(), 2u);
  const auto theta = NFElem::generator(v.residue_field());
  EXPECT_EQ(f.first[0], NFElem(v.residue_field(), Rational(1)));
  EXPECT_EQ(f.first[1], theta);
  EXPECT_EQ(f.second[0], NFElem(v.residue_field(), Rational(1)));
  EXPECT_EQ(f.second[1], -theta);
  EXPECT_FALSE(weakly_isotropic_number_field(NFForm(f.first)));
  EXPECT_FALSE(weakly_isotropic_number_field(NFForm(f.second)));
}

TEST(Springer, ReconstructionIsCongruent) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> c(-5, 5);
  const std::vector<QPoly> primes{qpoly({0, 1}), qpoly({-2, 0, 1}), qpoly({1, 1}), qpoly({-3, 0, 1})};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<RationalFunction> e;
    for (int i = 0; i < 4; ++i) {
      RationalFunction x(Rational(c(rng) == 0 ? 1 : c(rng) | 1));
      for (const auto& p : primes)
        if (rng() % 3 == 0) x *= RationalFunction(p);
      if (rng() % 4 == 0) x = x / RationalFunction(primes[rng() % primes.size()]);
      e.push_back(x);
    }
    TForm q(e);
    const auto v = trial % 5 == 0 ? RealValuation::infinity() : RealValuation::finite(primes[rng() % primes.size()]);
    auto r = springer_residues(q, v);
    auto rec = springer_reconstruction(r, v);
    EXPECT_EQ(r.transform.transpose() * q.gram() * r.transform, rec.gram());
    for (const auto& u : r.first_units) EXPECT_EQ(valuation(u, v), 0);
    for (const auto& u : r.second_units) EXPECT_EQ(valuation(u, v), 0);
  }
}

TEST(Simplex, SmallSystems) {
  // x + y = 1, x - y = 0
  auto x = feasible_point({{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}}, {Rational(1), Rational(0)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rational(1, 2));
  // x + y = -1 has no nonnegative solution
  EXPECT_FALSE(feasible_point({{Rational(1), Rational(1)}}, {Rational(-1)}));
}

TEST(Witness, Examples) {
  WitnessBounds one;
  one.max_copies = 1;
  auto w = witness_search(qform({1, -1}), one);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->vectors, (std::vector<Rational>{1, 1}));

  WitnessBounds two;
  two.max_copies = 2;
  auto w2 = witness_search(qform({1, -2}), two);
  ASSERT_TRUE(w2);
  EXPECT_EQ(w2->copies, 2u);
  EXPECT_EQ(w2->vectors, (std::vector<Rational>{1, 1, 1, 0}));

  EXPECT_FALSE(witness_search(qform({1, 1})));
  EXPECT_FALSE(witness_search(TForm({P({1}), P({0, 0, 1})})));
}

TEST(Witness, RationalFormsAlwaysVerify) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> c(-40, 40);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> e;
    const int dim = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < dim; ++i) {
      long x = 0;
      while (x == 0) x = c(rng);
      e.emplace_back(x);
    }
    QForm q(e);
    auto w = witness_search(q);
    EXPECT_EQ(w.has_value(), is_totally_indefinite(q)) << q.to_text();
    if (w) {
      EXPECT_TRUE(verify_witness(q, *w));
      EXPECT_LE(w->copies, 8u);
    }
  }
}

TEST(Witness, FunctionFieldForms) {
  const std::vector<TForm> forms{
      TForm({T(), P({0, -1}) - 1, P({1})}),
      TForm({P({1}), P({-1, 0, -1})}),
      TForm({T(), P({-2, 0, 1}), P({0, -1, 0, 1}) * P({1}) * -1, P({1})}),
      TForm({T(), -T() * T() * T() + 2, P({-3})}),
  };
  for (const auto& q : forms) {
    auto w = witness_search(q);
    ASSERT_TRUE(w) << q.to_text();
    EXPECT_TRUE(verify_witness(q, *w));
    EXPECT_LE(w->copies, 8u);
    for (const auto& x : w->vectors) {
      EXPECT_TRUE(x.is_polynomial());
      EXPECT_LE(x.num().degree(), 6);
    }
  }
}

TEST(OrthogonalRepresentation, RanksUpToFour) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> c(1, 500);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> d;
    const std::size_t r = 1 + rng() % 4;
    for (std::size_t k = 0; k < r; ++k) d.push_back(make_rational(c(rng), c(rng)));
    auto w = orthogonal_representation(d, 8);
    ASSERT_TRUE(w);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) {
        Rational s = 0;
        for (std::size_t i = 0; i < (*w)[a].size(); ++i) s += (*w)[a][i] * (*w)[b][i];
        EXPECT_EQ(s, a == b ? d[a] : Rational(0));
      }
  }
}
