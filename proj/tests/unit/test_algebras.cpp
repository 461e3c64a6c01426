#include <gtest/gtest.h>

#include <random>

#include "witt/congruence.hpp"
#include "witt/involution.hpp"

using namespace witt;

namespace {

using QA = QuaternionAlgebra<Rational>;
using TA = QuaternionAlgebra<RationalFunction>;
using Quat = Quaternion<Rational>;

RationalFunction T() { return RationalFunction::t(); }

QForm qform(std::initializer_list<long> e) {
  std::vector<Rational> v;
  for (long x : e) v.emplace_back(x);
  return QForm(v);
}

Quat quat(long x0, long x1, long x2, long x3) { return {{Rational(x0), Rational(x1), Rational(x2), Rational(x3)}}; }

// Left regular representation of x on the basis 1, i, j, k, built column by column from the
// defining relations written out by hand.
QMatrix left_regular(const QA& d, const Quat& x) {
  const Rational a = d.a(), b = d.b();
  const auto& p = x.c;
  QMatrix m(4, 4, Rational(0));
  // x * 1
  for (int r = 0; r < 4; ++r) m(r, 0) = p[r];
  // x * i = p0 i + p1 a + p2 (ji = -k) + p3 (ki = -a j)
  m(0, 1) = a * p[1];
  m(1, 1) = p[0];
  m(2, 1) = -a * p[3];
  m(3, 1) = -p[2];
  // x * j = p0 j + p1 k + p2 b + p3 (kj = b i)
  m(0, 2) = b * p[2];
  m(1, 2) = b * p[3];
  m(2, 2) = p[0];
  m(3, 2) = p[1];
  // x * k = p0 k + p1 (ik = a j) + p2 (jk = -b i) + p3 (kk = -ab)
  m(0, 3) = -a * b * p[3];
  m(1, 3) = -b * p[2];
  m(2, 3) = a * p[1];
  m(3, 3) = p[0];
  return m;
}

}  // namespace

TEST(Quaternion, MultiplicationMatchesRegularRepresentation) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> c(-6, 6), ab(-20, 20);
  for (int trial = 0; trial < 60; ++trial) {
    long a = ab(rng), b = ab(rng);
    if (a == 0 || b == 0) continue;
    QA d{Rational(a), Rational(b)};
    const Quat x = quat(c(rng), c(rng), c(rng), c(rng)), y = quat(c(rng), c(rng), c(rng), c(rng));
    const auto xy = d.mul(x, y);
    const QMatrix col = left_regular(d, x) * QMatrix([&] {
                          QMatrix v(4, 1, Rational(0));
                          for (int r = 0; r < 4; ++r) v(r, 0) = y.c[r];
                          return v;
                        }());
    for (int r = 0; r < 4; ++r) EXPECT_EQ(xy.c[r], col(r, 0));
    EXPECT_EQ(d.norm(xy), d.norm(x) * d.norm(y));
    EXPECT_EQ(left_regular(d, x).determinant(), d.norm(x) * d.norm(x));
    const auto tr = x + d.conj(x);
    EXPECT_TRUE(tr.c[1] == 0 && tr.c[2] == 0 && tr.c[3] == 0);
    EXPECT_EQ(d.mul(x, d.conj(x)), d.scalar(d.norm(x)));
  }
}

TEST(Quaternion, NormFormExamples) {
  EXPECT_EQ(norm_form(QA(Rational(-1), Rational(-1))), qform({1, 1, 1, 1}));
  EXPECT_EQ(norm_form(QA(Rational(2), Rational(3))), qform({1, -2, -3, 6}));
  const auto split = norm_form(QA(Rational(1), Rational(5)));
  EXPECT_EQ(split, qform({1, -1, -5, 5}));
  EXPECT_TRUE(is_torsion(split));
}

TEST(Quaternion, IsDivision) {
  EXPECT_EQ(is_division(QA(Rational(-1), Rational(-1))), std::optional<bool>(true));
  EXPECT_EQ(is_division(QA(Rational(1), Rational(7))), std::optional<bool>(false));
  EXPECT_EQ(is_division(QA(Rational(2), Rational(3))), std::optional<bool>(true));  // (2,3)_3 = -1
  EXPECT_EQ(is_division(QA(Rational(2), Rational(7))), std::optional<bool>(false));
  EXPECT_EQ(is_division(TA(RationalFunction(-1), T())), std::optional<bool>(true));
  EXPECT_EQ(is_division(TA(RationalFunction(1), T())), std::optional<bool>(false));
  EXPECT_EQ(is_division(TA(T(), -T())), std::optional<bool>(false));
}

TEST(Quaternion, SplitAlgebrasHaveNormFormWitness) {
  for (long a = -12; a <= 12; ++a)
    for (long b = -12; b <= 12; ++b) {
      if (a == 0 || b == 0) continue;
      QA d{Rational(a), Rational(b)};
      if (*is_division(d)) continue;
      auto v = norm_form_isotropic_vector(d);
      ASSERT_TRUE(v) << a << " " << b;
      EXPECT_EQ(norm_form(d).evaluate(*v), 0);
    }
  TA d(RationalFunction(qpoly({1, 0, 1})), RationalFunction(-1));
  auto v = norm_form_isotropic_vector(d);
  ASSERT_TRUE(v);
  EXPECT_TRUE(norm_form(d).evaluate(*v).is_zero());
}

TEST(Quaternion, Admissibility) {
  EXPECT_TRUE(ordering_admissible(QA(Rational(-1), Rational(-1))));
  EXPECT_FALSE(ordering_admissible(QA(Rational(1), Rational(-3))));
  const TA d(RationalFunction(-1), T());
  const Cut right0 = Cut::right_of(AlgebraicReal(Rational(0)));
  const Cut left0 = Cut::left_of(AlgebraicReal(Rational(0)));
  EXPECT_FALSE(ordering_admissible(d, right0));
  EXPECT_TRUE(ordering_admissible(d, left0));
  // norm form definite at P iff a <_P 0 and b <_P 0
  const TA e(T() - RationalFunction(1), -T());
  for (const auto& P : sample_cuts(defining_polys({e.a(), e.b()}))) {
    const int s = signature(norm_form(e), P);
    EXPECT_EQ(std::abs(s) == 4, ordering_admissible(e, P)) << P.to_text();
  }

  const auto vt = RealValuation::finite(qpoly({0, 1}));
  EXPECT_EQ(valuation_admissible(TA(RationalFunction(-1), RationalFunction(-1)), vt), std::optional<bool>(true));
  EXPECT_EQ(valuation_admissible(d, vt), std::optional<bool>(true));
  EXPECT_EQ(valuation_admissible(TA(RationalFunction(1), T()), vt), std::optional<bool>(false));
  EXPECT_EQ(valuation_admissible(TA(RationalFunction(1), T()), RealValuation::infinity()), std::optional<bool>(false));
}

TEST(Quaternion, SkewIsotropyRealClosed) {
  EXPECT_FALSE(skew_isotropy_real_closed(1, true));
  EXPECT_TRUE(skew_isotropy_real_closed(2, true));
  EXPECT_TRUE(skew_isotropy_real_closed(5, true));
  EXPECT_THROW(skew_isotropy_real_closed(2, false), std::invalid_argument);
  // n = 2: bounded search over Q finds sum conj(x_r) d_r x_r = 0 in (-1,-1)
  const QA h(Rational(-1), Rational(-1));
  AlgebraWithInvolution<Rational> A(Index2Orthogonal<Rational>{SkewHermitianForm<Rational>(h, {quat(0, 1, 0, 0), quat(0, 0, 1, 0)})});
  WitnessBounds b;
  b.max_copies = 1;
  auto w = skew_witness_search(A, b);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(A, *w));
}

TEST(Jacobson, FormulaExamples) {
  const QA h(Rational(-1), Rational(-1));
  EXPECT_EQ(jacobson_trace(HermitianForm<Rational>(h, {Rational(1)})), qform({1, 1, 1, 1}));
  const QA d(Rational(2), Rational(-5));
  const auto q = jacobson_trace(HermitianForm<Rational>(d, {Rational(1), Rational(-1)}));
  EXPECT_EQ(q.dim(), 8u);
  EXPECT_TRUE(is_torsion(q));
  const auto qt = jacobson_trace(HermitianForm<RationalFunction>(TA(RationalFunction(-1), RationalFunction(-1)), {RationalFunction(1), T()}));
  const TForm ones({RationalFunction(1), RationalFunction(1), RationalFunction(1), RationalFunction(1)});
  EXPECT_TRUE(find_congruence(qt.gram(), tensor(ones, TForm({RationalFunction(1), T()}))));
}

TEST(Jacobson, GramIsCongruentToFormula) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> ab(-20, 20), al(-9, 9), dim(1, 4);
  int checked = 0;
  while (checked < 40) {
    const long a = ab(rng), b = ab(rng);
    if (a == 0 || b == 0) continue;
    const QA d{Rational(a), Rational(b)};
    std::vector<Rational> e;
    for (long k = dim(rng); k > 0; --k) {
      long x = 0;
      while (x == 0) x = al(rng);
      e.emplace_back(x);
    }
    HermitianForm<Rational> h(d, e);
    const auto g = jacobson_gram(h);
    const auto target = tensor(norm_form(d), QForm(e));
    const auto t = find_congruence(g, target);
    ASSERT_TRUE(t);
    EXPECT_TRUE(is_congruence(g, target.gram(), *t));
    ++checked;
  }
}

TEST(Involution, TraceFormExamples) {
  const QA h(Rational(-1), Rational(-1));
  using Alg = AlgebraWithInvolution<Rational>;
  Alg gamma(QuatTensor<Rational>{{{h, std::nullopt}}, 1});
  EXPECT_TRUE(find_congruence(gamma.trace_gram(), qform({2, 2, 2, 2})));
  Alg twisted(QuatTensor<Rational>{{{h, quat(0, 1, 0, 0)}}, 1});
  EXPECT_TRUE(find_congruence(twisted.trace_gram(), qform({2, 2, -2, -2})));
  Alg one(SplitOrthogonal<Rational>{qform({1})});
  EXPECT_EQ(trace_form(one), qform({1}));

  EXPECT_EQ(signature_involution(Alg(SplitOrthogonal<Rational>{qform({1, 1})})), 2);
  EXPECT_EQ(signature_involution(gamma), 2);
  EXPECT_EQ(signature_involution(twisted), 0);
  EXPECT_TRUE(is_weakly_hyperbolic(Alg(SplitOrthogonal<Rational>{qform({1, -1})})));
  EXPECT_FALSE(is_weakly_hyperbolic(gamma));
  EXPECT_TRUE(is_weakly_hyperbolic(twisted));
  EXPECT_EQ(gamma.type(), InvolutionType::symplectic);
  EXPECT_EQ(twisted.type(), InvolutionType::orthogonal);
  EXPECT_THROW(Alg(SplitOrthogonal<Rational>{qform({1, 1, 1, 1, 1, 1, 1, 1, 1})}), DimensionCap);
}

TEST(Involution, TensorTraceForm) {
  const QA h(Rational(-1), Rational(-1));
  using Alg = AlgebraWithInvolution<Rational>;
  QuatTensor<Rational> one{{{h, std::nullopt}}, 1};
  EXPECT_TRUE(find_congruence(Alg(one).trace_gram(), tensor_trace_form(one)));
  QuatTensor<Rational> two{{{h, std::nullopt}, {h, std::nullopt}}, 1};
  const auto tf = tensor_trace_form(two);
  EXPECT_EQ(signature(tf), 16);
  EXPECT_TRUE(find_congruence(Alg(two).trace_gram(), tf));
  EXPECT_EQ(signature_involution(Alg(two)), 4);
  QuatTensor<Rational> mixed{{{h, std::nullopt}, {h, quat(0, 1, 0, 0)}}, 1};
  EXPECT_EQ(signature(tensor_trace_form(mixed)), 0);
  EXPECT_EQ(signature(trace_form(Alg(mixed))), 0);
}

TEST(Involution, ScaleAndWitnesses) {
  using Alg = AlgebraWithInvolution<Rational>;
  const QA h(Rational(-1), Rational(-1));
  Alg a(Index2Symplectic<Rational>{HermitianForm<Rational>(h, {Rational(1)})});
  const auto a2 = scale(2, a);
  ASSERT_TRUE(std::holds_alternative<Index2Symplectic<Rational>>(a2.data()));
  EXPECT_EQ(std::get<Index2Symplectic<Rational>>(a2.data()).form.entries.size(), 2u);
  EXPECT_EQ(scale(1, a).dim(), a.dim());
  for (int n = 1; n <= 3; ++n)
    EXPECT_EQ(signature_involution(scale(n, a)), n * signature_involution(a));

  Alg so(SplitOrthogonal<Rational>{qform({1, -1})});
  auto w = pull_back_witness(so, IsotropyWitness<Rational>{1, {Rational(1), Rational(1)}});
  EXPECT_TRUE(verify_witness(so, w));
  EXPECT_FALSE(verify_witness(so, InvolutionWitness<Rational>{{so.zero()}}));

  Alg sp(Index2Symplectic<Rational>{HermitianForm<Rational>(h, {Rational(1), Rational(-2)})});
  const auto qh = jacobson_trace(std::get<Index2Symplectic<Rational>>(sp.data()).form);
  auto qw = witness_search(qh);
  ASSERT_TRUE(qw);
  EXPECT_TRUE(verify_witness(sp, pull_back_witness(sp, *qw)));
  // the same vector as one element of copies x A
  const auto big = scale(qw->copies, sp);
  EXPECT_TRUE(verify_witness(big, pull_back_witness(big, IsotropyWitness<Rational>{1, qw->vectors})));
}

TEST(Involution, SymplecticSplitModels) {
  AlgebraWithInvolution<Rational> s(SplitSymplectic<Rational>{2, Rational(0)});
  EXPECT_EQ(s.degree(), 4u);
  EXPECT_EQ(signature_involution(s), 0);
  EXPECT_TRUE(real_closed_isotropic(s));
}

TEST(Involution, CorpusSignaturesArePerfectSquares) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> ab(-20, 20), e(-9, 9), dim(1, 6), kind(0, 2);
  using Alg = AlgebraWithInvolution<Rational>;
  auto nz = [&](std::uniform_int_distribution<long>& dist) {
    long x = 0;
    while (x == 0) x = dist(rng);
    return Rational(x);
  };
  for (int trial = 0; trial < 100; ++trial) {
    const int k = static_cast<int>(kind(rng));
    if (k == 0) {
      std::vector<Rational> v;
      for (long n = dim(rng); n > 0; --n) v.push_back(nz(e));
      const QForm q(v);
      Alg A(SplitOrthogonal<Rational>{q});
      EXPECT_EQ(signature_involution(A), std::abs(signature(q)));
    } else {
      QuatTensor<Rational> t;
      for (int r = 0; r < k; ++r) {
        QA d(nz(ab), nz(ab));
        std::optional<Quat> tw;
        if (rng() % 2) {
          Quat s = quat(0, static_cast<long>(rng() % 3), static_cast<long>(rng() % 3), static_cast<long>(rng() % 2));
          if (!s.is_zero() && d.norm(s) != 0) tw = s;
        }
        t.factors.push_back({d, tw});
      }
      Alg A(t);
      const int s = signature(trace_form(A));
      EXPECT_GE(s, 0);
      EXPECT_NO_THROW(involution_signature_from_trace(s));
      if (k == 1) {
        // T_sigma is congruent to <2> times a 2-fold Pfister form
        const auto& f = t.factors[0];
        const auto& d = f.algebra;
        QForm pf = qform({1, 1, 1, 1});
        if (!f.twist) {
          pf = norm_form(d);
        } else {
          // <1, n(s)> + (-1) x (norm form on the pure quaternions orthogonal to s)
          const std::array<Rational, 3> w{-d.a(), -d.b(), d.a() * d.b()};
          const auto& sc = f.twist->c;
          const std::array<Rational, 3> row{w[0] * sc[1], w[1] * sc[2], w[2] * sc[3]};
          std::size_t piv = 0;
          while (row[piv] == 0) ++piv;
          std::vector<std::array<Rational, 3>> ker;
          for (std::size_t k = 0; k < 3; ++k) {
            if (k == piv) continue;
            std::array<Rational, 3> u{};
            u[k] = 1;
            u[piv] = -row[k] / row[piv];
            ker.push_back(u);
          }
          QMatrix g(2, 2, Rational(0));
          for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
              for (int k = 0; k < 3; ++k) g(r, c) += w[k] * ker[r][k] * ker[c][k];
          const auto comp = diagonalize(g);
          pf = QForm({Rational(1), d.norm(*f.twist), -comp.form[0], -comp.form[1]});
          // basis 1, s, y, z of the algebra: an explicit congruence
          QMatrix bm(4, 4, Rational(0));
          bm(0, 0) = 1;
          for (int k = 1; k < 4; ++k) bm(k, 1) = sc[k];
          for (int col = 0; col < 2; ++col)
            for (int k = 0; k < 3; ++k)
              bm(k + 1, col + 2) = comp.transform(0, col) * ker[0][k] + comp.transform(1, col) * ker[1][k];
          EXPECT_TRUE(is_congruence(A.trace_gram(), scaled(Rational(2), pf).gram(), bm)) << A.to_text();
          continue;
        }
        EXPECT_TRUE(find_congruence(A.trace_gram(), scaled(Rational(2), pf))) << A.to_text();
      }
    }
  }
}

TEST(Involution, IndexTwoRequiresDivision) {
  const QA split(Rational(1), Rational(3));
  EXPECT_THROW(AlgebraWithInvolution<Rational>(Index2Symplectic<Rational>{HermitianForm<Rational>(split, {Rational(1)})}),
               std::invalid_argument);
}
