#include <gtest/gtest.h>

#include <random>

#include "witt/lgp.hpp"
#include "witt/morita.hpp"

using namespace witt;

namespace {

using QA = QuaternionAlgebra<Rational>;
using TA = QuaternionAlgebra<RationalFunction>;
using Alg = AlgebraWithInvolution<Rational>;
using TAlg = AlgebraWithInvolution<RationalFunction>;

RationalFunction T() { return RationalFunction::t(); }
RationalFunction P(std::initializer_list<long> c) { return RationalFunction(qpoly(c)); }
RationalFunction C(long c) { return RationalFunction(Rational(c)); }

QForm qform(std::initializer_list<long> e) {
  std::vector<Rational> v;
  for (long x : e) v.emplace_back(x);
  return QForm(v);
}

Quaternion<Rational> quat(long x0, long x1, long x2, long x3) {
  return {{Rational(x0), Rational(x1), Rational(x2), Rational(x3)}};
}
Quaternion<RationalFunction> tquat(RationalFunction x1, RationalFunction x2, RationalFunction x3) {
  return {{C(0), std::move(x1), std::move(x2), std::move(x3)}};
}

void expect_witness_verifies(const QForm& q, const Decision& d) {
  ASSERT_TRUE(d.has_witness());
  const auto& w = std::get<IsotropyWitness<Rational>>(*std::get<WeaklyIsotropic>(d.result).witness);
  EXPECT_TRUE(verify_witness(q, w));
}

}  // namespace

TEST(BrockerPrestel, HyperbolicPlane) {
  const TForm q({C(1), C(-1)});
  const auto d = bp_quadratic(q);
  ASSERT_TRUE(d.has_witness());
  EXPECT_TRUE(verify_witness(q, std::get<IsotropyWitness<RationalFunction>>(*std::get<WeaklyIsotropic>(d.result).witness)));
}

TEST(BrockerPrestel, OrderingObstruction) {
  const TForm q({C(1), C(1), T()});
  const auto d = bp_quadratic(q);
  ASSERT_TRUE(d.strongly_anisotropic());
  const auto& o = std::get<OrderingObstruction>(d.obstruction());
  ASSERT_TRUE(o.cut);
  EXPECT_EQ(o.value, 3);
  EXPECT_EQ(o.condition, "form-definite");
  // t > 0 at the reported cut
  EXPECT_EQ(sign_at(T(), *o.cut), 1);
  EXPECT_TRUE(verify_obstruction(q, d.obstruction()));
  EXPECT_EQ(d.route, "bp/ordering");

  const auto one = bp_quadratic(TForm({T()}));
  EXPECT_TRUE(one.strongly_anisotropic());
  EXPECT_TRUE(verify_obstruction(TForm({T()}), one.obstruction()));
}

TEST(BrockerPrestel, FlagshipValuationObstruction) {
  const auto p = P({-2, 0, 1});
  const TForm q({C(1), T(), p, -(T() * p)});
  EXPECT_TRUE(is_totally_indefinite(q));
  const auto d = bp_quadratic(q);
  ASSERT_TRUE(d.strongly_anisotropic());
  const auto& o = std::get<ValuationObstruction>(d.obstruction());
  ASSERT_FALSE(o.valuation.is_infinity());
  EXPECT_EQ(o.valuation.prime(), qpoly({-2, 0, 1}));
  ASSERT_EQ(o.first.size(), 2u);
  ASSERT_EQ(o.second.size(), 2u);
  // residues <1, theta> and <1, -theta>: definite exactly where +-theta > 0
  const auto& k = o.valuation.residue_field();
  ASSERT_EQ(k->num_real_embeddings(), 2u);
  auto definite_count = [&](const std::vector<NFElem>& r) {
    int n = 0;
    for (std::size_t e = 0; e < 2; ++e) {
      int s = 0;
      for (const auto& x : r) s += x.sign_at(e);
      if (std::abs(s) == 2) ++n;
    }
    return n;
  };
  EXPECT_EQ(definite_count(o.first), 1);
  EXPECT_EQ(definite_count(o.second), 1);
  EXPECT_TRUE(o.first_embedding && o.second_embedding);
  EXPECT_NE(*o.first_embedding, *o.second_embedding);
  EXPECT_TRUE(verify_obstruction(q, d.obstruction()));

  // tampered residues are rejected
  auto bad = o;
  bad.second[1] = -bad.second[1];
  EXPECT_FALSE(verify_obstruction(q, LocalObstruction(bad)));
}

TEST(BrockerPrestel, RelevantValuations) {
  const auto p = P({-2, 0, 1});
  const auto v = relevant_valuations(TForm({C(1), T(), p, -(T() * p)}));
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0].prime(), qpoly({0, 1}));
  EXPECT_EQ(v[1].prime(), qpoly({-2, 0, 1}));
  EXPECT_TRUE(v[2].is_infinity());
  // squares and factors without real roots do not contribute
  EXPECT_TRUE(relevant_valuations(TForm({C(1), T() * T(), P({1, 0, 1})})).empty());
}

TEST(BrockerPrestel, ExtraValuationsDoNotChangeDecisions) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> c(-4, 4), dim(2, 4), deg(0, 2);
  std::vector<RealValuation> extra;
  for (long a : {-3, -1, 2, 3, 7}) extra.push_back(RealValuation::finite(qpoly({a, 1})));
  for (long a : {-3, -5}) extra.push_back(RealValuation::finite(qpoly({a, 0, 1})));
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RationalFunction> e;
    const long n = dim(rng);
    while (static_cast<long>(e.size()) < n) {
      std::vector<Rational> co;
      const long d = deg(rng);
      for (long i = 0; i <= d; ++i) co.emplace_back(c(rng));
      QPoly f(co, Rational(0));
      if (f.is_zero()) continue;
      e.emplace_back(f);
    }
    const TForm q(e);
    DecisionOptions base;
    base.search_witness = false;
    DecisionOptions more = base;
    for (const auto& v : extra) {
      bool relevant = false;
      for (const auto& r : relevant_valuations(q)) relevant = relevant || r == v;
      if (!relevant) more.extra_valuations.push_back(v);
    }
    const auto d1 = bp_quadratic(q, base), d2 = bp_quadratic(q, more);
    EXPECT_EQ(d1.result.index(), d2.result.index()) << q.to_text();
  }
}

TEST(Sap, QuadraticExamples) {
  EXPECT_TRUE(prestel_sap_quadratic(qform({1, 2})).strongly_anisotropic());
  const auto q = qform({1, -2});
  expect_witness_verifies(q, prestel_sap_quadratic(q));
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> c(-30, 30);
  for (int trial = 0; trial < 20; ++trial) {
    long a = 0, b = 0;
    while (a == 0) a = c(rng);
    while (b == 0) b = c(rng);
    const auto f = qform({1, a, b, -a * b});
    expect_witness_verifies(f, prestel_sap_quadratic(f));
  }
}

TEST(Sap, NumberFieldQuadratic) {
  const auto K = NumberField::make(qpoly({-2, 0, 1}));
  const auto th = NFElem::generator(K);
  const NFForm q({NFElem(K, Rational(1)), th});
  const auto d = prestel_sap_quadratic(q);
  ASSERT_TRUE(d.strongly_anisotropic());
  EXPECT_TRUE(verify_obstruction(q, d.obstruction()));
  EXPECT_TRUE(prestel_sap_quadratic(NFForm({NFElem(K, Rational(1)), NFElem(K, Rational(-2))})).weakly_isotropic());
}

TEST(Sap, InvolutionExamples) {
  const QA h{Rational(-1), Rational(-1)};
  const auto split = sap_decide(Alg(SplitOrthogonal<Rational>{qform({1, -2})}));
  ASSERT_TRUE(split.has_witness());
  const auto definite = Alg(SplitOrthogonal<Rational>{qform({1, 1})});
  const auto d = sap_decide(definite);
  ASSERT_TRUE(d.strongly_anisotropic());
  EXPECT_TRUE(verify_obstruction(definite, d.obstruction()));

  // anisotropic over R, yet two copies are isotropic: conj(j) i j + conj(1) i 1 = 0
  const Alg skew1(Index2Orthogonal<Rational>{SkewHermitianForm<Rational>(h, {quat(0, 1, 0, 0)})});
  EXPECT_FALSE(real_closed_isotropic(skew1));
  const auto s1 = sap_decide(skew1);
  ASSERT_TRUE(s1.has_witness());
  const auto& w1 = std::get<InvolutionWitness<Rational>>(*std::get<WeaklyIsotropic>(s1.result).witness);
  EXPECT_GE(w1.elements.size(), 2u);
  EXPECT_TRUE(verify_witness(skew1, w1));

  const Alg skew2(Index2Orthogonal<Rational>{SkewHermitianForm<Rational>(h, {quat(0, 1, 0, 0), quat(0, 0, 1, 0)})});
  const auto s2 = bp_involution(skew2);
  ASSERT_TRUE(s2.has_witness());
  EXPECT_TRUE(verify_witness(skew2, std::get<InvolutionWitness<Rational>>(*std::get<WeaklyIsotropic>(s2.result).witness)));

  const auto symp = bp_involution(Alg(SplitSymplectic<Rational>{3, Rational(0)}));
  EXPECT_TRUE(symp.has_witness());
}

TEST(Ed, AgreesWithSapAndRefusesSeveralOrderings) {
  const QA h{Rational(-1), Rational(-1)};
  std::vector<Alg> models{Alg(SplitOrthogonal<Rational>{qform({1, -2})}), Alg(SplitOrthogonal<Rational>{qform({3, 5})}),
                          Alg(Index2Symplectic<Rational>{HermitianForm<Rational>(h, {Rational(1), Rational(1)})}),
                          Alg(Index2Symplectic<Rational>{HermitianForm<Rational>(h, {Rational(1), Rational(-3)})})};
  const bool expected[] = {true, false, false, true};
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto e = ed_decide(models[i]), s = sap_decide(models[i]);
    EXPECT_EQ(e.weakly_isotropic(), expected[i]);
    EXPECT_EQ(e.weakly_isotropic(), s.weakly_isotropic());
    if (e.strongly_anisotropic()) EXPECT_TRUE(verify_obstruction(models[i], e.obstruction()));
  }
  const auto K = NumberField::make(qpoly({-2, 0, 1}));
  const AlgebraWithInvolution<NFElem> nf(
      SplitOrthogonal<NFElem>{NFForm({NFElem(K, Rational(1)), NFElem::generator(K)})});
  EXPECT_THROW(ed_decide(nf), MultipleOrderings);
  const auto d = sap_decide(nf);
  ASSERT_TRUE(d.strongly_anisotropic());
  EXPECT_TRUE(verify_obstruction(nf, d.obstruction()));
}

TEST(Ed, EffectiveDiagonalization) {
  EXPECT_EQ(effectively_diagonalize(qform({1, -1})), qform({-1, 1}));
  EXPECT_EQ(effectively_diagonalize(qform({3, -2, 5})), qform({-2, 3, 5}));
  EXPECT_EQ(effectively_diagonalize(qform({1, 1})), qform({1, 1}));
  const auto K = NumberField::make(qpoly({-2, 0, 1}));
  EXPECT_THROW(effectively_diagonalize(NFForm({NFElem(K, Rational(1))})), MultipleOrderings);
}

TEST(Hermitian, FunctionFieldDispatch) {
  const TA h(C(-1), C(-1));
  const TAlg sp(Index2Symplectic<RationalFunction>{HermitianForm<RationalFunction>(h, {C(1), T()})});
  const auto d = bp_involution(sp);
  ASSERT_TRUE(d.strongly_anisotropic());
  const auto& o = std::get<OrderingObstruction>(d.obstruction());
  EXPECT_EQ(o.value, 8);
  EXPECT_EQ(sign_at(T(), *o.cut), 1);
  EXPECT_TRUE(verify_obstruction(sp, d.obstruction()));
  EXPECT_EQ(d.route, "hermitian/index2-symplectic/jacobson/bp/ordering");

  const TAlg iso(Index2Symplectic<RationalFunction>{HermitianForm<RationalFunction>(h, {C(1), -T() * T()})});
  const auto di = bp_involution(iso);
  ASSERT_TRUE(di.has_witness());
  EXPECT_TRUE(verify_witness(iso, std::get<InvolutionWitness<RationalFunction>>(*std::get<WeaklyIsotropic>(di.result).witness)));

  EXPECT_TRUE(bp_involution(TAlg(SplitSymplectic<RationalFunction>{2, C(0)})).has_witness());
}

TEST(Hermitian, DualPathAgreement) {
  std::mt19937 rng(12);
  std::uniform_int_distribution<long> c(-3, 3), n(1, 2);
  const TA h(C(-1), T());
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<RationalFunction> e;
    while (static_cast<long>(e.size()) < n(rng)) {
      QPoly f({Rational(c(rng)), Rational(c(rng))}, Rational(0));
      if (!f.is_zero()) e.emplace_back(f);
    }
    const HermitianForm<RationalFunction> hf(h, e);
    DecisionOptions o;
    o.search_witness = false;
    const auto a = bp_involution(TAlg(Index2Symplectic<RationalFunction>{hf}), o);
    const auto b = bp_quadratic(jacobson_trace(hf), o);
    EXPECT_EQ(a.result.index(), b.result.index());
  }
}

TEST(Hermitian, SkewOverFunctionField) {
  const TA h(C(-1), T());
  // on the split side t > 0, <i> is adjoint to a form similar to <1, n(i)> = <1, 1>
  const TAlg one(Index2Orthogonal<RationalFunction>{SkewHermitianForm<RationalFunction>(h, {tquat(C(1), C(0), C(0))})});
  const auto d = bp_involution(one);
  ASSERT_TRUE(d.strongly_anisotropic());
  const auto& o = std::get<OrderingObstruction>(d.obstruction());
  EXPECT_EQ(o.value, 2);
  EXPECT_EQ(sign_at(T(), *o.cut), 1);
  EXPECT_TRUE(verify_obstruction(one, d.obstruction()));
  // <j>: <1, -t> is indefinite at t > 0 and sig = 0 where D is division; (-1, t) stays division
  // at Finite(t), which is out of scope
  const TAlg jj(Index2Orthogonal<RationalFunction>{SkewHermitianForm<RationalFunction>(h, {tquat(C(0), C(1), C(0))})});
  const auto dj = bp_involution(jj);
  ASSERT_TRUE(dj.undecided());
  EXPECT_EQ(std::get<Undecided>(dj.result).tag, "larmour-out-of-scope");
  // undecided cases carry a tag, never a silent answer
  const TAlg two(Index2Orthogonal<RationalFunction>{
      SkewHermitianForm<RationalFunction>(h, {tquat(C(1), C(0), C(0)), tquat(C(0), C(1), C(0))})});
  const auto d2 = bp_involution(two);
  if (d2.undecided()) EXPECT_FALSE(std::get<Undecided>(d2.result).tag.empty());
  EXPECT_FALSE(d2.strongly_anisotropic());
}

// B attached to <d> on a split henselization is similar to <1, n(d)> (for d = i in M_2 with
// e = E11 one gets B = -2xy), so the two residue
// analyses agree on strong anisotropy.
TEST(Morita, SingleEntryMatchesNormBinaryForm) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> c(-3, 3);
  const TA D(C(-1), T());
  int compared = 0;
  for (long root : {1, 2, 5}) {
    const auto v = RealValuation::finite(qpoly({-root, 1}));
    ASSERT_EQ(valuation_admissible(D, v), std::optional<bool>(false));
    for (int trial = 0; trial < 8; ++trial) {
      auto poly = [&] { return RationalFunction(QPoly({Rational(c(rng)), Rational(c(rng))}, Rational(0))); };
      const auto d = tquat(poly(), poly(), poly());
      if (d.is_zero()) continue;
      const auto nd = D.norm(d);
      if (nd.is_zero()) continue;
      const auto m = morita_residues(SkewHermitianForm<RationalFunction>(D, {d}), v);
      ASSERT_TRUE(m);
      const auto r = springer_residues(TForm({C(1), nd}), v);
      auto blocked = [&](const std::vector<NFElem>& f) { return f.empty() || definite_embedding(f, v.residue_field()); };
      auto show = [](const std::vector<NFElem>& f) {
        std::string s = "<";
        for (const auto& x : f) s += x.to_text() + ",";
        return s + ">";
      };
      const bool oracle = blocked(r.first) && blocked(r.second);
      const bool got = !m->isotropic && blocked(m->first) && blocked(m->second);
      EXPECT_EQ(got, oracle) << "root " << root << " d = " << to_text(d) << " B " << show(m->first) << " / " << show(m->second) << " iso " << m->isotropic << " ref " << show(r.first) << " / " << show(r.second);
      ++compared;
    }
  }
  EXPECT_GT(compared, 15);
}

TEST(Decomposable, Examples) {
  const QA h{Rational(-1), Rational(-1)};
  const auto gg = check_decomposable(Alg(QuatTensor<Rational>{{{h, std::nullopt}, {h, std::nullopt}}, 1}));
  EXPECT_TRUE(gg.violations.empty());
  EXPECT_EQ(gg.signatures_vanish, Truth::no);
  EXPECT_EQ(gg.trace_signatures_vanish, Truth::no);
  EXPECT_EQ(gg.trace_weakly_hyperbolic, Truth::no);
  EXPECT_EQ(gg.trace_weakly_isotropic, Truth::no);
  EXPECT_EQ(gg.weakly_hyperbolic, Truth::no);

  const auto tw = check_decomposable(Alg(QuatTensor<Rational>{{{h, quat(0, 1, 0, 0)}}, 1}));
  EXPECT_TRUE(tw.violations.empty());
  EXPECT_EQ(tw.signatures_vanish, Truth::yes);
  EXPECT_EQ(tw.trace_weakly_isotropic, Truth::yes);
  EXPECT_EQ(tw.weakly_isotropic, Truth::yes);
  ASSERT_TRUE(tw.trace_witness);

  const QA split{Rational(1), Rational(1)};
  const auto sg = check_decomposable(Alg(QuatTensor<Rational>{{{split, std::nullopt}}, 1}));
  EXPECT_TRUE(sg.violations.empty());
  EXPECT_EQ(sg.weakly_isotropic, Truth::yes);
  EXPECT_EQ(sg.signatures_vanish, Truth::yes);
}

TEST(Pind, Certificates) {
  const QA a{Rational(2), Rational(3)}, b{Rational(5), Rational(7)};
  const Alg two(QuatTensor<Rational>{{{a, std::nullopt}, {b, std::nullopt}}, 1});
  const auto c = pind_upper_certificate(two);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->bound, 2);
  EXPECT_EQ(c->totally_positive, Rational(2));
  EXPECT_EQ(c->factor, 0u);

  const auto single = pind_upper_certificate(Alg(QuatTensor<Rational>{{{QA{Rational(-1), Rational(-1)}, std::nullopt}}, 1}));
  ASSERT_TRUE(single);
  EXPECT_EQ(single->bound, 2);
  const auto split = pind_upper_certificate(Alg(QuatTensor<Rational>{{{QA{Rational(1), Rational(1)}, std::nullopt}}, 1}));
  ASSERT_TRUE(split);
  EXPECT_EQ(split->bound, 1);

  const TA f1(T(), C(-1)), f2(T() - C(1), C(-1));
  const TAlg none(QuatTensor<RationalFunction>{{{f1, std::nullopt}, {f2, std::nullopt}}, 1});
  EXPECT_FALSE(pind_upper_certificate(none));
  EXPECT_THROW(decide_via_pind(none), std::invalid_argument);
}

TEST(Pind, AgreesWithDecomposableReport) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> e(-7, 7), coin(0, 1);
  auto nz = [&] {
    long x = 0;
    while (x == 0) x = e(rng);
    return Rational(x);
  };
  int decided = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const QA q1{Rational(2), nz()};
    QA q2{nz(), nz()};
    std::vector<QuatFactor<Rational>> fs{{q1, std::nullopt}, {q2, std::nullopt}};
    if (coin(rng)) fs[0].twist = quat(0, 1, 0, 0);
    if (coin(rng)) fs[1].twist = quat(0, 0, 1, 0);
    const Alg A(QuatTensor<Rational>{fs, 1});
    DecisionOptions o;
    o.search_witness = false;
    const auto d = decide_via_pind(A, o);
    const auto r = check_decomposable(A, o);
    EXPECT_TRUE(r.violations.empty());
    if (d.undecided()) continue;
    ++decided;
    EXPECT_EQ(d.weakly_isotropic(), r.signatures_vanish == Truth::yes);
    if (d.strongly_anisotropic()) EXPECT_TRUE(verify_obstruction(A, d.obstruction()));
  }
  EXPECT_GT(decided, 20);
}

TEST(Decomposable, DecideBySignatures) {
  const QA h{Rational(-1), Rational(-1)};
  const Alg gg(QuatTensor<Rational>{{{h, std::nullopt}, {h, std::nullopt}}, 1});
  const auto d = decomposable_decide(gg);
  ASSERT_TRUE(d.strongly_anisotropic());
  EXPECT_EQ(std::get<OrderingObstruction>(d.obstruction()).value, 4);
  EXPECT_TRUE(verify_obstruction(gg, d.obstruction()));
  EXPECT_TRUE(decomposable_decide(Alg(QuatTensor<Rational>{{{h, std::nullopt}, {h, quat(0, 0, 1, 0)}}, 1})).weakly_isotropic());

  const TA f(C(-1), T());
  const TAlg tt(QuatTensor<RationalFunction>{{{f, std::nullopt}, {f, std::nullopt}}, 1});
  const auto e = decomposable_decide(tt);
  ASSERT_TRUE(e.strongly_anisotropic());
  const auto& o = std::get<OrderingObstruction>(e.obstruction());
  EXPECT_EQ(o.value, 4);
  EXPECT_EQ(sign_at(T(), *o.cut), -1);
  EXPECT_TRUE(verify_obstruction(tt, e.obstruction()));
}
