#include "witt/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "witt/congruence.hpp"
#include "witt/hilbert.hpp"

namespace witt {

using nlohmann::json;

namespace {

using Rng = std::mt19937_64;

constexpr std::size_t kMaxNotes = 8;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

long nonzero(Rng& rng, long lo, long hi) {
  for (;;) {
    const long v = uniform(rng, lo, hi);
    if (v != 0) return v;
  }
}

QPoly random_poly(Rng& rng, int max_degree, long height) {
  for (;;) {
    const long d = uniform(rng, 0, max_degree);
    std::vector<Rational> c;
    for (long i = 0; i <= d; ++i) c.emplace_back(uniform(rng, -height, height));
    QPoly f(c, Rational(0));
    if (!f.is_zero()) return f;
  }
}

TForm random_tform(Rng& rng) {
  const long n = uniform(rng, 2, 6);
  std::vector<RationalFunction> e;
  for (long i = 0; i < n; ++i) e.emplace_back(random_poly(rng, 3, 10));
  return TForm(e);
}

FieldSpec field_q() { return {}; }
FieldSpec field_qt() {
  FieldSpec f;
  f.kind = FieldSpec::Kind::QT;
  return f;
}

Object object_of(const QForm& q) { return {field_q(), FieldObject<Rational>{q}}; }
Object object_of(const TForm& q) { return {field_qt(), FieldObject<RationalFunction>{q}}; }
Object object_of(const ModelData<Rational>& m) { return {field_q(), FieldObject<Rational>{m}}; }
Object object_of(const ModelData<RationalFunction>& m) { return {field_qt(), FieldObject<RationalFunction>{m}}; }

class Runner {
 public:
  Runner(std::string name, const SuiteConfig& cfg) : cfg_(cfg) { report_.name = std::move(name); }

  DecisionOptions options() const {
    DecisionOptions o = cfg_.opts.decision;
    o.bounds.deadline = Deadline::from_env(cfg_.budget_ms);
    return o;
  }
  std::size_t count(std::size_t fallback) const { return cfg_.count ? cfg_.count : fallback; }

  void pass() { ++report_.instances; }
  void fail(const std::string& note) {
    ++report_.instances;
    ++report_.failures;
    if (report_.failure_notes.size() < kMaxNotes) report_.failure_notes.push_back(note);
  }
  void check(bool ok, const std::string& note) { ok ? pass() : fail(note); }

  /// Records the certificate of a negative decision for later re-verification.
  void keep(const Object& o, const Decision& d) {
    if (d.strongly_anisotropic()) report_.negative_certificates.push_back(certificate_json(o, d));
  }

  SuiteReport finish(std::string summary) {
    report_.summary = std::move(summary);
    return std::move(report_);
  }

 private:
  const SuiteConfig& cfg_;
  SuiteReport report_;
};

std::string kind_name(const Decision& d) {
  if (d.weakly_isotropic()) return "weakly-isotropic";
  if (d.strongly_anisotropic()) return "strongly-anisotropic";
  return "undecided(" + std::get<Undecided>(d.result).tag + ")";
}

// ---- 1: flagship instance

/// Residue of f at pi with its pi-adic order, by repeated polynomial division.
std::pair<int, QPoly> pi_adic_unit(QPoly f, const QPoly& pi) {
  int k = 0;
  for (;;) {
    auto [quo, rem] = f.divmod(pi);
    if (!rem.is_zero()) return {k, rem};
    f = quo;
    ++k;
  }
}

std::vector<bool> definite_table(const std::vector<NFElem>& form, std::size_t embeddings) {
  std::vector<bool> t;
  for (std::size_t e = 0; e < embeddings; ++e) {
    int pos = 0, neg = 0;
    for (const auto& x : form) (x.sign_at(e) > 0 ? pos : neg)++;
    t.push_back(!form.empty() && (pos == 0 || neg == 0));
  }
  return t;
}

SuiteReport flagship(const SuiteConfig& cfg) {
  Runner r("flagship", cfg);
  const std::string text = "<1,t,t^2-2,-t*(t^2-2)>";
  const Object o = parse_object(text);
  const auto& q = std::get<TForm>(std::get<FieldObject<RationalFunction>>(o.value));
  DecideOptions opts = cfg.opts;
  opts.decision = r.options();
  const Decision d = decide_object(o, opts);
  r.keep(o, d);
  r.check(d.strongly_anisotropic(), "decision is " + kind_name(d));
  if (!d.strongly_anisotropic()) return r.finish("flagship form not strongly anisotropic");
  const auto* v = std::get_if<ValuationObstruction>(&d.obstruction());
  r.check(v && !v->valuation.is_infinity() && v->valuation.prime() == qpoly({-2, 0, 1}),
          "obstruction is not a valuation obstruction at t^2-2");
  r.check(is_totally_indefinite(q), "form has an ordering obstruction");
  if (!v) return r.finish("no valuation obstruction");

  // Oracle: residues by division by pi, sign table at the two embeddings of Q(sqrt 2).
  const QPoly pi = qpoly({-2, 0, 1});
  const NFPtr k = NumberField::make(pi);
  std::vector<NFElem> first, second;
  for (const auto& e : q.entries()) {
    const auto [ord, unit] = pi_adic_unit(e.num(), pi);
    (ord % 2 == 0 ? first : second).emplace_back(k, unit);
  }
  const auto emb = k->num_real_embeddings();
  r.check(v->first.size() == 2 && v->second.size() == 2, "residue forms are not 2-dimensional");
  for (const auto* form : {&v->first, &v->second}) {
    const auto t = definite_table(*form, emb);
    r.check(std::count(t.begin(), t.end(), true) == 1, "a residue form is not definite at exactly one embedding");
  }
  r.check(definite_table(v->first, emb) == definite_table(first, emb), "first residue sign table differs from oracle");
  r.check(definite_table(v->second, emb) == definite_table(second, emb), "second residue sign table differs from oracle");
  r.check(verify_obstruction(q, d.obstruction()), "obstruction does not re-verify");
  return r.finish("StronglyAnisotropic at v_(t^2-2), residues definite at one embedding each");
}

// ---- 2: witness completeness

int coordinate_degree(const RationalFunction& f) { return std::max(f.num().degree(), f.den().degree()); }

SuiteReport bp_witness(const SuiteConfig& cfg) {
  Runner r("bp-witness", cfg);
  Rng rng(cfg.seed);
  const std::size_t want = r.count(100);
  const auto& bounds = cfg.opts.decision.bounds;
  std::size_t positives = 0, tried = 0, max_copies = 0;
  int max_degree = 0;
  while (positives < want && tried < 50 * want) {
    ++tried;
    const TForm q = random_tform(rng);
    const Decision d = bp_quadratic(q, r.options());
    r.keep(object_of(q), d);
    if (!d.weakly_isotropic()) continue;
    ++positives;
    if (!d.has_witness()) {
      r.fail("no witness for " + q.to_text());
      continue;
    }
    const auto& w = std::get<IsotropyWitness<RationalFunction>>(*std::get<WeaklyIsotropic>(d.result).witness);
    int deg = 0;
    for (const auto& x : w.vectors) deg = std::max(deg, coordinate_degree(x));
    max_copies = std::max(max_copies, w.copies);
    max_degree = std::max(max_degree, deg);
    if (!verify_witness(q, w)) {
      r.fail("witness does not verify for " + q.to_text());
    } else if (w.copies > bounds.max_copies || deg > bounds.degree_bound) {
      r.fail("witness outside bounds for " + q.to_text());
    } else {
      r.pass();
    }
  }
  if (positives < want) r.fail("only " + std::to_string(positives) + " positive forms generated");
  return r.finish(std::to_string(positives) + " positives of " + std::to_string(tried) +
                  " forms, max copies " + std::to_string(max_copies) + ", max degree " + std::to_string(max_degree));
}

// ---- 3: SAP criterion over Q

SuiteReport sap(const SuiteConfig& cfg) {
  Runner r("sap", cfg);
  Rng rng(cfg.seed);
  const std::size_t n = r.count(200);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational a(nonzero(rng, -100, 100)), b(nonzero(rng, -100, 100));
    const QForm q({Rational(1), a, b, -a * b});
    const Decision d = prestel_sap_quadratic(q, r.options());
    r.keep(object_of(q), d);
    const bool ok = d.has_witness() &&
                    verify_witness(q, std::get<IsotropyWitness<Rational>>(*std::get<WeaklyIsotropic>(d.result).witness));
    r.check(ok, q.to_text() + " is " + kind_name(d) + (d.weakly_isotropic() ? " without a verified witness" : ""));
  }
  return r.finish(std::to_string(n) + " forms <1,a,b,-ab> with |a|,|b| <= 100");
}

// ---- 4: decomposable consistency

template <class F>
void decomposable_instance(Runner& r, const QuatTensor<F>& t) {
  const AlgebraWithInvolution<F> A(t);
  const auto rep = check_decomposable(A, r.options());
  const std::string text = unparse(object_of(ModelData<F>(t)));
  if (!rep.violations.empty()) {
    r.fail(text + ": " + rep.violations.front());
    return;
  }
  if (rep.signatures_vanish == Truth::yes) {
    const auto tf = trace_form(A);
    const auto* w = rep.trace_witness ? std::get_if<IsotropyWitness<F>>(&*rep.trace_witness) : nullptr;
    if (!w || !verify_witness(tf, *w)) {
      r.fail(text + ": no verified T_sigma witness although all signatures vanish");
      return;
    }
  }
  const Object o = object_of(ModelData<F>(t));
  DecisionOptions no_search = r.options();
  no_search.search_witness = false;
  r.keep(o, decomposable_decide(A, no_search));
  r.pass();
}

/// A pure quaternion with small constant coordinates and nonzero norm.
template <class F>
Quaternion<F> small_pure(Rng& rng, const QuaternionAlgebra<F>& d) {
  const F z = zero_like(d.a());
  for (;;) {
    const Quaternion<F> s{{z, z + F(Rational(uniform(rng, -2, 2))), z + F(Rational(uniform(rng, -2, 2))),
                           z + F(Rational(uniform(rng, -2, 2)))}};
    if (!s.is_zero() && !detail::elem_is_zero(d.norm(s))) return s;
  }
}

SuiteReport decomposable(const SuiteConfig& cfg) {
  Runner r("decomposable", cfg);
  Rng rng(cfg.seed);
  const std::size_t n = r.count(50);
  for (std::size_t i = 0; i < n; ++i) {
    QuatTensor<Rational> t;
    const long factors = uniform(rng, 1, 2);
    for (long f = 0; f < factors; ++f) {
      QuatFactor<Rational> fac{QuaternionAlgebra<Rational>(Rational(nonzero(rng, -7, 7)), Rational(nonzero(rng, -7, 7))),
                               std::nullopt};
      if (rng() % 2) fac.twist = small_pure(rng, fac.algebra);
      t.factors.push_back(fac);
    }
    decomposable_instance(r, t);
  }
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    QuatTensor<RationalFunction> t;
    const long factors = uniform(rng, 1, 2);
    for (long f = 0; f < factors; ++f) {
      QuatFactor<RationalFunction> fac{
          QuaternionAlgebra<RationalFunction>(RationalFunction(random_poly(rng, 1, 3)), RationalFunction(random_poly(rng, 1, 3))),
          std::nullopt};
      if (rng() % 2) fac.twist = small_pure(rng, fac.algebra);
      t.factors.push_back(fac);
    }
    decomposable_instance(r, t);
  }
  return r.finish(std::to_string(n) + " models over Q, " + std::to_string(m) + " over Q(t)");
}

// ---- 5: Jacobson transfer

SuiteReport jacobson(const SuiteConfig& cfg) {
  Runner r("jacobson", cfg);
  Rng rng(cfg.seed);
  const std::size_t n = r.count(50);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<QuaternionAlgebra<Rational>> d;
    while (!d) {
      QuaternionAlgebra<Rational> c(Rational(nonzero(rng, -20, 20)), Rational(nonzero(rng, -20, 20)));
      if (is_division(c) == std::optional<bool>(true)) d = c;
    }
    std::vector<Rational> alpha;
    const long dim = uniform(rng, 1, 4);
    for (long k = 0; k < dim; ++k) {
      Rational x(nonzero(rng, -9, 9), uniform(rng, 1, 3));
      x.canonicalize();
      alpha.push_back(x);
    }
    const HermitianForm<Rational> h(*d, alpha);
    const QForm qh = jacobson_trace(h);
    const auto gram = jacobson_gram(h);
    const auto T = find_congruence(gram, qh);
    const Object o = object_of(ModelData<Rational>(Index2Symplectic<Rational>{h}));
    const std::string text = unparse(o);
    if (!T || !is_congruence(gram, qh.gram(), *T)) {
      r.fail(text + ": no explicit congruence between the Gram matrix and the transfer formula");
      continue;
    }
    const AlgebraWithInvolution<Rational> A(Index2Symplectic<Rational>{h});
    const Decision di = bp_involution(A, r.options());
    const Decision dq = prestel_sap_quadratic(qh, r.options());
    r.keep(o, di);
    r.keep(object_of(qh), dq);
    r.check(di.result.index() == dq.result.index(), text + ": involution " + kind_name(di) + ", form " + kind_name(dq));
  }
  return r.finish(std::to_string(n) + " hermitian forms over division algebras");
}

// ---- 6: trace-form signatures

struct TraceCheck {
  Runner& r;
  int checked = 0;

  void at(int trace_sig, int inv_sig, const std::string& where) {
    ++checked;
    const int s = static_cast<int>(std::lround(std::sqrt(std::max(0, trace_sig))));
    r.check(trace_sig >= 0 && s * s == trace_sig && s == inv_sig,
            where + ": sig T = " + std::to_string(trace_sig) + ", sig sigma = " + std::to_string(inv_sig));
  }
};

template <class F>
ModelData<F> random_model(Rng& rng, const std::function<F()>& elem) {
  const auto algebra = [&] { return QuaternionAlgebra<F>(elem(), elem()); };
  const auto division = [&] {
    for (;;) {
      QuaternionAlgebra<F> d(elem(), elem());
      if (is_division(d) == std::optional<bool>(true)) return d;
    }
  };
  const long dim = uniform(rng, 1, 3);
  std::vector<F> e;
  for (long k = 0; k < dim; ++k) e.push_back(elem());
  switch (uniform(rng, 0, 3)) {
    case 0:
      return SplitOrthogonal<F>{QuadraticForm<F>(e)};
    case 1:
      return Index2Symplectic<F>{HermitianForm<F>(division(), e)};
    case 2: {
      const auto d = division();
      std::vector<Quaternion<F>> s;
      for (const auto& x : e) s.push_back(Quaternion<F>{{zero_like(x), x, elem(), zero_like(x)}});
      return Index2Orthogonal<F>{SkewHermitianForm<F>(d, s)};
    }
    default: {
      QuatTensor<F> t;
      t.factors.push_back({algebra(), std::nullopt});
      if (rng() % 2) {
        const F z = zero_like(e[0]);
        t.factors.push_back({algebra(), Quaternion<F>{{z, elem(), z, z}}});
      }
      return t;
    }
  }
}

SuiteReport trace(const SuiteConfig& cfg) {
  Runner r("trace", cfg);
  Rng rng(cfg.seed);
  TraceCheck c{r};
  const QuaternionAlgebra<Rational> h(Rational(-1), Rational(-1));
  const auto rat = [](long x) { return Rational(x); };
  const auto fixed = [&](const ModelData<Rational>& m, int expected, const char* name) {
    const AlgebraWithInvolution<Rational> A(m);
    const int s = signature_involution(A);
    r.check(s == expected, std::string(name) + ": signature " + std::to_string(s));
    c.at(signature(trace_form(A)), s, name);
  };
  fixed(QuatTensor<Rational>{{{h, std::nullopt}}, 1}, 2, "((-1,-1), gamma)");
  fixed(SplitOrthogonal<Rational>{QForm({rat(1), rat(1)})}, 2, "(M_2, ad <1,1>)");
  fixed(QuatTensor<Rational>{{{h, h.basis(1)}}, 1}, 0, "((-1,-1), Int(i) gamma)");

  const std::size_t n = r.count(40);
  for (std::size_t i = 0; i < n; ++i) {
    const auto m = random_model<Rational>(rng, [&] { return Rational(nonzero(rng, -5, 5)); });
    const AlgebraWithInvolution<Rational> A(m);
    const std::string text = unparse(object_of(m));
    c.at(signature(trace_form(A)), signature_involution(A), text);
    if (const auto* so = std::get_if<SplitOrthogonal<Rational>>(&m))
      r.check(signature_involution(A) == std::abs(signature(so->form)), text + ": sig ad_q != |sig q|");
  }
  for (std::size_t i = 0; i < (n + 3) / 4; ++i) {
    const auto m = random_model<RationalFunction>(rng, [&] { return RationalFunction(random_poly(rng, 1, 3)); });
    const AlgebraWithInvolution<RationalFunction> A(m);
    const auto tf = trace_form(A);
    const std::string text = unparse(object_of(m));
    const auto prof = signature_profile(tf);
    for (std::size_t k = 0; k < prof.cuts.size(); ++k) {
      const int s = signature_involution(A, prof.cuts[k]);
      c.at(prof.values[k], s, text);
      if (const auto* so = std::get_if<SplitOrthogonal<RationalFunction>>(&m))
        r.check(s == std::abs(signature(so->form, prof.cuts[k])), text + ": sig ad_q != |sig q|");
    }
  }
  const NFPtr k = NumberField::make(qpoly({-2, 0, 1}));
  const NFElem th = NFElem::generator(k);
  for (std::size_t i = 0; i < (n + 3) / 4; ++i) {
    const auto m = random_model<NFElem>(rng, [&] { return NFElem(k, Rational(nonzero(rng, -3, 3))) + Rational(uniform(rng, -2, 2)) * th; });
    const AlgebraWithInvolution<NFElem> A(m);
    const auto tf = trace_form(A);
    for (std::size_t e = 0; e < k->num_real_embeddings(); ++e) {
      const int s = signature_involution(A, e);
      c.at(signature(tf, e), s, "number field model at embedding " + std::to_string(e + 1));
      if (const auto* so = std::get_if<SplitOrthogonal<NFElem>>(&m))
        r.check(s == std::abs(signature(so->form, e)), "number field split orthogonal model: sig ad_q != |sig q|");
    }
  }
  return r.finish(std::to_string(c.checked) + " (model, ordering) signature checks, fixed examples 2, 2, 0");
}

// ---- 7: Hilbert symbol against a brute-force conic oracle

bool squarefree_int(long n) {
  n = std::abs(n);
  for (long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return n != 0;
}

std::vector<long> odd_prime_divisors(long n) {
  std::vector<long> out;
  n = std::abs(n);
  for (long p = 2; p <= n; ++p) {
    if (n % p) continue;
    if (p != 2) out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

/// No (x, y, z) mod m, not all divisible by p, with z^2 = a x^2 + b y^2 mod m.
bool modular_obstruction(long a, long b, long p, long m) {
  std::vector<char> any(m, 0), unit(m, 0);
  for (long z = 0; z < m; ++z) {
    any[z * z % m] = 1;
    if (z % p) unit[z * z % m] = 1;
  }
  const long am = ((a % m) + m) % m, bm = ((b % m) + m) % m;
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y) {
      const long v = (am * (x * x % m) + bm * (y * y % m)) % m;
      if ((x % p == 0 && y % p == 0) ? unit[v] : any[v]) return false;
    }
  return true;
}

bool perfect_square(long v) {
  if (v < 0) return false;
  long s = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s * s == v;
}

// ---- 8: Springer reconstruction

SuiteReport springer(const SuiteConfig& cfg) {
  Runner r("springer", cfg);
  Rng rng(cfg.seed);
  const std::vector<QPoly> primes{qpoly({0, 1}), qpoly({-2, 0, 1}), qpoly({1, 1}), qpoly({-3, 0, 1}),
                                  qpoly({-2, 0, 0, 1})};
  std::vector<RealValuation> places{RealValuation::infinity()};
  for (const auto& p : primes) places.push_back(RealValuation::finite(p));
  const std::size_t n = r.count(100);
  for (std::size_t i = 0; i < n; ++i) {
    const long dim = uniform(rng, 1, 6);
    std::vector<RationalFunction> e;
    for (long k = 0; k < dim; ++k) {
      RationalFunction x(random_poly(rng, 2, 5));
      if (rng() % 3 == 0) x *= RationalFunction(primes[rng() % primes.size()]);
      if (rng() % 4 == 0) x = x / RationalFunction(primes[rng() % primes.size()]);
      e.push_back(x);
    }
    const TForm q(e);
    const auto& v = places[rng() % places.size()];
    const auto res = springer_residues(q, v);
    const auto rec = springer_reconstruction(res, v);
    bool units = true;
    for (const auto* us : {&res.first_units, &res.second_units})
      for (const auto& u : *us) units = units && valuation(u, v) == 0;
    r.check(units && is_congruence(q.gram(), rec.gram(), res.transform),
            q.to_text() + " at " + v.to_text() + ": reconstruction not congruent");
  }
  return r.finish(std::to_string(n) + " (q, v) pairs");
}

// ---- 10: relevant-valuation completeness

SuiteReport completeness(const SuiteConfig& cfg) {
  Runner r("completeness", cfg);
  Rng rng(cfg.seed);
  std::vector<RealValuation> pool{RealValuation::infinity()};
  for (long c = -6; c <= 6; ++c) pool.push_back(RealValuation::finite(qpoly({-c, 1})));
  for (long c : {3, 5, 6, 7, 10}) pool.push_back(RealValuation::finite(qpoly({-c, 0, 1})));
  pool.push_back(RealValuation::finite(qpoly({-2, 0, 0, 1})));
  pool.push_back(RealValuation::finite(qpoly({-1, 1, 1})));
  const std::size_t n = r.count(50);
  std::size_t extras = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const TForm q = random_tform(rng);
    const auto relevant = relevant_valuations(q);
    std::vector<RealValuation> cand;
    for (const auto& v : pool)
      if (std::find(relevant.begin(), relevant.end(), v) == relevant.end()) cand.push_back(v);
    std::shuffle(cand.begin(), cand.end(), rng);
    if (cand.size() > 10) cand.erase(cand.begin() + 10, cand.end());
    extras += cand.size();
    DecisionOptions base = r.options();
    base.search_witness = false;
    const Decision d0 = bp_quadratic(q, base);
    DecisionOptions more = base;
    more.extra_valuations = cand;
    const Decision d1 = bp_quadratic(q, more);
    r.keep(object_of(q), d0);
    r.check(cand.size() == 10 && kind_name(d0) == kind_name(d1),
            q.to_text() + ": " + kind_name(d0) + " became " + kind_name(d1));
  }
  return r.finish(std::to_string(n) + " forms, " + std::to_string(extras) + " extra valuations checked");
}

SuiteReport hilbert(const SuiteConfig& cfg) {
  Runner r("hilbert", cfg);
  std::vector<long> sf;
  for (long a = -30; a <= 30; ++a)
    if (squarefree_int(a)) sf.push_back(a);
  std::size_t division = 0;
  for (long a : sf)
    for (long b : sf) {
      const auto engine = is_division(QuaternionAlgebra<Rational>(Rational(a), Rational(b)));
      const auto oracle = conic_oracle_division(a, b);
      const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (!oracle) {
        r.fail(pair + ": oracle inconclusive");
        continue;
      }
      division += *oracle;
      r.check(engine == oracle, pair + ": is_division disagrees with the conic oracle");
    }
  return r.finish(std::to_string(sf.size() * sf.size()) + " pairs, " + std::to_string(division) + " division");
}

const std::map<std::string, std::function<SuiteReport(const SuiteConfig&)>>& registry() {
  static const std::map<std::string, std::function<SuiteReport(const SuiteConfig&)>> m{
      {"flagship", flagship}, {"bp-witness", bp_witness}, {"sap", sap},
      {"decomposable", decomposable}, {"jacobson", jacobson}, {"trace", trace},
      {"hilbert", hilbert}, {"springer", springer}, {"completeness", completeness}};
  return m;
}

}  // namespace

std::optional<bool> conic_oracle_division(long a, long b, long max_height) {
  if (a < 0 && b < 0) return true;
  for (long p : odd_prime_divisors(a * b))
    if (modular_obstruction(a, b, p, p * p)) return true;
  if (modular_obstruction(a, b, 2, 32)) return true;
  long done = -1;
  for (long h = 10; done < max_height; h = std::min(h * 10, max_height)) {
    for (long x = 0; x <= h; ++x)
      for (long y = 0; y <= h; ++y) {
        if (std::max(x, y) <= done || (x == 0 && y == 0)) continue;
        if (perfect_square(a * x * x + b * y * y)) return false;
      }
    done = h;
  }
  return std::nullopt;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"flagship", "bp-witness", "sap",      "decomposable", "jacobson",
                                              "trace",    "hilbert",    "springer", "completeness"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite " + name);
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep = it->second(cfg);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

json SuiteReport::to_json() const {
  return {{"suite", name},        {"instances", instances},
          {"failures", failures}, {"failure_notes", failure_notes},
          {"summary", summary},   {"negative_certificates", negative_certificates.size()},
          {"passed", passed()}};
}

}  // namespace witt
