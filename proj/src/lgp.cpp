#include "witt/lgp.hpp"

#include <algorithm>
#include <cstdlib>

#include "witt/morita.hpp"

namespace witt {

namespace {

Decision make(std::variant<WeaklyIsotropic, StronglyAnisotropic, Undecided> r, std::string route) {
  return Decision{std::move(r), std::move(route)};
}

Decision undecided(std::string tag, std::string detail, std::string route) {
  return make(Undecided{std::move(tag), std::move(detail)}, std::move(route));
}

void push_unique(std::vector<RealValuation>& out, const RealValuation& v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

/// Strong anisotropy over the henselization from the two residue forms.
std::optional<ValuationObstruction> residue_obstruction(const RealValuation& v, std::vector<NFElem> first,
                                                        std::vector<NFElem> second, const std::string& transfer) {
  ValuationObstruction o{v, std::move(first), std::move(second), std::nullopt, std::nullopt, transfer};
  const NFPtr& k = v.residue_field();
  o.first_embedding = definite_embedding(o.first, k);
  o.second_embedding = definite_embedding(o.second, k);
  const bool f = o.first.empty() || o.first_embedding;
  const bool s = o.second.empty() || o.second_embedding;
  if (f && s) return o;
  return std::nullopt;
}

bool residues_equal(const std::vector<NFElem>& a, const std::vector<NFElem>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].rep() == b[i].rep())) return false;
  return true;
}

bool check_recorded_residues(const ValuationObstruction& o, const std::vector<NFElem>& first,
                             const std::vector<NFElem>& second) {
  if (!residues_equal(o.first, first) || !residues_equal(o.second, second)) return false;
  if (first.empty() && second.empty()) return false;
  const NFPtr& k = o.valuation.residue_field();
  auto definite_at = [&](const std::vector<NFElem>& r, const std::optional<std::size_t>& e) {
    if (r.empty()) return !e.has_value();
    if (!e || *e >= k->num_real_embeddings()) return false;
    int s = 0;
    for (const auto& x : r) s += NFElem(k, x.rep()).sign_at(*e);
    return static_cast<std::size_t>(std::abs(s)) == r.size();
  };
  return definite_at(first, o.first_embedding) && definite_at(second, o.second_embedding);
}

template <class F, class W>
std::optional<WitnessPayload> try_witness(const QuadraticForm<F>& q, const DecisionOptions& opts, W wrap) {
  if (!opts.search_witness) return std::nullopt;
  try {
    if (auto w = witness_search(q, opts.bounds)) return wrap(*w);
  } catch (const BudgetExhausted&) {
  }
  return std::nullopt;
}

std::optional<WitnessPayload> identity_payload(const auto& w) { return WitnessPayload(w); }

}  // namespace

std::string to_text(Truth t) {
  switch (t) {
    case Truth::no:
      return "false";
    case Truth::yes:
      return "true";
    default:
      return "unknown";
  }
}

std::vector<RealValuation> relevant_valuations(const TForm& q) {
  const auto nq = normalize(q).form;
  std::vector<RealValuation> out;
  bool odd = false;
  for (const auto& e : nq.entries()) {
    for (const auto& p : real_prime_factors(e)) push_unique(out, RealValuation::finite(p));
    if (e.degree() % 2 != 0) odd = true;
  }
  if (odd) out.push_back(RealValuation::infinity());
  return out;
}

Decision bp_quadratic(const TForm& q, const DecisionOptions& opts) {
  const int n = static_cast<int>(q.dim());
  const auto profile = signature_profile(q);
  for (std::size_t i = 0; i < profile.cuts.size(); ++i)
    if (std::abs(profile.values[i]) == n)
      return make(StronglyAnisotropic{OrderingObstruction{profile.cuts[i], 0, profile.values[i], n, "form-definite"}},
                  "bp/ordering");
  std::vector<RealValuation> vals;
  try {
    vals = relevant_valuations(q);
  } catch (const std::invalid_argument& e) {
    return undecided("unsupported-residue-field", e.what(), "bp/valuation");
  }
  for (const auto& v : opts.extra_valuations) push_unique(vals, v);
  for (const auto& v : vals) {
    const auto r = springer_residues(q, v);
    if (auto o = residue_obstruction(v, r.first, r.second, "springer")) return make(StronglyAnisotropic{*o}, "bp/valuation");
  }
  return make(WeaklyIsotropic{try_witness(q, opts, [](const auto& w) { return identity_payload(w); })},
              "bp/local-conditions-hold");
}

Decision prestel_sap_quadratic(const QForm& q, const DecisionOptions& opts) {
  const int s = signature(q);
  if (std::abs(s) == static_cast<int>(q.dim()))
    return make(StronglyAnisotropic{OrderingObstruction{std::nullopt, 0, s, static_cast<int>(q.dim()), "form-definite"}},
                "sap/ordering");
  return make(WeaklyIsotropic{try_witness(q, opts, [](const auto& w) { return identity_payload(w); })},
              "sap/totally-indefinite");
}

Decision prestel_sap_quadratic(const NFForm& q, const DecisionOptions& opts) {
  const int n = static_cast<int>(q.dim());
  for (std::size_t k = 0; k < num_orderings(q); ++k) {
    const int s = signature(q, k);
    if (std::abs(s) == n)
      return make(StronglyAnisotropic{OrderingObstruction{std::nullopt, k, s, n, "form-definite"}}, "sap/ordering");
  }
  return make(WeaklyIsotropic{try_witness(q, opts, [](const auto& w) { return identity_payload(w); })},
              "sap/totally-indefinite");
}

QForm effectively_diagonalize(const QForm& q) {
  std::vector<Rational> e;
  for (const auto& x : q.entries())
    if (x < 0) e.push_back(x);
  for (const auto& x : q.entries())
    if (x > 0) e.push_back(x);
  return QForm(e);
}

NFForm effectively_diagonalize(const NFForm& q) {
  if (num_orderings(q) != 1) throw MultipleOrderings();
  std::vector<NFElem> e;
  for (const auto& x : q.entries())
    if (x.sign_at(0) < 0) e.push_back(x);
  for (const auto& x : q.entries())
    if (x.sign_at(0) > 0) e.push_back(x);
  return NFForm(e);
}

namespace {

template <class F>
InvolutionWitness<F> symplectic_witness(const AlgebraWithInvolution<F>& A) {
  // X = e_1 e_1^t: sigma(X) X = J^-1 e_1 (e_1^t J e_1) e_1^t = 0
  InvolutionWitness<F> w{{A.basis(0)}};
  if (!verify_witness(A, w)) throw std::logic_error("symplectic witness failed verification");
  return w;
}

/// Pulls back a form-level decision for SplitOrthogonal / Index2Symplectic models.
template <class F>
Decision pull_back(const AlgebraWithInvolution<F>& A, Decision d, const std::string& route) {
  d.route = route + "/" + d.route;
  if (auto* wi = std::get_if<WeaklyIsotropic>(&d.result)) {
    if (wi->witness) {
      const auto& w = std::get<IsotropyWitness<F>>(*wi->witness);
      auto x = pull_back_witness(A, w);
      if (!verify_witness(A, x)) throw std::logic_error("pulled back witness failed verification");
      wi->witness = WitnessPayload(x);
    }
  }
  return d;
}

template <class F>
Decision ordering_decide(const AlgebraWithInvolution<F>& A, const DecisionOptions& opts, const std::string& route,
                         std::size_t orderings) {
  for (std::size_t k = 0; k < orderings; ++k) {
    int sig;
    if constexpr (std::is_same_v<F, Rational>) {
      sig = signature_involution(A);
    } else {
      sig = signature_involution(A, k);
    }
    // weak isotropy over the real closure: sig < deg (a nonsplit orthogonal model has sig 0)
    if (static_cast<std::size_t>(sig) == A.degree())
      return make(StronglyAnisotropic{OrderingObstruction{std::nullopt, k, sig, static_cast<int>(A.degree())}},
                  route + "/ordering");
  }
  std::optional<WitnessPayload> w;
  if (opts.search_witness) {
    try {
      std::visit(
          [&](const auto& d) {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, SplitSymplectic<F>>) {
              w = WitnessPayload(symplectic_witness(A));
            } else if constexpr (std::is_same_v<D, SplitOrthogonal<F>>) {
              if (auto qw = witness_search(d.form, opts.bounds)) w = WitnessPayload(pull_back_witness(A, *qw));
            } else if constexpr (std::is_same_v<D, Index2Symplectic<F>>) {
              if (auto qw = witness_search(jacobson_trace(d.form), opts.bounds))
                w = WitnessPayload(pull_back_witness(A, *qw));
            } else if constexpr (std::is_same_v<D, Index2Orthogonal<F>> && std::is_same_v<F, Rational>) {
              if (auto sw = skew_witness_search(A, opts.bounds)) w = WitnessPayload(*sw);
            }
          },
          A.data());
    } catch (const BudgetExhausted&) {
    }
  }
  return make(WeaklyIsotropic{w}, route + "/real-closures-isotropic");
}

std::size_t orderings_of(const AlgebraWithInvolution<NFElem>& A) {
  NFPtr k;
  std::visit(
      [&](const auto& d) {
        using D = std::decay_t<decltype(d)>;
        auto take = [&](const NFElem& x) {
          if (!k && x.field()) k = x.field();
        };
        if constexpr (std::is_same_v<D, SplitOrthogonal<NFElem>>) {
          for (const auto& e : d.form.entries()) take(e);
        } else if constexpr (std::is_same_v<D, SplitSymplectic<NFElem>>) {
          take(d.zero);
        } else if constexpr (std::is_same_v<D, QuatTensor<NFElem>>) {
          for (const auto& f : d.factors) {
            take(f.algebra.a());
            take(f.algebra.b());
          }
        } else {
          take(d.form.algebra.a());
          take(d.form.algebra.b());
        }
      },
      A.data());
  return k ? k->num_real_embeddings() : 1;
}

}  // namespace

Decision sap_decide(const AlgebraWithInvolution<Rational>& A, const DecisionOptions& opts) {
  return ordering_decide(A, opts, "sap", 1);
}

Decision sap_decide(const AlgebraWithInvolution<NFElem>& A, const DecisionOptions& opts) {
  return ordering_decide(A, opts, "sap", orderings_of(A));
}

Decision ed_decide(const AlgebraWithInvolution<Rational>& A, const DecisionOptions& opts) {
  return ordering_decide(A, opts, "ed", 1);
}

Decision ed_decide(const AlgebraWithInvolution<NFElem>& A, const DecisionOptions& opts) {
  if (orderings_of(A) != 1) throw MultipleOrderings();
  return ordering_decide(A, opts, "ed", 1);
}

Decision bp_involution(const AlgebraWithInvolution<Rational>& A, const DecisionOptions& opts) {
  return std::visit(
      [&](const auto& d) -> Decision {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, SplitSymplectic<Rational>>) {
          return make(WeaklyIsotropic{WitnessPayload(symplectic_witness(A))}, "hermitian/split-symplectic");
        } else if constexpr (std::is_same_v<D, SplitOrthogonal<Rational>>) {
          return pull_back(A, prestel_sap_quadratic(d.form, opts), "hermitian/split-orthogonal");
        } else if constexpr (std::is_same_v<D, Index2Symplectic<Rational>>) {
          return pull_back(A, prestel_sap_quadratic(jacobson_trace(d.form), opts), "hermitian/index2-symplectic/jacobson");
        } else if constexpr (std::is_same_v<D, Index2Orthogonal<Rational>>) {
          return ordering_decide(A, opts, "hermitian/index2-orthogonal", 1);
        } else {
          throw std::invalid_argument("tensor models are decided by check_decomposable");
        }
      },
      A.data());
}

namespace {

std::vector<RealValuation> skew_relevant_valuations(const SkewHermitianForm<RationalFunction>& h) {
  std::vector<RationalFunction> data{h.algebra.a(), h.algebra.b()};
  for (const auto& d : h.entries) {
    for (const auto& c : d.c)
      if (!c.is_zero()) data.push_back(c);
    data.push_back(h.algebra.norm(d));
  }
  std::vector<RealValuation> out;
  for (const auto& f : data)
    for (const auto& p : real_prime_factors(f)) push_unique(out, RealValuation::finite(p));
  out.push_back(RealValuation::infinity());
  return out;
}

Decision index2_orthogonal_t(const AlgebraWithInvolution<RationalFunction>& A, const DecisionOptions& opts) {
  const std::string route = "hermitian/index2-orthogonal";
  const auto& h = std::get<Index2Orthogonal<RationalFunction>>(A.data()).form;
  const auto tf = trace_form(A);
  std::vector<RationalFunction> data = tf.entries();
  data.push_back(h.algebra.a());
  data.push_back(h.algebra.b());
  for (const auto& P : sample_cuts(defining_polys(data))) {
    const int sig = signature_involution(A, P);
    if (static_cast<std::size_t>(sig) == A.degree())
      return make(StronglyAnisotropic{OrderingObstruction{P, 0, sig, static_cast<int>(A.degree())}},
                  route + "/ordering");
  }
  std::vector<RealValuation> vals = skew_relevant_valuations(h);
  for (const auto& v : opts.extra_valuations) push_unique(vals, v);
  std::optional<Decision> pending;
  for (const auto& v : vals) {
    const auto adm = valuation_admissible(h.algebra, v);
    if (!adm) {
      if (!pending) pending = undecided("division-undecided", "admissibility at " + v.to_text(), route + "/valuation");
      continue;
    }
    if (*adm) {
      if (!pending)
        pending = undecided("larmour-out-of-scope", "D stays division at " + v.to_text(), route + "/valuation");
      continue;
    }
    try {
      const auto m = morita_residues(h, v, opts.precision_cap);
      if (!m) {
        if (!pending) pending = undecided("no-conic-point", "splitting at " + v.to_text(), route + "/valuation");
        continue;
      }
      if (m->isotropic) continue;
      if (auto o = residue_obstruction(v, m->first, m->second, "morita"))
        return make(StronglyAnisotropic{*o}, route + "/valuation");
    } catch (const PrecisionExhausted& e) {
      if (!pending) pending = undecided("precision-exhausted", e.what(), route + "/valuation");
    }
  }
  if (pending) return *pending;
  return make(WeaklyIsotropic{}, route + "/local-conditions-hold");
}

}  // namespace

Decision bp_involution(const AlgebraWithInvolution<RationalFunction>& A, const DecisionOptions& opts) {
  return std::visit(
      [&](const auto& d) -> Decision {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, SplitSymplectic<RationalFunction>>) {
          return make(WeaklyIsotropic{WitnessPayload(symplectic_witness(A))}, "hermitian/split-symplectic");
        } else if constexpr (std::is_same_v<D, SplitOrthogonal<RationalFunction>>) {
          return pull_back(A, bp_quadratic(d.form, opts), "hermitian/split-orthogonal");
        } else if constexpr (std::is_same_v<D, Index2Symplectic<RationalFunction>>) {
          return pull_back(A, bp_quadratic(jacobson_trace(d.form), opts), "hermitian/index2-symplectic/jacobson");
        } else if constexpr (std::is_same_v<D, Index2Orthogonal<RationalFunction>>) {
          return index2_orthogonal_t(A, opts);
        } else {
          throw std::invalid_argument("tensor models are decided by check_decomposable");
        }
      },
      A.data());
}

// ---- verification

bool verify_obstruction(const QForm& q, const LocalObstruction& o) {
  const auto* p = std::get_if<OrderingObstruction>(&o);
  if (!p || p->cut || p->embedding != 0 || p->condition != "form-definite") return false;
  const int s = signature(q);
  return s == p->value && p->bound == static_cast<int>(q.dim()) && std::abs(s) == p->bound;
}

bool verify_obstruction(const NFForm& q, const LocalObstruction& o) {
  const auto* p = std::get_if<OrderingObstruction>(&o);
  if (!p || p->cut || p->embedding >= num_orderings(q) || p->condition != "form-definite") return false;
  const int s = signature(q, p->embedding);
  return s == p->value && p->bound == static_cast<int>(q.dim()) && std::abs(s) == p->bound;
}

bool verify_obstruction(const TForm& q, const LocalObstruction& o) {
  if (const auto* p = std::get_if<OrderingObstruction>(&o)) {
    if (!p->cut || p->condition != "form-definite") return false;
    const int s = signature(q, *p->cut);
    return s == p->value && p->bound == static_cast<int>(q.dim()) && std::abs(s) == p->bound;
  }
  const auto& v = std::get<ValuationObstruction>(o);
  if (v.transfer != "springer") return false;
  const auto r = springer_residues(q, v.valuation);
  return check_recorded_residues(v, r.first, r.second);
}

namespace {

bool verify_involution_ordering(std::size_t degree, const OrderingObstruction& p, int sig) {
  if (p.condition != "signature") return false;
  return p.bound == static_cast<int>(degree) && sig == p.value && p.value == p.bound;
}

/// The underlying quadratic form whose obstructions transfer to the model.
template <class F>
std::optional<QuadraticForm<F>> underlying_form(const AlgebraWithInvolution<F>& A) {
  if (const auto* so = std::get_if<SplitOrthogonal<F>>(&A.data())) return so->form;
  if (const auto* sp = std::get_if<Index2Symplectic<F>>(&A.data())) return jacobson_trace(sp->form);
  return std::nullopt;
}

template <class F>
std::optional<AlgebraWithInvolution<F>> pind_reduced_model(const AlgebraWithInvolution<F>& A, std::string* route);

}  // namespace

bool verify_obstruction(const AlgebraWithInvolution<Rational>& A, const LocalObstruction& o) {
  const auto* p = std::get_if<OrderingObstruction>(&o);
  if (!p || p->cut || p->embedding != 0) return false;
  if (p->condition == "form-definite") {
    auto q = underlying_form(A);
    return q && verify_obstruction(*q, o);
  }
  return verify_involution_ordering(A.degree(), *p, signature_involution(A));
}

bool verify_obstruction(const AlgebraWithInvolution<NFElem>& A, const LocalObstruction& o) {
  const auto* p = std::get_if<OrderingObstruction>(&o);
  if (!p || p->cut || p->embedding >= orderings_of(A)) return false;
  if (p->condition == "form-definite") {
    auto q = underlying_form(A);
    return q && verify_obstruction(*q, o);
  }
  return verify_involution_ordering(A.degree(), *p, signature_involution(A, p->embedding));
}

bool verify_obstruction(const AlgebraWithInvolution<RationalFunction>& A, const LocalObstruction& o) {
  if (const auto* p = std::get_if<OrderingObstruction>(&o)) {
    if (!p->cut) return false;
    if (p->condition == "form-definite") {
      auto q = underlying_form(A);
      return q && verify_obstruction(*q, o);
    }
    return verify_involution_ordering(A.degree(), *p, signature_involution(A, *p->cut));
  }
  const auto& v = std::get<ValuationObstruction>(o);
  if (std::holds_alternative<QuatTensor<RationalFunction>>(A.data())) {
    // valuation obstructions of a tensor model come from its pythagorean-closure reduction
    auto r = pind_reduced_model(A, nullptr);
    return r && verify_obstruction(*r, o);
  }
  if (v.transfer == "springer") {
    auto q = underlying_form(A);
    return q && verify_obstruction(*q, o);
  }
  const auto* io = std::get_if<Index2Orthogonal<RationalFunction>>(&A.data());
  if (!io || v.transfer != "morita") return false;
  if (valuation_admissible(io->form.algebra, v.valuation) != std::optional<bool>(false)) return false;
  const auto m = morita_residues(io->form, v.valuation);
  if (!m || m->isotropic) return false;
  return check_recorded_residues(v, m->first, m->second);
}

// ---- pythagorean index

namespace {

bool totally_positive(const Rational& x) { return x > 0; }
bool totally_positive(const RationalFunction& x) { return is_totally_positive(x); }

template <class F>
std::optional<std::pair<std::size_t, int>> positive_slot(const std::vector<QuatFactor<F>>& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const F& a = fs[i].algebra.a();
    const F& b = fs[i].algebra.b();
    const F slots[3] = {a, b, -(a * b)};
    for (int s = 0; s < 3; ++s)
      if (totally_positive(slots[s])) return std::make_pair(i, s);
  }
  return std::nullopt;
}

template <class F>
std::optional<PindCertificate<F>> certificate(const AlgebraWithInvolution<F>& A) {
  const auto* t = std::get_if<QuatTensor<F>>(&A.data());
  if (!t) throw std::invalid_argument("pind certificates need a tensor model");
  if (t->factors.size() > 2) throw std::invalid_argument("pind certificates support at most two factors");
  PindCertificate<F> c;
  for (std::size_t i = 0; i < t->factors.size(); ++i)
    if (is_division(t->factors[i].algebra) == std::optional<bool>(false)) {
      c.factor = i;
      c.reason = "split-factor";
      c.bound = t->factors.size() == 1 ? 1 : 2;
      return c;
    }
  if (t->factors.size() == 1) {
    c.reason = "single-quaternion";
    return c;
  }
  if (auto p = positive_slot(t->factors)) {
    const auto& alg = t->factors[p->first].algebra;
    const F slots[3] = {alg.a(), alg.b(), -(alg.a() * alg.b())};
    c.factor = p->first;
    c.totally_positive = slots[p->second];
    c.reason = "totally-positive-slot";
    return c;
  }
  return std::nullopt;
}

template <class F>
QuadraticForm<F> ones(std::size_t n, const F& zero) {
  return QuadraticForm<F>(std::vector<F>(n, one_like(zero)));
}

/// (M_2, ad_phi) for a factor that splits over the pythagorean closure: phi = <1, n(s)>;
/// nullopt for the conjugation (hyperbolic, symplectic).
template <class F>
std::optional<QuadraticForm<F>> split_factor_form(const QuatFactor<F>& f) {
  if (!f.twist) return std::nullopt;
  return QuadraticForm<F>({one_like(f.algebra.a()), f.algebra.norm(*f.twist)});
}

/// The index <= 2 model equivalent over the pythagorean closure, or nullopt when it is
/// hyperbolic there (route set to say so). Throws std::invalid_argument without certificate.
template <class F>
std::optional<AlgebraWithInvolution<F>> pind_reduced_model(const AlgebraWithInvolution<F>& A, std::string* route) {
  const auto cert = certificate(A);
  if (!cert) throw std::invalid_argument("no pythagorean index certificate");
  const auto& t = std::get<QuatTensor<F>>(A.data());
  const F zero = A.zero_elem();
  const std::size_t s = t.matrix_size;
  auto note = [&](const std::string& r) {
    if (route) *route = r;
  };
  std::vector<QuatFactor<F>> fs = t.factors;
  std::vector<std::optional<QuadraticForm<F>>> split_forms;
  std::vector<QuatFactor<F>> rest;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const bool splits = cert->factor && *cert->factor == i;
    if (!splits) {
      rest.push_back(fs[i]);
      continue;
    }
    if (!fs[i].twist) {
      note("pind/" + cert->reason + "/hyperbolic-factor");
      return std::nullopt;
    }
    split_forms.push_back(split_factor_form(fs[i]));
  }
  QuadraticForm<F> phi = ones(s, zero);
  for (const auto& f : split_forms) phi = tensor(*f, phi);
  if (rest.empty()) {
    note("pind/" + cert->reason + "/split-orthogonal");
    return AlgebraWithInvolution<F>(SplitOrthogonal<F>{phi});
  }
  const auto& d = rest[0];
  const auto div = is_division(d.algebra);
  if (!div) throw std::domain_error("division test undecided for the remaining factor");
  if (!*div) {
    if (!d.twist) {
      note("pind/" + cert->reason + "/hyperbolic-factor");
      return std::nullopt;
    }
    note("pind/" + cert->reason + "/split-orthogonal");
    return AlgebraWithInvolution<F>(SplitOrthogonal<F>{tensor(*split_factor_form(d), phi)});
  }
  if (!d.twist) {
    note("pind/" + cert->reason + "/index2-symplectic");
    return AlgebraWithInvolution<F>(Index2Symplectic<F>{HermitianForm<F>(d.algebra, phi.entries())});
  }
  std::vector<Quaternion<F>> e;
  for (const auto& x : phi.entries()) e.push_back(x * *d.twist);
  note("pind/" + cert->reason + "/index2-orthogonal");
  return AlgebraWithInvolution<F>(Index2Orthogonal<F>{SkewHermitianForm<F>(d.algebra, e)});
}

template <class F>
Decision via_pind(const AlgebraWithInvolution<F>& A, const DecisionOptions& opts) {
  std::string route;
  std::optional<AlgebraWithInvolution<F>> r;
  try {
    r = pind_reduced_model(A, &route);
  } catch (const std::domain_error& e) {
    return undecided("division-undecided", e.what(), "pind");
  }
  if (!r) return make(WeaklyIsotropic{}, route);
  DecisionOptions o = opts;
  o.search_witness = false;  // a witness for the reduced model does not live in A
  Decision d = bp_involution(*r, o);
  d.route = route + "/" + d.route;
  return d;
}

}  // namespace

std::optional<PindCertificate<Rational>> pind_upper_certificate(const AlgebraWithInvolution<Rational>& A) {
  return certificate(A);
}
std::optional<PindCertificate<RationalFunction>> pind_upper_certificate(
    const AlgebraWithInvolution<RationalFunction>& A) {
  return certificate(A);
}

Decision decide_via_pind(const AlgebraWithInvolution<Rational>& A, const DecisionOptions& opts) {
  return via_pind(A, opts);
}
Decision decide_via_pind(const AlgebraWithInvolution<RationalFunction>& A, const DecisionOptions& opts) {
  return via_pind(A, opts);
}

// ---- decomposable consistency

namespace {

Truth truth(bool b) { return b ? Truth::yes : Truth::no; }

bool all_zero_signatures(const AlgebraWithInvolution<Rational>& A) { return signature_involution(A) == 0; }

bool all_zero_signatures(const AlgebraWithInvolution<RationalFunction>& A) {
  const auto tf = trace_form(A);
  for (const auto& P : sample_cuts(defining_polys(tf.entries())))
    if (signature_involution(A, P) != 0) return false;
  return true;
}

Decision decide_form(const QForm& q, const DecisionOptions& o) { return prestel_sap_quadratic(q, o); }
Decision decide_form(const TForm& q, const DecisionOptions& o) { return bp_quadratic(q, o); }

template <class F>
DecomposableReport decomposable(const AlgebraWithInvolution<F>& A, const DecisionOptions& opts) {
  const auto* t = std::get_if<QuatTensor<F>>(&A.data());
  if (!t) throw std::invalid_argument("check_decomposable needs a tensor model");
  if (t->factors.size() > 2) throw std::invalid_argument("check_decomposable supports at most two factors");
  DecomposableReport r;
  const auto tf = trace_form(A);
  r.trace_signatures_vanish = truth(is_torsion(tf));
  r.trace_weakly_hyperbolic = truth(is_torsion(tensor_trace_form(*t)));
  r.signatures_vanish = truth(all_zero_signatures(A));
  r.weakly_hyperbolic = truth(is_weakly_hyperbolic(A));
  DecisionOptions o = opts;
  o.search_witness = opts.search_witness && r.signatures_vanish == Truth::yes;
  r.trace_decision = decide_form(tf, o);
  if (r.trace_decision.weakly_isotropic()) {
    r.trace_weakly_isotropic = Truth::yes;
    r.trace_witness = std::get<WeaklyIsotropic>(r.trace_decision.result).witness;
  } else if (r.trace_decision.strongly_anisotropic()) {
    r.trace_weakly_isotropic = Truth::no;
  }
  if (certificate(A)) {
    const Decision d = via_pind(A, opts);
    if (d.weakly_isotropic()) r.weakly_isotropic = Truth::yes;
    if (d.strongly_anisotropic()) r.weakly_isotropic = Truth::no;
  }
  const std::pair<const char*, Truth> preds[] = {{"(i)", r.weakly_isotropic},
                                                 {"(ii)", r.weakly_hyperbolic},
                                                 {"(iii)", r.trace_weakly_isotropic},
                                                 {"(iv)", r.trace_weakly_hyperbolic},
                                                 {"(v)", r.signatures_vanish},
                                                 {"(vi)", r.trace_signatures_vanish}};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      if (preds[i].second == Truth::unknown || preds[j].second == Truth::unknown) continue;
      if (preds[i].second != preds[j].second)
        r.violations.push_back(std::string(preds[i].first) + " <=> " + preds[j].first);
    }
  return r;
}

template <class F>
const QuatTensor<F>& tensor_model(const AlgebraWithInvolution<F>& A) {
  const auto* t = std::get_if<QuatTensor<F>>(&A.data());
  if (!t) throw std::invalid_argument("decomposable decisions need a tensor model");
  if (t->factors.size() > 2) throw std::invalid_argument("decomposable decisions support at most two factors");
  return *t;
}

Decision definite_or_hyperbolic(std::optional<Cut> cut, int sig, std::size_t degree) {
  if (sig == 0) return make(WeaklyIsotropic{}, "decomposable/signatures-vanish");
  if (static_cast<std::size_t>(sig) != degree)
    throw std::logic_error("tensor signature is neither 0 nor the degree");
  return make(StronglyAnisotropic{OrderingObstruction{std::move(cut), 0, sig, static_cast<int>(degree)}},
              "decomposable/ordering");
}

}  // namespace

Decision decomposable_decide(const AlgebraWithInvolution<Rational>& A, const DecisionOptions&) {
  tensor_model(A);
  return definite_or_hyperbolic(std::nullopt, signature_involution(A), A.degree());
}

Decision decomposable_decide(const AlgebraWithInvolution<RationalFunction>& A, const DecisionOptions&) {
  tensor_model(A);
  const auto tf = trace_form(A);
  for (const auto& P : sample_cuts(defining_polys(tf.entries()))) {
    const int sig = signature_involution(A, P);
    if (sig != 0) return definite_or_hyperbolic(P, sig, A.degree());
  }
  return make(WeaklyIsotropic{}, "decomposable/signatures-vanish");
}

DecomposableReport check_decomposable(const AlgebraWithInvolution<Rational>& A, const DecisionOptions& opts) {
  return decomposable(A, opts);
}
DecomposableReport check_decomposable(const AlgebraWithInvolution<RationalFunction>& A,
                                      const DecisionOptions& opts) {
  return decomposable(A, opts);
}

}  // namespace witt
