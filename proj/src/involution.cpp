#include "witt/involution.hpp"

#include <cmath>
#include <functional>

namespace witt {

std::optional<bool> is_division(const QuaternionAlgebra<NFElem>& d) {
  const NFPtr& k = d.a().field() ? d.a().field() : d.b().field();
  const std::size_t embeddings = k ? k->num_real_embeddings() : 1;
  for (std::size_t e = 0; e < embeddings; ++e)
    if (d.a().sign_at(e) < 0 && d.b().sign_at(e) < 0) return true;
  WitnessBounds b;
  b.max_copies = 1;
  b.height_bound = 2;
  if (witness_search(norm_form(d), b)) return false;
  return std::nullopt;
}

int involution_signature_from_trace(int s) {
  if (s < 0) throw NotAPerfectSquare(s);
  const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(s))));
  if (r * r != s) throw NotAPerfectSquare(s);
  return r;
}

int signature_involution(const AlgebraWithInvolution<Rational>& A) {
  return involution_signature_from_trace(signature(trace_form(A)));
}

int signature_involution(const AlgebraWithInvolution<NFElem>& A, std::size_t embedding) {
  return involution_signature_from_trace(signature(trace_form(A), embedding));
}

int signature_involution(const AlgebraWithInvolution<RationalFunction>& A, const Cut& P) {
  return involution_signature_from_trace(signature(trace_form(A), P));
}

bool is_weakly_hyperbolic(const AlgebraWithInvolution<Rational>& A) { return is_torsion(trace_form(A)); }
bool is_weakly_hyperbolic(const AlgebraWithInvolution<NFElem>& A) { return is_torsion(trace_form(A)); }
bool is_weakly_hyperbolic(const AlgebraWithInvolution<RationalFunction>& A) { return is_torsion(trace_form(A)); }

namespace {

template <class F, class Neg>
bool nonsplit_at(const AlgebraWithInvolution<F>& A, Neg negative) {
  std::vector<bool> adm;
  for (const auto& d : A.quaternion_factors()) adm.push_back(negative(d.a()) && negative(d.b()));
  return A.nonsplit_given(adm);
}

template <class F>
bool decide_real_closed(const AlgebraWithInvolution<F>& A, bool nonsplit, int sig) {
  if (nonsplit && A.type() == InvolutionType::orthogonal) return skew_isotropy_real_closed(A.degree() / 2, true);
  return static_cast<std::size_t>(sig) < A.degree();
}

}  // namespace

bool real_closed_isotropic(const AlgebraWithInvolution<Rational>& A) {
  const bool ns = nonsplit_at(A, [](const Rational& x) { return x < 0; });
  return decide_real_closed(A, ns, signature_involution(A));
}

bool real_closed_isotropic(const AlgebraWithInvolution<NFElem>& A, std::size_t embedding) {
  const bool ns = nonsplit_at(A, [&](const NFElem& x) { return x.sign_at(embedding) < 0; });
  return decide_real_closed(A, ns, signature_involution(A, embedding));
}

bool real_closed_isotropic(const AlgebraWithInvolution<RationalFunction>& A, const Cut& P) {
  const bool ns = nonsplit_at(A, [&](const RationalFunction& x) { return sign_at(x, P) < 0; });
  return decide_real_closed(A, ns, signature_involution(A, P));
}

std::optional<InvolutionWitness<Rational>> skew_witness_search(const AlgebraWithInvolution<Rational>& A,
                                                               const WitnessBounds& bounds) {
  const auto* model = std::get_if<Index2Orthogonal<Rational>>(&A.data());
  if (!model) throw std::invalid_argument("skew witness search needs an index 2 orthogonal model");
  const auto& h = model->form;
  const auto& d = h.algebra;
  const std::size_t m = h.dim();
  constexpr double kCap = 2e6;
  for (long height = 1; height <= std::max(1L, bounds.height_bound); ++height) {
    std::vector<Quaternion<Rational>> box;
    const long w = 2 * height + 1;
    for (long code = 0; code < w * w * w * w; ++code) {
      long c = code;
      Quaternion<Rational> x;
      for (auto& v : x.c) {
        v = Rational(c % w - height);
        c /= w;
      }
      box.push_back(x);
    }
    for (std::size_t copies = 1; copies <= bounds.max_copies; ++copies) {
      const std::size_t slots = copies * m;
      if (std::pow(static_cast<double>(box.size()), static_cast<double>(slots)) > kCap) break;
      std::vector<std::vector<Quaternion<Rational>>> values(m);
      for (std::size_t r = 0; r < m; ++r)
        for (const auto& x : box) values[r].push_back(d.mul(d.mul(d.conj(x), h.entries[r]), x));
      std::vector<std::size_t> pick(slots, 0);
      std::function<bool(std::size_t, Quaternion<Rational>, bool)> rec = [&](std::size_t s, Quaternion<Rational> acc,
                                                                             bool nonzero) -> bool {
        if (s == slots) return nonzero && acc.is_zero();
        for (std::size_t i = 0; i < box.size(); ++i) {
          bounds.deadline.check();
          pick[s] = i;
          if (rec(s + 1, acc + values[s % m][i], nonzero || !box[i].is_zero())) return true;
        }
        return false;
      };
      if (!rec(0, d.zero(), false)) continue;
      InvolutionWitness<Rational> out;
      for (std::size_t c = 0; c < copies; ++c) {
        auto x = A.zero();
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t k = 0; k < 4; ++k) x[(r * m) * 4 + k] = box[pick[c * m + r]].c[k];
        out.elements.push_back(std::move(x));
      }
      if (!verify_witness(A, out)) throw std::logic_error("skew witness failed verification");
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace witt
