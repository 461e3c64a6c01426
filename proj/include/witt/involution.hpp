#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "witt/quaternion.hpp"
#include "witt/signatures.hpp"
#include "witt/witness.hpp"

namespace witt {

struct DimensionCap : std::invalid_argument {
  explicit DimensionCap(std::size_t dim)
      : std::invalid_argument("algebra dimension " + std::to_string(dim) + " exceeds the dimension cap") {}
};
struct NotAPerfectSquare : std::logic_error {
  explicit NotAPerfectSquare(int s)
      : std::logic_error("trace form signature " + std::to_string(s) + " is not a nonnegative square") {}
};

std::optional<bool> is_division(const QuaternionAlgebra<NFElem>& d);

enum class InvolutionType { orthogonal, symplectic };

/// (M_n(F), ad_q).
template <class F>
struct SplitOrthogonal {
  QuadraticForm<F> form;
};
/// (M_2n(F), ad of the standard alternating form).
template <class F>
struct SplitSymplectic {
  std::size_t n = 1;
  F zero{};
};
/// (M_n(D), ad_h) with h hermitian over (D, conjugation).
template <class F>
struct Index2Symplectic {
  HermitianForm<F> form;
};
/// (M_n(D), ad_h) with h skew-hermitian over (D, conjugation).
template <class F>
struct Index2Orthogonal {
  SkewHermitianForm<F> form;
};
/// Conjugation (no twist, symplectic) or Int(s) o conjugation for a pure s (orthogonal).
template <class F>
struct QuatFactor {
  QuaternionAlgebra<F> algebra;
  std::optional<Quaternion<F>> twist;
};
/// (Q_1, s_1) x ... x (Q_r, s_r) x (M_s(F), transpose).
template <class F>
struct QuatTensor {
  std::vector<QuatFactor<F>> factors;
  std::size_t matrix_size = 1;
};

template <class F>
using ModelData = std::variant<SplitOrthogonal<F>, SplitSymplectic<F>, Index2Symplectic<F>, Index2Orthogonal<F>,
                               QuatTensor<F>>;

/// Elements x_1, ..., x_n of the model with sum sigma(x_i) x_i = 0.
template <class F>
struct InvolutionWitness {
  std::vector<std::vector<F>> elements;
};

/// A concrete model: basis E_rc (x) u_1 (x) ... (x) u_f of M_m(F) (x) Q_1 (x) ... (x) Q_f, with
/// u_i running over 1, i, j, k. Coordinates are indexed ((r * m + c) * 4^f + word), the word's
/// base-4 digits listing the quaternion factors first to last (most significant first).
template <class F>
class AlgebraWithInvolution {
 public:
  using Element = std::vector<F>;

  explicit AlgebraWithInvolution(ModelData<F> data, std::size_t dim_cap = 64) : data_(std::move(data)) {
    std::visit([this](const auto& d) { this->setup(d); }, data_);
    dim_ = m_ * m_ * words_;
    if (dim_ > dim_cap) throw DimensionCap(dim_);
    build();
  }

  const ModelData<F>& data() const { return data_; }
  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return m_ * (algebras_.empty() ? 1 : std::size_t(1) << algebras_.size()); }
  std::size_t matrix_size() const { return m_; }
  const std::vector<QuaternionAlgebra<F>>& quaternion_factors() const { return algebras_; }
  InvolutionType type() const { return type_; }
  const F& zero_elem() const { return zero_; }

  Element zero() const { return Element(dim_, zero_); }
  Element basis(std::size_t p) const {
    Element e = zero();
    e.at(p) = one_like(zero_);
    return e;
  }

  Element mul(const Element& x, const Element& y) const {
    Element z = zero();
    for (std::size_t p = 0; p < dim_; ++p) {
      if (detail::elem_is_zero(x[p])) continue;
      for (std::size_t q = 0; q < dim_; ++q) {
        if (detail::elem_is_zero(y[q])) continue;
        const auto& [c, idx] = table_[p * dim_ + q];
        if (detail::elem_is_zero(c)) continue;
        z[idx] = z[idx] + c * x[p] * y[q];
      }
    }
    return z;
  }
  Element sigma(const Element& x) const {
    Element z = zero();
    for (std::size_t p = 0; p < dim_; ++p) {
      if (detail::elem_is_zero(x[p])) continue;
      for (const auto& [q, c] : sigma_[p]) z[q] = z[q] + c * x[p];
    }
    return z;
  }
  F trd(const Element& x) const {
    F acc = zero_;
    for (std::size_t p = 0; p < dim_; ++p)
      if (!detail::elem_is_zero(trd_[p])) acc = acc + trd_[p] * x[p];
    return acc;
  }

  /// Gram matrix of T(x) = Trd(sigma(x) x) on the standard basis.
  Matrix<F> trace_gram() const {
    Matrix<F> g(dim_, dim_, zero_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (const auto& [p, c] : sigma_[i])
        for (std::size_t j = 0; j < dim_; ++j) {
          const auto& [c2, idx] = table_[p * dim_ + j];
          if (detail::elem_is_zero(c2) || detail::elem_is_zero(trd_[idx])) continue;
          g(i, j) = g(i, j) + c * c2 * trd_[idx];
        }
    return g;
  }

  /// Whether D tensor F_P (resp. A tensor F_P) is nonsplit, given per-factor admissibility.
  bool nonsplit_given(const std::vector<bool>& factor_admissible) const {
    bool odd = false;
    for (bool b : factor_admissible) odd ^= b;
    return odd;
  }

  std::string to_text() const;

 private:
  template <class D>
  void setup(const D& d);

  void build();

  Quaternion<F> sigma_quat(std::size_t factor, const Quaternion<F>& u) const;

  ModelData<F> data_;
  std::size_t m_ = 1, words_ = 1, dim_ = 0;
  F zero_{};
  InvolutionType type_ = InvolutionType::orthogonal;
  std::vector<QuaternionAlgebra<F>> algebras_;
  std::vector<std::pair<F, std::size_t>> table_;
  std::vector<std::vector<std::pair<std::size_t, F>>> sigma_;
  std::vector<F> trd_;
};

template <class F>
bool verify_witness(const AlgebraWithInvolution<F>& A, const InvolutionWitness<F>& w) {
  if (w.elements.empty()) return false;
  bool nonzero = false;
  auto acc = A.zero();
  for (const auto& x : w.elements) {
    if (x.size() != A.dim()) return false;
    for (const auto& c : x)
      if (!detail::elem_is_zero(c)) nonzero = true;
    const auto y = A.mul(A.sigma(x), x);
    for (std::size_t p = 0; p < y.size(); ++p) acc[p] = acc[p] + y[p];
  }
  if (!nonzero) return false;
  for (const auto& c : acc)
    if (!detail::elem_is_zero(c)) return false;
  return true;
}

/// T_sigma on the standard basis, diagonalized.
template <class F>
QuadraticForm<F> trace_form(const AlgebraWithInvolution<F>& A) {
  return diagonalize(A.trace_gram()).form;
}

/// Tensor product of the factor trace forms and the transpose trace form of M_s.
template <class F>
QuadraticForm<F> tensor_trace_form(const QuatTensor<F>& t);

template <class F>
AlgebraWithInvolution<F> scale(std::size_t n, const AlgebraWithInvolution<F>& A, std::size_t dim_cap = 64);

/// Signature of the involution at an ordering: Rational takes no ordering, NFElem an embedding
/// index, RationalFunction a Cut.
int signature_involution(const AlgebraWithInvolution<Rational>& A);
int signature_involution(const AlgebraWithInvolution<NFElem>& A, std::size_t embedding);
int signature_involution(const AlgebraWithInvolution<RationalFunction>& A, const Cut& P);
/// Integer square root of a trace form signature, checked.
int involution_signature_from_trace(int trace_signature);

bool is_weakly_hyperbolic(const AlgebraWithInvolution<Rational>& A);
bool is_weakly_hyperbolic(const AlgebraWithInvolution<NFElem>& A);
bool is_weakly_hyperbolic(const AlgebraWithInvolution<RationalFunction>& A);

/// Isotropy of (A tensor F_P, sigma) over the real closure: when A is nonsplit at P and sigma is
/// orthogonal the skew-hermitian classification applies, otherwise sig_P sigma < deg A.
/// Weak isotropy over the real closure is sig_P sigma < deg A in every case.
bool real_closed_isotropic(const AlgebraWithInvolution<Rational>& A);
bool real_closed_isotropic(const AlgebraWithInvolution<NFElem>& A, std::size_t embedding);
bool real_closed_isotropic(const AlgebraWithInvolution<RationalFunction>& A, const Cut& P);

/// Elements X_c = v^(c) e_1^t built from a witness of the underlying form: q for SplitOrthogonal,
/// jacobson_trace(h) (slot-major) for Index2Symplectic.
template <class F>
InvolutionWitness<F> pull_back_witness(const AlgebraWithInvolution<F>& A, const IsotropyWitness<F>& w);

/// Bounded search for sum conj(x_r) d_r x_r = 0 over copies of a skew-hermitian form over Q.
std::optional<InvolutionWitness<Rational>> skew_witness_search(const AlgebraWithInvolution<Rational>& A,
                                                               const WitnessBounds& bounds = {});

}  // namespace witt

#include "witt/involution_impl.hpp"
