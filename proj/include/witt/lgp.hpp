#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "witt/involution.hpp"
#include "witt/signatures.hpp"
#include "witt/springer.hpp"
#include "witt/witness.hpp"

namespace witt {

struct MultipleOrderings : std::invalid_argument {
  MultipleOrderings() : std::invalid_argument("the base field has more than one ordering") {}
};

/// A definite ordering. cut is set over Q(t); embedding indexes the real embeddings of Q or a
/// number field. For quadratic forms value = signature, |value| = bound = dim and condition is
/// "form-definite". For algebras with involution value = sig_P sigma = bound = deg A.
struct OrderingObstruction {
  std::optional<Cut> cut;
  std::size_t embedding = 0;
  int value = 0;
  int bound = 0;
  std::string condition = "signature";
};

/// A real valuation at which both residue forms are empty or definite at the recorded embedding
/// of the residue field. transfer is "springer" (residues of the form) or "morita" (residues of
/// the quadratic form attached to a skew-hermitian form over the split henselization).
struct ValuationObstruction {
  RealValuation valuation;
  std::vector<NFElem> first, second;
  std::optional<std::size_t> first_embedding, second_embedding;
  std::string transfer = "springer";
};

using LocalObstruction = std::variant<OrderingObstruction, ValuationObstruction>;

using WitnessPayload = std::variant<IsotropyWitness<Rational>, IsotropyWitness<NFElem>,
                                    IsotropyWitness<RationalFunction>, InvolutionWitness<Rational>,
                                    InvolutionWitness<NFElem>, InvolutionWitness<RationalFunction>>;

struct WeaklyIsotropic {
  std::optional<WitnessPayload> witness;
};
struct StronglyAnisotropic {
  LocalObstruction obstruction;
};
/// tag: unsupported-residue-field, larmour-out-of-scope, division-undecided, precision-exhausted,
/// no-conic-point, unsupported-model.
struct Undecided {
  std::string tag;
  std::string detail;
};

struct Decision {
  std::variant<WeaklyIsotropic, StronglyAnisotropic, Undecided> result;
  /// Engine route, e.g. "bp/valuation" or "hermitian/index2-symplectic/jacobson".
  std::string route;

  bool weakly_isotropic() const { return std::holds_alternative<WeaklyIsotropic>(result); }
  bool strongly_anisotropic() const { return std::holds_alternative<StronglyAnisotropic>(result); }
  bool undecided() const { return std::holds_alternative<Undecided>(result); }
  bool has_witness() const { return weakly_isotropic() && std::get<WeaklyIsotropic>(result).witness.has_value(); }
  const LocalObstruction& obstruction() const { return std::get<StronglyAnisotropic>(result).obstruction; }
};

struct DecisionOptions {
  WitnessBounds bounds;
  bool search_witness = true;
  /// Checked in addition to the relevant valuations.
  std::vector<RealValuation> extra_valuations;
  int precision_cap = 64;
};

/// Finite(p) for the real monic irreducible p dividing a square-normalized entry (to odd
/// multiplicity), in entry order, then Infinity if some normalized entry has odd degree.
std::vector<RealValuation> relevant_valuations(const TForm& q);

/// Local conditions over Q(t): full signature profile, then residues at the relevant valuations.
Decision bp_quadratic(const TForm& q, const DecisionOptions& opts = {});

/// Over Q or a number field: weakly isotropic iff indefinite at every real embedding.
Decision prestel_sap_quadratic(const QForm& q, const DecisionOptions& opts = {});
Decision prestel_sap_quadratic(const NFForm& q, const DecisionOptions& opts = {});

/// Hermitian dispatcher for index <= 2 models (QuatTensor models go to check_decomposable).
Decision bp_involution(const AlgebraWithInvolution<RationalFunction>& A, const DecisionOptions& opts = {});
Decision bp_involution(const AlgebraWithInvolution<Rational>& A, const DecisionOptions& opts = {});

Decision sap_decide(const AlgebraWithInvolution<Rational>& A, const DecisionOptions& opts = {});
Decision sap_decide(const AlgebraWithInvolution<NFElem>& A, const DecisionOptions& opts = {});
/// Single-ordering fields only; throws MultipleOrderings otherwise.
Decision ed_decide(const AlgebraWithInvolution<Rational>& A, const DecisionOptions& opts = {});
Decision ed_decide(const AlgebraWithInvolution<NFElem>& A, const DecisionOptions& opts = {});

/// Negative entries first, then positive ones, each block in input order.
QForm effectively_diagonalize(const QForm& q);
NFForm effectively_diagonalize(const NFForm& q);

/// Tri-state predicate value.
enum class Truth { no, yes, unknown };
std::string to_text(Truth t);

/// The computable predicates of the decomposable equivalence for a QuatTensor model:
/// (i) weakly isotropic, (ii) weakly hyperbolic, (iii) T_sigma weakly isotropic,
/// (iv) T_sigma weakly hyperbolic, (v) sig_P sigma = 0 for all P, (vi) sig_P T_sigma = 0 for all P.
struct DecomposableReport {
  Truth weakly_isotropic = Truth::unknown, weakly_hyperbolic = Truth::unknown;
  Truth trace_weakly_isotropic = Truth::unknown, trace_weakly_hyperbolic = Truth::unknown;
  Truth signatures_vanish = Truth::unknown, trace_signatures_vanish = Truth::unknown;
  /// Implications among computed predicates that failed (empty when consistent).
  std::vector<std::string> violations;
  std::optional<WitnessPayload> trace_witness;
  Decision trace_decision;
};

DecomposableReport check_decomposable(const AlgebraWithInvolution<Rational>& A, const DecisionOptions& opts = {});
DecomposableReport check_decomposable(const AlgebraWithInvolution<RationalFunction>& A,
                                      const DecisionOptions& opts = {});

/// Decision for a QuatTensor model with r <= 2 by its signatures: each factor has signature 0
/// or 2, so sig_P sigma is 0 or deg A; all zero means weakly hyperbolic, otherwise an ordering
/// with sig_P sigma = deg A is reported. Positive answers carry no witness.
Decision decomposable_decide(const AlgebraWithInvolution<Rational>& A, const DecisionOptions& opts = {});
Decision decomposable_decide(const AlgebraWithInvolution<RationalFunction>& A, const DecisionOptions& opts = {});

/// pind(A) <= bound, certified by a totally positive slot entry (or a split factor).
template <class F>
struct PindCertificate {
  int bound = 2;
  std::optional<std::size_t> factor;  // factor made split over the pythagorean closure
  std::optional<F> totally_positive;  // the certifying element
  std::string reason;
};

std::optional<PindCertificate<Rational>> pind_upper_certificate(const AlgebraWithInvolution<Rational>& A);
std::optional<PindCertificate<RationalFunction>> pind_upper_certificate(
    const AlgebraWithInvolution<RationalFunction>& A);

/// Decision through the pythagorean-closure reduction; throws std::invalid_argument when no
/// certificate exists.
Decision decide_via_pind(const AlgebraWithInvolution<Rational>& A, const DecisionOptions& opts = {});
Decision decide_via_pind(const AlgebraWithInvolution<RationalFunction>& A, const DecisionOptions& opts = {});

/// Fresh recomputation of a negative certificate.
bool verify_obstruction(const QForm& q, const LocalObstruction& o);
bool verify_obstruction(const NFForm& q, const LocalObstruction& o);
bool verify_obstruction(const TForm& q, const LocalObstruction& o);
bool verify_obstruction(const AlgebraWithInvolution<Rational>& A, const LocalObstruction& o);
bool verify_obstruction(const AlgebraWithInvolution<NFElem>& A, const LocalObstruction& o);
bool verify_obstruction(const AlgebraWithInvolution<RationalFunction>& A, const LocalObstruction& o);

}  // namespace witt
