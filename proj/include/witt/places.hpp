#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "witt/number_field.hpp"
#include "witt/ratfunc.hpp"
#include "witt/real_roots.hpp"

namespace witt {

struct ZeroFunction : std::domain_error {
  ZeroFunction() : std::domain_error("zero function has no sign or valuation") {}
};

/// An ordering of Q(t), described by where t sits relative to the real line.
class Cut {
 public:
  enum class Kind { NegInfinity, LeftOf, RightOf, PosInfinity };

  static Cut neg_infinity() { return Cut(Kind::NegInfinity, AlgebraicReal()); }
  static Cut pos_infinity() { return Cut(Kind::PosInfinity, AlgebraicReal()); }
  static Cut left_of(AlgebraicReal c) { return Cut(Kind::LeftOf, std::move(c)); }
  static Cut right_of(AlgebraicReal c) { return Cut(Kind::RightOf, std::move(c)); }

  Kind kind() const { return kind_; }
  /// The point c for LeftOf/RightOf.
  const AlgebraicReal& point() const;

  std::string to_text() const;

 private:
  Cut(Kind k, AlgebraicReal c) : kind_(k), c_(std::move(c)) {}
  Kind kind_;
  AlgebraicReal c_;
};

int sign_at(const QPoly& f, const Cut& P);
int sign_at(const RationalFunction& f, const Cut& P);

/// Real roots of all given nonzero polynomials, ascending and distinct.
std::vector<AlgebraicReal> breakpoints(const std::vector<QPoly>& polys);
/// Orderings that realize every sign pattern of the given polynomials: -inf, one sample
/// per open interval between breakpoints, both sides of each breakpoint, +inf.
std::vector<Cut> sample_cuts(const std::vector<QPoly>& polys);
/// Numerators and denominators of the given functions.
std::vector<QPoly> defining_polys(const std::vector<RationalFunction>& fs);

/// A real valuation of Q(t): p-adic for a monic irreducible p with a real root, or the degree
/// valuation at infinity. The residue field is Q[x]/(p), resp. Q (represented as Q[x]/(x)).
class RealValuation {
 public:
  static RealValuation finite(const QPoly& p);
  static RealValuation infinity();

  bool is_infinity() const { return infinite_; }
  /// The monic irreducible p (Finite only).
  const QPoly& prime() const;
  const NFPtr& residue_field() const { return residue_; }
  /// A uniformizer: p, or 1/t at infinity.
  RationalFunction uniformizer() const;

  std::string to_text() const;
  friend bool operator==(const RealValuation& a, const RealValuation& b) {
    return a.infinite_ == b.infinite_ && a.p_ == b.p_;
  }

 private:
  RealValuation() = default;
  bool infinite_ = true;
  QPoly p_;
  NFPtr residue_;
};

/// v(f) and the residue of f * pi^(-v(f)).
std::pair<int, NFElem> valuation_and_residue(const RationalFunction& f, const RealValuation& v);
int valuation(const RationalFunction& f, const RealValuation& v);

bool is_totally_positive(const Rational& x);
bool is_totally_positive(const NFElem& x);
bool is_totally_positive(const RationalFunction& f);

/// Monic irreducible factors of num and den of f that have a real root.
std::vector<QPoly> real_prime_factors(const RationalFunction& f);

}  // namespace witt
