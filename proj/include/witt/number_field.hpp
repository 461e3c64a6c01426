#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "witt/matrix.hpp"
#include "witt/poly.hpp"
#include "witt/real_roots.hpp"

namespace witt {

/// Q[x]/(m) for a monic irreducible m. Immutable; shared between its elements.
class NumberField {
 public:
  /// Verifies irreducibility (rejects reducible input with std::invalid_argument).
  static std::shared_ptr<const NumberField> make(const QPoly& minpoly);

  const QPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  /// Real embeddings, ascending by the image of the generator.
  const std::vector<AlgebraicReal>& real_embeddings() const { return embeddings_; }
  std::size_t num_real_embeddings() const { return embeddings_.size(); }
  std::string to_text() const;

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.minpoly_ == b.minpoly_; }

 private:
  explicit NumberField(QPoly m);
  QPoly minpoly_;
  std::vector<AlgebraicReal> embeddings_;
};

using NFPtr = std::shared_ptr<const NumberField>;

bool same_field(const NFPtr& a, const NFPtr& b);

/// Element of a number field as the reduced residue class of a polynomial in the generator.
/// A default or field-less element is a rational constant that adopts the field of its partner.
class NFElem {
 public:
  NFElem() = default;
  NFElem(NFPtr field, QPoly rep);
  NFElem(NFPtr field, const Rational& c);
  static NFElem generator(NFPtr field);

  const NFPtr& field() const { return field_; }
  const QPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rational rational_value() const;

  NFElem operator-() const;
  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  friend NFElem operator/(const NFElem& a, const NFElem& b);
  friend NFElem operator+(const NFElem& a, const Rational& b) { return a + NFElem(a.field_, b); }
  friend NFElem operator*(const Rational& a, const NFElem& b) { return NFElem(b.field_, a) * b; }
  NFElem inverse() const;
  NFElem pow(unsigned e) const;
  friend bool operator==(const NFElem& a, const NFElem& b) { return a.rep_ == b.rep_; }
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

  /// Matrix of multiplication by this element on the power basis.
  QMatrix multiplication_matrix() const;
  Rational norm() const;
  Rational trace() const;

  /// Sign under the k-th real embedding (0-based).
  int sign_at(std::size_t embedding) const;
  bool is_totally_positive() const;

  /// A square root in the field, if one exists.
  std::optional<NFElem> sqrt() const;
  bool is_square() const { return sqrt().has_value(); }

  std::string to_text(const std::string& var = "x") const;

 private:
  NFPtr field_;
  QPoly rep_;
};

inline bool is_zero(const NFElem& x) { return x.is_zero(); }
inline NFElem zero_like(const NFElem& x) { return NFElem(x.field(), Rational(0)); }
inline NFElem one_like(const NFElem& x) { return NFElem(x.field(), Rational(1)); }
inline int sign(const NFElem& x, std::size_t embedding) { return x.sign_at(embedding); }

}  // namespace witt
