#pragma once

#include <optional>
#include <vector>

#include "witt/places.hpp"
#include "witt/quadratic_form.hpp"

namespace witt {

/// q = <e_1..e_n> over Q(t) at a real valuation v: e_i = pi^(k_i) u_i with v(u_i) = 0.
/// Entries with even k_i feed the first residue form, odd k_i the second.
struct SpringerResidues {
  std::vector<NFElem> first, second;           // residue forms over the residue field (may be empty)
  std::vector<std::size_t> first_index, second_index;  // source entry of each residue
  std::vector<RationalFunction> first_units, second_units;  // the units u_i
  /// T with T^t diag(q) T = diag(first_units, pi * second_units).
  Matrix<RationalFunction> transform;
};

SpringerResidues springer_residues(const TForm& q, const RealValuation& v);

/// The form first_units _|_ pi * second_units over Q(t).
TForm springer_reconstruction(const SpringerResidues& r, const RealValuation& v);

}  // namespace witt

namespace witt {

/// First real embedding of the residue field at which the residue form is definite.
std::optional<std::size_t> definite_embedding(const std::vector<NFElem>& form, const NFPtr& field);

/// Anisotropy of a residue form over its residue field (the empty form is anisotropic).
/// Decided by Hasse-Minkowski over Q, otherwise by a definite embedding or a found isotropic
/// vector; nullopt when neither applies.
std::optional<bool> residue_anisotropic(const std::vector<NFElem>& form, const NFPtr& field);

}  // namespace witt
