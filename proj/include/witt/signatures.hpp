#pragma once

#include <vector>

#include "witt/places.hpp"
#include "witt/quadratic_form.hpp"

namespace witt {

int signature(const QForm& q);
/// Signature at the k-th real embedding of the entries' field.
int signature(const NFForm& q, std::size_t embedding);
int signature(const TForm& q, const Cut& P);

/// Number of orderings of the base field of an NF form (0 for a nonreal field).
std::size_t num_orderings(const NFForm& q);

/// Signatures of a form over Q(t) on a complete set of sample orderings.
struct SignatureFunction {
  std::vector<AlgebraicReal> breakpoints;
  std::vector<Cut> cuts;
  std::vector<int> values;  // values[i] is the signature at cuts[i]
};

SignatureFunction signature_profile(const TForm& q);

bool is_totally_indefinite(const QForm& q);
bool is_totally_indefinite(const NFForm& q);
bool is_totally_indefinite(const TForm& q);

bool is_torsion(const QForm& q);
bool is_torsion(const NFForm& q);
bool is_torsion(const TForm& q);

/// Over Q or a number field (SAP): weakly isotropic iff indefinite at every real embedding.
bool weakly_isotropic_number_field(const QForm& q);
bool weakly_isotropic_number_field(const NFForm& q);

}  // namespace witt
