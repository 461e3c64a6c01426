#include "witt/signatures.hpp"

#include <cstdlib>

namespace witt {

int signature(const QForm& q) {
  int s = 0;
  for (const auto& e : q.entries()) s += sgn(e);
  return s;
}

int signature(const NFForm& q, std::size_t embedding) {
  int s = 0;
  for (const auto& e : q.entries()) s += e.sign_at(embedding);
  return s;
}

int signature(const TForm& q, const Cut& P) {
  int s = 0;
  for (const auto& e : q.entries()) s += sign_at(e, P);
  return s;
}

std::size_t num_orderings(const NFForm& q) {
  for (const auto& e : q.entries())
    if (e.field()) return e.field()->num_real_embeddings();
  return 1;  // all entries rational
}

SignatureFunction signature_profile(const TForm& q) {
  SignatureFunction out;
  const auto polys = defining_polys(q.entries());
  out.breakpoints = breakpoints(polys);
  out.cuts = sample_cuts(polys);
  for (const auto& P : out.cuts) out.values.push_back(signature(q, P));
  return out;
}

bool is_totally_indefinite(const QForm& q) { return std::abs(signature(q)) < static_cast<int>(q.dim()); }

bool is_totally_indefinite(const NFForm& q) {
  const int n = static_cast<int>(q.dim());
  for (std::size_t k = 0; k < num_orderings(q); ++k)
    if (std::abs(signature(q, k)) >= n) return false;
  return true;
}

bool is_totally_indefinite(const TForm& q) {
  const int n = static_cast<int>(q.dim());
  for (int v : signature_profile(q).values)
    if (std::abs(v) >= n) return false;
  return true;
}

bool is_torsion(const QForm& q) { return signature(q) == 0; }

bool is_torsion(const NFForm& q) {
  for (std::size_t k = 0; k < num_orderings(q); ++k)
    if (signature(q, k) != 0) return false;
  return true;
}

bool is_torsion(const TForm& q) {
  for (int v : signature_profile(q).values)
    if (v != 0) return false;
  return true;
}

bool weakly_isotropic_number_field(const QForm& q) { return is_totally_indefinite(q); }

bool weakly_isotropic_number_field(const NFForm& q) {
  if (num_orderings(q) == 0) return true;
  return is_totally_indefinite(q);
}

}  // namespace witt
