#include "witt/quaternion.hpp"

#include "witt/congruence.hpp"
#include "witt/hilbert.hpp"
#include "witt/springer.hpp"

namespace witt {

std::optional<bool> is_division(const QuaternionAlgebra<Rational>& d) {
  for (const auto& p : relevant_primes({d.a(), d.b()}))
    if (hilbert_symbol(d.a(), d.b(), p) == -1) return true;
  return hilbert_symbol(d.a(), d.b(), Integer(0)) == -1;
}

std::optional<std::vector<Rational>> norm_form_isotropic_vector(const QuaternionAlgebra<Rational>& d) {
  return isotropic_vector_Q(norm_form(d).entries());
}

namespace {

std::vector<QPoly> small_polys() {
  std::vector<QPoly> out;
  for (long c1 = -2; c1 <= 2; ++c1)
    for (long c0 = -2; c0 <= 2; ++c0) out.push_back(qpoly({c0, c1}));
  return out;
}

}  // namespace

std::optional<std::vector<RationalFunction>> norm_form_isotropic_vector(const QuaternionAlgebra<RationalFunction>& d) {
  const RationalFunction zero, one(1);
  const auto& a = d.a();
  const auto& b = d.b();
  if (auto r = field_sqrt(-(a * b))) return std::vector<RationalFunction>{*r, zero, zero, one};
  const auto polys = small_polys();
  for (const auto& y : polys)
    for (const auto& z : polys) {
      const RationalFunction ry(y), rz(z);
      const RationalFunction v = a * ry * ry + b * rz * rz;
      if (v.is_zero()) continue;
      if (auto x = field_sqrt(v)) return std::vector<RationalFunction>{*x, ry, rz, zero};
    }
  return std::nullopt;
}

std::optional<bool> is_division(const QuaternionAlgebra<RationalFunction>& d) {
  if (norm_form_isotropic_vector(d)) return false;
  const TForm pure({RationalFunction(1), -d.a(), -d.b()});
  for (const auto& P : sample_cuts(defining_polys({d.a(), d.b()})))
    if (ordering_admissible(d, P)) return true;
  std::vector<RealValuation> vals{RealValuation::infinity()};
  for (const auto& e : {d.a(), d.b()})
    for (const auto& p : real_prime_factors(e))
      if (p.degree() == 1) vals.push_back(RealValuation::finite(p));
  for (const auto& v : vals) {
    const auto r = springer_residues(pure, v);
    const auto a1 = residue_anisotropic(r.first, v.residue_field());
    const auto a2 = residue_anisotropic(r.second, v.residue_field());
    if (a1 && a2 && *a1 && *a2) return true;
  }
  return std::nullopt;
}

bool ordering_admissible(const QuaternionAlgebra<Rational>& d) { return d.a() < 0 && d.b() < 0; }

bool ordering_admissible(const QuaternionAlgebra<RationalFunction>& d, const Cut& P) {
  return sign_at(d.a(), P) < 0 && sign_at(d.b(), P) < 0;
}

std::optional<bool> valuation_admissible(const QuaternionAlgebra<RationalFunction>& d, const RealValuation& v) {
  const auto r = springer_residues(norm_form(d), v);
  const auto a1 = residue_anisotropic(r.first, v.residue_field());
  const auto a2 = residue_anisotropic(r.second, v.residue_field());
  if ((a1 && !*a1) || (a2 && !*a2)) return false;
  if (a1 && a2) return true;
  return std::nullopt;
}

bool skew_isotropy_real_closed(std::size_t n, bool d_definite) {
  if (!d_definite) throw std::invalid_argument("skew-hermitian real closed test needs a division algebra");
  if (n == 0) throw std::invalid_argument("skew-hermitian forms must have dimension >= 1");
  return n >= 2;
}

}  // namespace witt
