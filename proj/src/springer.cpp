#include "witt/springer.hpp"

#include <cstdlib>

#include "witt/hilbert.hpp"
#include "witt/witness.hpp"

namespace witt {

SpringerResidues springer_residues(const TForm& q, const RealValuation& v) {
  SpringerResidues r;
  const RationalFunction pi = v.uniformizer();
  std::vector<int> half(q.dim());
  for (std::size_t i = 0; i < q.dim(); ++i) {
    auto [k, res] = valuation_and_residue(q[i], v);
    const int m = k >= 0 ? k / 2 : -((-k + 1) / 2);  // floor(k/2)
    half[i] = m;
    const RationalFunction unit = q[i] / (k >= 0 ? pi.pow(static_cast<unsigned>(k)) : pi.inverse().pow(static_cast<unsigned>(-k)));
    if (k - 2 * m == 0) {
      r.first.push_back(res);
      r.first_index.push_back(i);
      r.first_units.push_back(unit);
    } else {
      r.second.push_back(res);
      r.second_index.push_back(i);
      r.second_units.push_back(unit);
    }
  }
  const std::size_t n = q.dim();
  r.transform = Matrix<RationalFunction>(n, n, RationalFunction());
  auto place = [&](std::size_t col, std::size_t src) {
    const int m = half[src];
    r.transform(src, col) = m >= 0 ? pi.inverse().pow(static_cast<unsigned>(m)) : pi.pow(static_cast<unsigned>(-m));
  };
  std::size_t col = 0;
  for (auto i : r.first_index) place(col++, i);
  for (auto i : r.second_index) place(col++, i);
  return r;
}

TForm springer_reconstruction(const SpringerResidues& r, const RealValuation& v) {
  std::vector<RationalFunction> e = r.first_units;
  for (const auto& u : r.second_units) e.push_back(v.uniformizer() * u);
  return TForm(std::move(e));
}

}  // namespace witt

namespace witt {

std::optional<std::size_t> definite_embedding(const std::vector<NFElem>& form, const NFPtr& field) {
  if (form.empty()) return std::nullopt;
  for (std::size_t k = 0; k < field->num_real_embeddings(); ++k) {
    int s = 0;
    for (const auto& e : form) s += NFElem(field, e.rep()).sign_at(k);
    if (static_cast<std::size_t>(std::abs(s)) == form.size()) return k;
  }
  return std::nullopt;
}

std::optional<bool> residue_anisotropic(const std::vector<NFElem>& form, const NFPtr& field) {
  if (form.empty()) return true;
  if (field->degree() == 1) {
    std::vector<Rational> e;
    for (const auto& x : form) e.push_back(NFElem(field, x.rep()).rational_value());
    return !isotropic_over_Q(QForm(e));
  }
  if (definite_embedding(form, field)) return true;
  if (form.size() == 1) return true;
  std::vector<NFElem> e;
  for (const auto& x : form) e.push_back(NFElem(field, x.rep()));
  WitnessBounds b;
  b.max_copies = 1;
  b.height_bound = 2;
  if (witness_search(NFForm(e), b)) return false;
  return std::nullopt;
}

}  // namespace witt
