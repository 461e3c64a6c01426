#include "witt/morita.hpp"

#include <algorithm>
#include <cstdlib>

namespace witt {

namespace {

using SQ = Quaternion<SeriesElement>;

int min_valuation_index(const SQ& x) {
  int best = -1;
  for (int k = 0; k < 4; ++k) {
    if (x.c[k].is_indistinguishable_from_zero()) continue;
    if (best < 0 || x.c[k].valuation() < x.c[best].valuation()) best = k;
  }
  return best;
}

/// (valuation, leading coefficient) of the diagonal entries of a 2x2 symmetric block, or sets
/// isotropic when the block is a hyperbolic plane.
void block_residues(const SeriesElement& p, const SeriesElement& q, const SeriesElement& s, MoritaResidues& out) {
  std::vector<SeriesElement> diag;
  if (!p.is_indistinguishable_from_zero()) {
    diag = {p, s - q * q / p};
  } else if (!s.is_indistinguishable_from_zero()) {
    diag = {s, p - q * q / s};
  } else {
    if (q.is_indistinguishable_from_zero()) throw PrecisionExhausted("Morita block");
    // p, s = O(pi^prec): -det = q^2 (1 - ps/q^2) is a square once 2 v(q) < prec
    if (2 * q.valuation() < std::min(p.precision(), s.precision())) {
      out.isotropic = true;
      return;
    }
    throw PrecisionExhausted("Morita block");
  }
  for (const auto& d : diag) {
    if (d.is_indistinguishable_from_zero()) throw PrecisionExhausted("Morita diagonal entry");
    const int k = d.valuation();
    (k % 2 == 0 ? out.first : out.second).push_back(d.leading());
  }
}

MoritaResidues attempt(const SkewHermitianForm<RationalFunction>& h, const RealValuation& v, int prec,
                       const std::array<SeriesElement, 3>& pt) {
  const NFPtr& k = v.residue_field();
  auto ex = [&](const RationalFunction& f) {
    return f.is_zero() ? SeriesElement::zero(k, prec) : expand(f, v, prec);
  };
  const QuaternionAlgebra<SeriesElement> d(ex(h.algebra.a()), ex(h.algebra.b()));
  const SeriesElement zero = SeriesElement::zero(k, prec);
  const SeriesElement one = SeriesElement::constant(k, NFElem(k, Rational(1)), prec);
  const SeriesElement half = SeriesElement::constant(k, NFElem(k, Rational(1, 2)), prec);
  // y = (y1 i + y2 j) / x with y^2 = 1
  const SQ y{{zero, pt[1] / pt[0], pt[2] / pt[0], zero}};
  const SQ e = half * (d.scalar(one) + y);
  const SQ f = d.scalar(one) - e;
  // two independent elements of D e
  std::vector<SQ> cands;
  for (std::size_t b = 0; b < 4; ++b) cands.push_back(d.mul(d.basis(b), e));
  std::optional<std::pair<SQ, SQ>> basis;
  int best = 0;
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t w = u + 1; w < 4; ++w)
      for (int r = 0; r < 4; ++r)
        for (int c = r + 1; c < 4; ++c) {
          const SeriesElement minor = cands[u].c[r] * cands[w].c[c] - cands[u].c[c] * cands[w].c[r];
          if (minor.is_indistinguishable_from_zero()) continue;
          if (!basis || minor.valuation() < best) {
            basis = std::make_pair(cands[u], cands[w]);
            best = minor.valuation();
          }
        }
  if (!basis) throw PrecisionExhausted("basis of D e");
  std::optional<SQ> z;
  for (std::size_t b = 0; b < 4 && !z; ++b) {
    const SQ cand = d.mul(d.mul(f, d.basis(b)), e);
    if (min_valuation_index(cand) >= 0) z = cand;
  }
  if (!z) throw PrecisionExhausted("spanning element of (1 - e) D e");
  const int kz = min_valuation_index(*z);
  auto coefficient = [&](const SQ& val) { return val.c[kz] / z->c[kz]; };

  MoritaResidues out;
  out.precision = prec;
  const std::array<SQ, 2> fb{basis->first, basis->second};
  for (const auto& dr : h.entries) {
    const SQ ds{{ex(dr.c[0]), ex(dr.c[1]), ex(dr.c[2]), ex(dr.c[3])}};
    SeriesElement g[2][2];
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) g[r][c] = coefficient(d.mul(d.mul(d.conj(fb[r]), ds), fb[c]));
    block_residues(g[0][0], g[0][1], g[1][1], out);
    if (out.isotropic) return out;
  }
  return out;
}

}  // namespace

std::optional<MoritaResidues> morita_residues(const SkewHermitianForm<RationalFunction>& h, const RealValuation& v,
                                              int precision_cap) {
  int maxv = 0;
  auto upd = [&](const RationalFunction& x) {
    if (!x.is_zero()) maxv = std::max(maxv, std::abs(valuation(x, v)));
  };
  upd(h.algebra.a());
  upd(h.algebra.b());
  for (const auto& dq : h.entries)
    for (const auto& c : dq.c) upd(c);
  int prec = 2 * maxv + 4;
  while (true) {
    try {
      auto pt = hensel_lift_conic(h.algebra.a(), h.algebra.b(), v, prec);
      if (!pt) return std::nullopt;
      return attempt(h, v, prec, *pt);
    } catch (const PrecisionExhausted&) {
      if (2 * prec > precision_cap) throw;
      prec *= 2;
    }
  }
}

}  // namespace witt
