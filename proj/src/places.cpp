#include "witt/places.hpp"

#include <algorithm>
#include <stdexcept>

#include "witt/factor.hpp"

namespace witt {

const AlgebraicReal& Cut::point() const {
  if (kind_ == Kind::NegInfinity || kind_ == Kind::PosInfinity) throw std::logic_error("infinite cut has no point");
  return c_;
}

std::string Cut::to_text() const {
  switch (kind_) {
    case Kind::NegInfinity:
      return "-inf";
    case Kind::PosInfinity:
      return "+inf";
    case Kind::LeftOf:
      return "left-of(" + c_.to_text() + ")";
    case Kind::RightOf:
      return "right-of(" + c_.to_text() + ")";
  }
  return "";
}

int sign_at(const QPoly& f, const Cut& P) {
  if (f.is_zero()) throw ZeroFunction();
  switch (P.kind()) {
    case Cut::Kind::PosInfinity:
      return sgn(f.lc());
    case Cut::Kind::NegInfinity:
      return f.degree() % 2 == 0 ? sgn(f.lc()) : -sgn(f.lc());
    default:
      break;
  }
  // Sign just beside c: the first nonvanishing derivative decides, flipped on the left for odd order.
  QPoly d = f;
  int order = 0;
  while (true) {
    const int s = P.point().sign_of(d);
    if (s != 0) return (P.kind() == Cut::Kind::LeftOf && order % 2 == 1) ? -s : s;
    d = d.derivative();
    ++order;
  }
}

int sign_at(const RationalFunction& f, const Cut& P) {
  if (f.is_zero()) throw ZeroFunction();
  return sign_at(f.num(), P) * sign_at(f.den(), P);
}

std::vector<AlgebraicReal> breakpoints(const std::vector<QPoly>& polys) {
  std::vector<AlgebraicReal> all;
  for (const auto& p : polys) {
    if (p.degree() < 1) continue;
    for (auto& r : real_roots(p)) all.push_back(std::move(r));
  }
  std::sort(all.begin(), all.end());
  std::vector<AlgebraicReal> out;
  for (auto& r : all)
    if (out.empty() || !(out.back() == r)) out.push_back(std::move(r));
  return out;
}

std::vector<Cut> sample_cuts(const std::vector<QPoly>& polys) {
  const auto bps = breakpoints(polys);
  std::vector<Cut> cuts{Cut::neg_infinity()};
  auto lower = [](const AlgebraicReal& c) {
    if (c.is_rational()) return c.rational_value();
    return c.lo();
  };
  auto upper = [](const AlgebraicReal& c) {
    if (c.is_rational()) return c.rational_value();
    return c.hi();
  };
  if (bps.empty()) {
    cuts.push_back(Cut::right_of(AlgebraicReal(Rational(0))));
  } else {
    // Refine so that neighbouring isolating intervals are disjoint.
    for (std::size_t i = 0; i + 1 < bps.size(); ++i)
      while (!(upper(bps[i]) < lower(bps[i + 1]))) {
        bps[i].refine();
        bps[i + 1].refine();
      }
    cuts.push_back(Cut::right_of(AlgebraicReal(simplest_between(lower(bps.front()) - 1, lower(bps.front())))));
    for (std::size_t i = 0; i < bps.size(); ++i) {
      cuts.push_back(Cut::left_of(bps[i]));
      cuts.push_back(Cut::right_of(bps[i]));
      const Rational lo = upper(bps[i]);
      const Rational hi = i + 1 < bps.size() ? lower(bps[i + 1]) : lo + 2;
      cuts.push_back(Cut::right_of(AlgebraicReal(simplest_between(lo, hi))));
    }
  }
  cuts.push_back(Cut::pos_infinity());
  return cuts;
}

std::vector<QPoly> defining_polys(const std::vector<RationalFunction>& fs) {
  std::vector<QPoly> out;
  for (const auto& f : fs) {
    out.push_back(f.num());
    out.push_back(f.den());
  }
  return out;
}

RealValuation RealValuation::finite(const QPoly& p) {
  const QPoly m = p.monic();
  if (!is_irreducible(m)) throw std::invalid_argument("valuation polynomial must be irreducible");
  if (count_real_roots(m) == 0) throw std::invalid_argument("valuation polynomial has no real root");
  RealValuation v;
  v.infinite_ = false;
  v.p_ = m;
  v.residue_ = NumberField::make(m);
  return v;
}

RealValuation RealValuation::infinity() {
  RealValuation v;
  v.infinite_ = true;
  v.residue_ = NumberField::make(qpoly({0, 1}));
  return v;
}

const QPoly& RealValuation::prime() const {
  if (infinite_) throw std::logic_error("valuation at infinity has no prime polynomial");
  return p_;
}

RationalFunction RealValuation::uniformizer() const {
  if (infinite_) return RationalFunction(QPoly::constant(Rational(1)), qpoly({0, 1}));
  return RationalFunction(p_);
}

std::string RealValuation::to_text() const { return infinite_ ? "inf" : "(" + witt::to_text(p_) + ")"; }

std::pair<int, NFElem> valuation_and_residue(const RationalFunction& f, const RealValuation& v) {
  if (f.is_zero()) throw ZeroFunction();
  const NFPtr& k = v.residue_field();
  if (v.is_infinity()) {
    return {f.den().degree() - f.num().degree(), NFElem(k, f.num().lc() / f.den().lc())};
  }
  QPoly num = f.num(), den = f.den();
  int val = 0;
  while (true) {
    auto [q, r] = num.divmod(v.prime());
    if (!r.is_zero()) break;
    num = q;
    ++val;
  }
  while (true) {
    auto [q, r] = den.divmod(v.prime());
    if (!r.is_zero()) break;
    den = q;
    --val;
  }
  return {val, NFElem(k, num) / NFElem(k, den)};
}

int valuation(const RationalFunction& f, const RealValuation& v) { return valuation_and_residue(f, v).first; }

bool is_totally_positive(const Rational& x) {
  if (x == 0) throw ZeroFunction();
  return x > 0;
}

bool is_totally_positive(const NFElem& x) {
  if (x.is_zero()) throw ZeroFunction();
  return x.is_totally_positive();
}

bool is_totally_positive(const RationalFunction& f) {
  if (f.is_zero()) throw ZeroFunction();
  for (const auto& P : sample_cuts({f.num(), f.den()}))
    if (sign_at(f, P) < 0) return false;
  return true;
}

std::vector<QPoly> real_prime_factors(const RationalFunction& f) {
  std::vector<QPoly> out;
  for (const QPoly* p : {&f.num(), &f.den()}) {
    if (p->degree() < 1) continue;
    for (const auto& [g, e] : factor(*p).factors)
      if (count_real_roots(g) > 0) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), poly_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace witt
