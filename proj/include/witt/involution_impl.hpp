#pragma once

// Template definitions for involution.hpp.

namespace witt {

namespace detail {

/// u_p * u_q for quaternion basis indices p, q: (coefficient, basis index).
template <class F>
std::pair<F, std::size_t> quat_basis_product(const QuaternionAlgebra<F>& d, std::size_t p, std::size_t q) {
  const auto z = d.mul(d.basis(p), d.basis(q));
  for (std::size_t k = 0; k < 4; ++k)
    if (!elem_is_zero(z.c[k])) return {z.c[k], k};
  throw std::logic_error("quaternion basis product vanished");
}

template <class F>
std::size_t word_digit(std::size_t word, std::size_t factor, std::size_t nfactors) {
  return (word >> (2 * (nfactors - 1 - factor))) & 3u;
}

}  // namespace detail

template <class F>
template <class D>
void AlgebraWithInvolution<F>::setup(const D& d) {
  if constexpr (std::is_same_v<D, SplitOrthogonal<F>>) {
    m_ = d.form.dim();
    zero_ = zero_like(d.form[0]);
    type_ = InvolutionType::orthogonal;
  } else if constexpr (std::is_same_v<D, SplitSymplectic<F>>) {
    if (d.n == 0) throw std::invalid_argument("symplectic models need n >= 1");
    m_ = 2 * d.n;
    zero_ = zero_like(d.zero);
    type_ = InvolutionType::symplectic;
  } else if constexpr (std::is_same_v<D, Index2Symplectic<F>> || std::is_same_v<D, Index2Orthogonal<F>>) {
    const auto div = is_division(d.form.algebra);
    if (div && !*div) throw std::invalid_argument("index 2 models need a quaternion division algebra");
    m_ = d.form.dim();
    zero_ = zero_like(d.form.algebra.a());
    algebras_ = {d.form.algebra};
    words_ = 4;
    type_ = std::is_same_v<D, Index2Symplectic<F>> ? InvolutionType::symplectic : InvolutionType::orthogonal;
  } else {
    if (d.factors.empty()) throw std::invalid_argument("tensor models need at least one quaternion factor");
    if (d.matrix_size == 0) throw std::invalid_argument("matrix size must be >= 1");
    m_ = d.matrix_size;
    zero_ = zero_like(d.factors[0].algebra.a());
    bool symplectic = false;
    for (const auto& f : d.factors) {
      if (f.twist && (!f.twist->is_pure() || f.twist->is_zero()))
        throw std::invalid_argument("orthogonal twists must be nonzero pure quaternions");
      if (f.twist && detail::elem_is_zero(f.algebra.norm(*f.twist)))
        throw std::invalid_argument("orthogonal twists must be invertible");
      algebras_.push_back(f.algebra);
      if (!f.twist) symplectic = !symplectic;
      words_ *= 4;
    }
    type_ = symplectic ? InvolutionType::symplectic : InvolutionType::orthogonal;
  }
}

template <class F>
Quaternion<F> AlgebraWithInvolution<F>::sigma_quat(std::size_t factor, const Quaternion<F>& u) const {
  const auto& d = algebras_[factor];
  const auto& t = std::get<QuatTensor<F>>(data_).factors[factor].twist;
  if (!t) return d.conj(u);
  return d.mul(d.mul(*t, d.conj(u)), d.inverse(*t));
}

template <class F>
void AlgebraWithInvolution<F>::build() {
  const std::size_t nf = algebras_.size();
  const F one = one_like(zero_);
  table_.assign(dim_ * dim_, {zero_, 0});
  for (std::size_t p = 0; p < dim_; ++p) {
    const std::size_t r = p / words_ / m_, c = (p / words_) % m_, w = p % words_;
    for (std::size_t q = 0; q < dim_; ++q) {
      const std::size_t r2 = q / words_ / m_, c2 = (q / words_) % m_, w2 = q % words_;
      if (c != r2) continue;
      F coef = one;
      std::size_t word = 0;
      for (std::size_t f = 0; f < nf; ++f) {
        auto [k, idx] = detail::quat_basis_product(algebras_[f], detail::word_digit<F>(w, f, nf),
                                                   detail::word_digit<F>(w2, f, nf));
        coef = coef * k;
        word = word * 4 + idx;
      }
      table_[p * dim_ + q] = {coef, (r * m_ + c2) * words_ + word};
    }
  }

  trd_.assign(dim_, zero_);
  F two_f = one;
  for (std::size_t f = 0; f < nf; ++f) two_f = two_f + two_f;
  for (std::size_t r = 0; r < m_; ++r) trd_[(r * m_ + r) * words_] = two_f;

  sigma_.assign(dim_, {});
  std::visit(
      [&](const auto& d) {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, SplitOrthogonal<F>> || std::is_same_v<D, SplitSymplectic<F>>) {
          Matrix<F> g(m_, m_, zero_);
          if constexpr (std::is_same_v<D, SplitOrthogonal<F>>) {
            for (std::size_t i = 0; i < m_; ++i) g(i, i) = d.form[i];
          } else {
            for (std::size_t i = 0; i < d.n; ++i) {
              g(i, i + d.n) = one;
              g(i + d.n, i) = -one;
            }
          }
          const Matrix<F> gi = g.inverse();
          // sigma(E_rc) = G^-1 E_cr G
          for (std::size_t p = 0; p < dim_; ++p) {
            const std::size_t r = p / m_, c = p % m_;
            for (std::size_t i = 0; i < m_; ++i)
              for (std::size_t j = 0; j < m_; ++j) {
                const F v = gi(i, c) * g(r, j);
                if (!detail::elem_is_zero(v)) sigma_[p].push_back({i * m_ + j, v});
              }
          }
        } else {
          for (std::size_t p = 0; p < dim_; ++p) {
            const std::size_t r = p / words_ / m_, c = (p / words_) % m_, w = p % words_;
            // coordinates of the image word
            std::vector<std::pair<std::size_t, F>> img{{0, one}};
            for (std::size_t f = 0; f < nf; ++f) {
              const auto u = algebras_[f].basis(detail::word_digit<F>(w, f, nf));
              Quaternion<F> s;
              if constexpr (std::is_same_v<D, QuatTensor<F>>) {
                s = sigma_quat(f, u);
              } else {
                const auto& h = d.form;
                const auto& alg = h.algebra;
                Quaternion<F> hc, hr;
                if constexpr (std::is_same_v<D, Index2Symplectic<F>>) {
                  hc = alg.scalar(h.entries[c]);
                  hr = alg.scalar(h.entries[r]);
                } else {
                  hc = h.entries[c];
                  hr = h.entries[r];
                }
                s = alg.mul(alg.mul(alg.inverse(hc), alg.conj(u)), hr);
              }
              std::vector<std::pair<std::size_t, F>> next;
              for (const auto& [wd, cf] : img)
                for (std::size_t k = 0; k < 4; ++k)
                  if (!detail::elem_is_zero(s.c[k])) next.push_back({wd * 4 + k, cf * s.c[k]});
              img = std::move(next);
            }
            for (const auto& [wd, cf] : img) sigma_[p].push_back({(c * m_ + r) * words_ + wd, cf});
          }
        }
      },
      data_);
}

template <class F>
std::string AlgebraWithInvolution<F>::to_text() const {
  return std::visit(
      [](const auto& d) -> std::string {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, SplitOrthogonal<F>>) {
          return "ortho(" + d.form.to_text() + ")";
        } else if constexpr (std::is_same_v<D, SplitSymplectic<F>>) {
          return "symp(" + std::to_string(d.n) + ")";
        } else if constexpr (std::is_same_v<D, Index2Symplectic<F>>) {
          std::string s = "symp2(" + d.form.algebra.to_text() + ";";
          for (std::size_t i = 0; i < d.form.dim(); ++i) s += (i ? ", " : " ") + witt::to_text(d.form.entries[i]);
          return s + ")";
        } else if constexpr (std::is_same_v<D, Index2Orthogonal<F>>) {
          std::string s = "ortho2(" + d.form.algebra.to_text() + ";";
          for (std::size_t i = 0; i < d.form.dim(); ++i) s += (i ? ", " : " ") + witt::to_text(d.form.entries[i]);
          return s + ")";
        } else {
          std::string s = "tensor(";
          for (std::size_t i = 0; i < d.factors.size(); ++i) {
            if (i) s += ", ";
            s += d.factors[i].algebra.to_text() + ":";
            s += d.factors[i].twist ? "int(" + witt::to_text(*d.factors[i].twist) + ")" : "gamma";
          }
          if (d.matrix_size != 1) s += "; " + std::to_string(d.matrix_size);
          return s + ")";
        }
      },
      data_);
}

template <class F>
QuadraticForm<F> tensor_trace_form(const QuatTensor<F>& t) {
  std::optional<QuadraticForm<F>> acc;
  for (const auto& f : t.factors) {
    AlgebraWithInvolution<F> single(QuatTensor<F>{{f}, 1});
    const auto tf = trace_form(single);
    acc = acc ? tensor(*acc, tf) : tf;
  }
  if (t.matrix_size > 1) {
    AlgebraWithInvolution<F> mat(SplitOrthogonal<F>{QuadraticForm<F>(
        std::vector<F>(t.matrix_size, one_like(t.factors[0].algebra.a())))});
    acc = tensor(*acc, trace_form(mat));
  }
  return *acc;
}

template <class F>
AlgebraWithInvolution<F> scale(std::size_t n, const AlgebraWithInvolution<F>& A, std::size_t dim_cap) {
  if (n == 0) throw std::invalid_argument("scale needs n >= 1");
  return std::visit(
      [&](const auto& d) -> AlgebraWithInvolution<F> {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, SplitOrthogonal<F>>) {
          return AlgebraWithInvolution<F>(D{multiple(n, d.form)}, dim_cap);
        } else if constexpr (std::is_same_v<D, SplitSymplectic<F>>) {
          return AlgebraWithInvolution<F>(D{d.n * n, d.zero}, dim_cap);
        } else if constexpr (std::is_same_v<D, Index2Symplectic<F>> || std::is_same_v<D, Index2Orthogonal<F>>) {
          auto e = d.form.entries;
          for (std::size_t k = 1; k < n; ++k) e.insert(e.end(), d.form.entries.begin(), d.form.entries.end());
          auto h = d.form;
          h.entries = std::move(e);
          return AlgebraWithInvolution<F>(D{std::move(h)}, dim_cap);
        } else {
          return AlgebraWithInvolution<F>(D{d.factors, d.matrix_size * n}, dim_cap);
        }
      },
      A.data());
}

template <class F>
InvolutionWitness<F> pull_back_witness(const AlgebraWithInvolution<F>& A, const IsotropyWitness<F>& w) {
  const std::size_t m = A.matrix_size();
  std::size_t per = 0, words = 1;
  if (std::holds_alternative<SplitOrthogonal<F>>(A.data())) {
    per = m;
  } else if (std::holds_alternative<Index2Symplectic<F>>(A.data())) {
    per = 4 * m;
    words = 4;
  } else {
    throw std::invalid_argument("witness pull-back needs a split orthogonal or index 2 symplectic model");
  }
  if (w.vectors.size() != w.copies * per) throw std::invalid_argument("witness length does not match the model");
  InvolutionWitness<F> out;
  for (std::size_t c = 0; c < w.copies; ++c) {
    auto x = A.zero();
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t k = 0; k < words; ++k) x[(r * m) * words + k] = w.vectors[c * per + r * words + k];
    out.elements.push_back(std::move(x));
  }
  return out;
}

}  // namespace witt
