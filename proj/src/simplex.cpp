#include "witt/simplex.hpp"

#include <stdexcept>

namespace witt {

std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& rows,
                                                    const std::vector<Rational>& b, const Deadline& deadline) {
  const std::size_t m = rows.size();
  if (b.size() != m) throw std::invalid_argument("feasible_point: row count mismatch");
  const std::size_t n = m ? rows[0].size() : 0;
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("feasible_point: ragged matrix");

  // Tableau columns: n originals, m artificials, then the right-hand side.
  const std::size_t w = n + m + 1;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(w, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = flip ? Rational(-rows[i][j]) : rows[i][j];
    T[i][n + i] = 1;
    T[i][w - 1] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> cost(w, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < w; ++j)
      if (j < n || j == w - 1) cost[j] -= T[i][j];

  while (true) {
    deadline.check();
    std::size_t enter = w;
    for (std::size_t j = 0; j < n + m; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == w) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][w - 1] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw std::logic_error("phase-one objective unbounded");
    const Rational piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j < w; ++j)
        if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < w; ++j)
        if (T[leave][j] != 0) cost[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[w - 1] != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T[i][w - 1];
  return x;
}

}  // namespace witt
