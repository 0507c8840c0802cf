#pragma once

#include <optional>
#include <vector>

#include "mfk/linalg.hpp"

namespace mfk {

/// Exact phase-one simplex (Bland's rule): some x >= 0 with A x = b, or nullopt.
inline std::optional<RationalVector> nonnegative_solution(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // Columns: n originals, m artificials, then the right-hand side.
  RationalMatrix t(m + 1, n + m + 1);
  for (std::size_t r = 0; r < m; ++r) {
    const int sign = b[r] < 0 ? -1 : 1;
    for (std::size_t c = 0; c < n; ++c) t(r, c) = sign * a(r, c);
    t(r, n + r) = 1;
    t(r, n + m) = sign * b[r];
  }
  // Objective row holds reduced costs of minimizing the artificial sum.
  for (std::size_t c = 0; c <= n + m; ++c) {
    if (c >= n && c < n + m) continue;
    Rational s = 0;
    for (std::size_t r = 0; r < m; ++r) s -= t(r, c);
    t(m, c) = s;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  while (true) {
    std::size_t enter = n + m;
    for (std::size_t c = 0; c < n + m; ++c) {
      if (t(m, c) < 0) {
        enter = c;
        break;
      }
    }
    if (enter == n + m) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t(r, enter) <= 0) continue;
      Rational ratio = t(r, n + m) / t(r, enter);
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded cannot happen for phase one
    const Rational inv = 1 / t(leave, enter);
    for (std::size_t c = 0; c <= n + m; ++c) t(leave, c) *= inv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || t(r, enter) == 0) continue;
      const Rational f = t(r, enter);
      for (std::size_t c = 0; c <= n + m; ++c) t(r, c) -= f * t(leave, c);
    }
    basis[leave] = enter;
  }
  if (t(m, n + m) != 0) return std::nullopt;
  RationalVector x(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) x[basis[r]] = t(r, n + m);
  return x;
}

}  // namespace mfk
