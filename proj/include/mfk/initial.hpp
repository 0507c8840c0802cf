#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "mfk/matroid.hpp"
#include "mfk/polytope.hpp"

namespace mfk {

/// Row space of lim_{t->0} t^u · V, where column i is scaled by t^{u_i}.
///
/// Eliminating columns in ascending u puts the lowest t-degree entry of each row at its
/// pivot; dividing by that power and letting t -> 0 keeps only the entries of equal weight.
inline LinearRealization initial_subspace(const LinearRealization& r, const WeightVector& u) {
  const RationalMatrix& a = r.matrix;
  if (u.size() != a.cols()) throw Error(ErrorCode::kDimensionMismatch, "weight vector length differs from n");
  std::vector<std::size_t> order(a.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return u[i] < u[j]; });
  auto ech = row_reduce(a, order);
  RationalMatrix limit(ech.rank(), a.cols());
  for (std::size_t row = 0; row < ech.rank(); ++row) {
    const Rational& lead = u[ech.pivots[row]];
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (u[c] == lead) limit(row, c) = ech.reduced(row, c);
  }
  return {row_space_basis(limit)};
}

/// M(V_u) equals the degeneration M_u.
inline bool check_initial_degeneration(const LinearRealization& r, const WeightVector& u) {
  const Matroid m = from_matrix(r.matrix);
  return from_matrix(initial_subspace(r, u).matrix) == degeneration(m, u).matroid_u;
}

}  // namespace mfk
