#pragma once

#include <map>
#include <vector>

#include "mfk/matroid.hpp"

namespace mfk {

/// r_c = Σ_{i∈C} c_i ∏_{j∈C-i} x_j for a circuit C with dependency c.
struct CircuitPolynomial {
  ElementSet circuit = 0;
  IntegerVector coefficients;  // c_i for the elements of the circuit in increasing order

  /// (monomial support, coefficient) pairs; the monomial for i is C - {i}.
  std::vector<std::pair<ElementSet, Integer>> terms() const {
    std::vector<std::pair<ElementSet, Integer>> out;
    const auto elems = elements_of(circuit);
    for (std::size_t k = 0; k < elems.size(); ++k) out.emplace_back(circuit & ~singleton(elems[k]), coefficients[k]);
    return out;
  }

  int degree() const { return cardinality(circuit) - 1; }

  friend bool operator==(const CircuitPolynomial&, const CircuitPolynomial&) = default;
};

/// One generator per circuit; c is integral with content 1 and first entry positive.
inline std::vector<CircuitPolynomial> reciprocal_generators(const LinearRealization& r) {
  const Matroid m = from_matrix(r.matrix);
  std::vector<CircuitPolynomial> out;
  for (ElementSet c : circuits(m)) {
    const auto cols = elements_of(c);
    const RationalMatrix k = kernel_basis(r.matrix.select_columns(cols));
    IntegerVector coeffs = primitive_integer(k.row(0));
    if (coeffs.front() < 0)
      for (auto& z : coeffs) z = -z;
    out.push_back({c, std::move(coeffs)});
  }
  return out;
}

/// Rank of the coefficient matrix of the degree-d generators in the monomial basis.
inline std::size_t minimal_generator_count(const std::vector<CircuitPolynomial>& gens, int degree) {
  std::map<ElementSet, std::size_t> column;
  std::vector<const CircuitPolynomial*> chosen;
  for (const auto& g : gens) {
    if (g.degree() != degree) continue;
    chosen.push_back(&g);
    for (const auto& [mono, coeff] : g.terms()) column.emplace(mono, column.size());
  }
  RationalMatrix m(chosen.size(), column.size());
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (const auto& [mono, coeff] : chosen[i]->terms()) m(i, column.at(mono)) += Rational(coeff);
  return rank(m);
}

}  // namespace mfk
