#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mfk/bits.hpp"
#include "mfk/error.hpp"
#include "mfk/linalg.hpp"
#include "mfk/rational.hpp"

namespace mfk {

/// Ground-set cap; MFK_MAX_N raises it up to the word size.
inline int max_ground_size() {
  static const int cap = [] {
    if (const char* env = std::getenv("MFK_MAX_N")) {
      int v = std::atoi(env);
      if (v > 0) return std::min(v, kHardMaxElements);
    }
    return 20;
  }();
  return cap;
}

inline void check_ground_size(int n) {
  if (n < 0) throw Error(ErrorCode::kParameterOutOfRange, "negative ground set size");
  if (n > max_ground_size()) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "n=" + std::to_string(n) + " exceeds cap " + std::to_string(max_ground_size()) +
                    " (set MFK_MAX_N to override)");
  }
}

/// Lexicographic order on sorted element lists, e.g. 14 < 23 and 12 < 123.
constexpr bool lex_less(ElementSet a, ElementSet b) {
  const ElementSet diff = a ^ b;
  if (diff == 0) return false;
  const ElementSet low = diff & (~diff + 1);
  const ElementSet above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

struct LexLess {
  constexpr bool operator()(ElementSet a, ElementSet b) const { return lex_less(a, b); }
};

/// Rows span V; the matroid is the column matroid.
struct LinearRealization {
  RationalMatrix matrix;
};

/// A matroid on {0..n-1} given by its bases, kept in lexicographic order.
class Matroid {
 public:
  Matroid() = default;

  /// Validates cardinalities and the exchange axiom exhaustively.
  static Matroid from_bases(int n, std::vector<ElementSet> bases) {
    check_ground_size(n);
    if (bases.empty()) throw Error(ErrorCode::kCardinalityMismatch, "empty basis collection");
    const ElementSet ground = full_set(n);
    const int d = cardinality(bases.front());
    for (ElementSet b : bases) {
      if (!is_subset(b, ground)) {
        throw Error(ErrorCode::kParameterOutOfRange, "basis " + label(b) + " not inside [n]");
      }
      if (cardinality(b) != d) {
        throw Error(ErrorCode::kCardinalityMismatch,
                    "bases " + label(bases.front()) + " and " + label(b) + " differ in size");
      }
    }
    Matroid m = trusted(n, std::move(bases));
    m.check_exchange();
    return m;
  }

  /// Skips validation; callers guarantee the exchange axiom.
  static Matroid trusted(int n, std::vector<ElementSet> bases) {
    Matroid m;
    m.n_ = n;
    std::sort(bases.begin(), bases.end(), LexLess{});
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    m.rank_ = bases.empty() ? 0 : cardinality(bases.front());
    m.bases_ = std::move(bases);
    return m;
  }

  int size() const { return n_; }
  int rank() const { return rank_; }
  ElementSet ground() const { return full_set(n_); }
  const std::vector<ElementSet>& bases() const { return bases_; }

  const std::optional<LinearRealization>& realization() const { return realization_; }
  Matroid with_realization(LinearRealization r) const {
    Matroid m = *this;
    m.realization_ = std::move(r);
    return m;
  }
  Matroid without_realization() const {
    Matroid m = *this;
    m.realization_.reset();
    return m;
  }

  bool is_basis(ElementSet s) const {
    return std::binary_search(bases_.begin(), bases_.end(), s, LexLess{});
  }

  int rank(ElementSet s) const {
    const int cap = std::min(cardinality(s), rank_);
    int best = 0;
    for (ElementSet b : bases_) {
      best = std::max(best, cardinality(b & s));
      if (best == cap) break;
    }
    return best;
  }

  bool is_independent(ElementSet s) const { return rank(s) == cardinality(s); }

  ElementSet closure(ElementSet s) const {
    const int r = rank(s);
    ElementSet out = s;
    for (int e = 0; e < n_; ++e) {
      if (!mfk::contains(s, e) && rank(s | singleton(e)) == r) out |= singleton(e);
    }
    return out;
  }

  bool is_flat(ElementSet s) const { return closure(s) == s; }

  /// Labeled equality: same n and same bases; realizations are ignored.
  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  void check_exchange() const {
    for (ElementSet b1 : bases_) {
      for (ElementSet b2 : bases_) {
        for (int x : elements_of(b1 & ~b2)) {
          bool found = false;
          for (int y : elements_of(b2 & ~b1)) {
            if (is_basis((b1 & ~singleton(x)) | singleton(y))) {
              found = true;
              break;
            }
          }
          if (!found) {
            throw Error(ErrorCode::kExchangeViolation, "B=" + label(b1) + " B'=" + label(b2) +
                                                           " x=" + std::to_string(x + 1));
          }
        }
      }
    }
  }

  int n_ = 0;
  int rank_ = 0;
  std::vector<ElementSet> bases_;
  std::optional<LinearRealization> realization_;
};

/// Column matroid of A; zero columns become loops.
inline Matroid from_matrix(const RationalMatrix& a) {
  const int n = static_cast<int>(a.cols());
  check_ground_size(n);
  RationalMatrix basis = row_space_basis(a);
  const int d = static_cast<int>(basis.rows());
  std::vector<ElementSet> bases;
  for_each_k_subset(full_set(n), d, [&](ElementSet s) {
    auto cols = elements_of(s);
    if (static_cast<int>(mfk::rank(basis.select_columns(cols))) == d) bases.push_back(s);
  });
  return Matroid::trusted(n, std::move(bases)).with_realization({std::move(basis)});
}

/// Graphic matroid; element i is the i-th edge, vertices are 1-based.
inline Matroid from_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(edges.size());
  check_ground_size(n);
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > vertex_count || v > vertex_count) {
      throw Error(ErrorCode::kParameterOutOfRange, "edge endpoint outside 1..vertex_count");
    }
  }
  auto find = [](std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto is_forest = [&](ElementSet s) {
    std::vector<int> parent(vertex_count + 1);
    std::iota(parent.begin(), parent.end(), 0);
    for (int e : elements_of(s)) {
      int a = find(parent, edges[e].first), b = find(parent, edges[e].second);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  };
  std::vector<int> parent(vertex_count + 1);
  std::iota(parent.begin(), parent.end(), 0);
  int merges = 0;
  for (auto [u, v] : edges) {
    int a = find(parent, u), b = find(parent, v);
    if (a != b) {
      parent[a] = b;
      ++merges;
    }
  }
  std::vector<ElementSet> bases;
  for_each_k_subset(full_set(n), merges, [&](ElementSet s) {
    if (is_forest(s)) bases.push_back(s);
  });
  // Oriented incidence matrix realizes the graphic matroid over the rationals.
  RationalMatrix incidence(vertex_count, n);
  for (int e = 0; e < n; ++e) {
    auto [u, v] = edges[e];
    if (u == v) continue;
    incidence(std::min(u, v) - 1, e) += 1;
    incidence(std::max(u, v) - 1, e) -= 1;
  }
  return Matroid::trusted(n, std::move(bases)).with_realization({row_space_basis(incidence)});
}

inline Matroid uniform(int d, int n) {
  if (d < 1 || d > n) {
    throw Error(ErrorCode::kParameterOutOfRange,
                "uniform matroid needs 1 <= d <= n, got d=" + std::to_string(d) +
                    " n=" + std::to_string(n));
  }
  check_ground_size(n);
  std::vector<ElementSet> bases;
  for_each_k_subset(full_set(n), d, [&](ElementSet s) { bases.push_back(s); });
  return Matroid::trusted(n, std::move(bases));
}

inline Matroid boolean_matroid(int n) { return uniform(n, n); }

inline ElementSet loops(const Matroid& m) { return m.closure(0); }

inline Matroid dual(const Matroid& m) {
  std::vector<ElementSet> bases;
  bases.reserve(m.bases().size());
  for (ElementSet b : m.bases()) bases.push_back(m.ground() & ~b);
  Matroid out = Matroid::trusted(m.size(), std::move(bases));
  if (m.realization()) {
    // Kernel of A realizes the dual: M(V)* = M(V^perp).
    out = out.with_realization({kernel_basis(m.realization()->matrix)});
  }
  return out;
}

/// Maps the elements of `inside` (taken from `s`) onto 0..|inside|-1 in order.
inline ElementSet compress(ElementSet s, ElementSet inside) {
  ElementSet out = 0;
  int pos = 0;
  for (int e : elements_of(inside)) {
    if (mfk::contains(s, e)) out |= singleton(pos);
    ++pos;
  }
  return out;
}

/// Inverse of compress.
inline ElementSet expand(ElementSet s, ElementSet inside) {
  ElementSet out = 0;
  int pos = 0;
  for (int e : elements_of(inside)) {
    if (mfk::contains(s, pos)) out |= singleton(e);
    ++pos;
  }
  return out;
}

/// Bases of (M|upper)/lower on upper-lower, expressed in M's labels. Requires lower ⊆ upper.
inline std::vector<ElementSet> minor_bases(const Matroid& m, ElementSet upper, ElementSet lower) {
  const int r_upper = m.rank(upper);
  const int r_lower = m.rank(lower);
  std::set<ElementSet> out;
  for (ElementSet b : m.bases()) {
    if (cardinality(b & upper) == r_upper && cardinality(b & lower) == r_lower) {
      out.insert(b & upper & ~lower);
    }
  }
  return {out.begin(), out.end()};
}

/// M|X relabeled onto 1..|X| in increasing order.
inline Matroid restriction(const Matroid& m, ElementSet x) {
  std::vector<ElementSet> bases;
  for (ElementSet b : minor_bases(m, x, 0)) bases.push_back(compress(b, x));
  Matroid out = Matroid::trusted(cardinality(x), std::move(bases));
  if (m.realization()) {
    auto cols = elements_of(x);
    out = out.with_realization({row_space_basis(m.realization()->matrix.select_columns(cols))});
  }
  return out;
}

/// M/X on [n]-X relabeled onto 1..n-|X| in increasing order.
inline Matroid contraction(const Matroid& m, ElementSet x) {
  const ElementSet rest = m.ground() & ~x;
  std::vector<ElementSet> bases;
  for (ElementSet b : minor_bases(m, m.ground(), x)) bases.push_back(compress(b, rest));
  return Matroid::trusted(cardinality(rest), std::move(bases));
}

/// M2's elements are shifted after M1's.
inline Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
  const int n = m1.size() + m2.size();
  check_ground_size(n);
  std::vector<ElementSet> bases;
  for (ElementSet b1 : m1.bases())
    for (ElementSet b2 : m2.bases()) bases.push_back(b1 | (b2 << m1.size()));
  Matroid out = Matroid::trusted(n, std::move(bases));
  if (m1.realization() && m2.realization()) {
    const auto& a = m1.realization()->matrix;
    const auto& b = m2.realization()->matrix;
    RationalMatrix block(a.rows() + b.rows(), n);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) block(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) block(a.rows() + r, a.cols() + c) = b(r, c);
    out = out.with_realization({std::move(block)});
  }
  return out;
}

/// Direct sum of matroids living on disjoint parts of one ground set of size n.
inline Matroid disjoint_union(int n, const std::vector<std::vector<ElementSet>>& parts) {
  std::vector<ElementSet> bases{0};
  for (const auto& part : parts) {
    std::vector<ElementSet> next;
    next.reserve(bases.size() * part.size());
    for (ElementSet b : bases)
      for (ElementSet p : part) next.push_back(b | p);
    bases = std::move(next);
  }
  return Matroid::trusted(n, std::move(bases));
}

/// {e} plus the basis elements that e can replace.
inline ElementSet fundamental_circuit(const Matroid& m, ElementSet basis, int e) {
  ElementSet c = singleton(e);
  for (int b : elements_of(basis)) {
    if (m.is_basis((basis & ~singleton(b)) | singleton(e))) c |= singleton(b);
  }
  return c;
}

/// Orders subsets by size, then lexicographically.
struct SizeLexLess {
  constexpr bool operator()(ElementSet a, ElementSet b) const {
    if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
    return lex_less(a, b);
  }
};

/// Minimal dependent sets. Every circuit is fundamental for some basis.
inline std::vector<ElementSet> circuits(const Matroid& m) {
  std::set<ElementSet, SizeLexLess> out;
  for (ElementSet b : m.bases()) {
    for (int e : elements_of(m.ground() & ~b)) out.insert(fundamental_circuit(m, b, e));
  }
  return {out.begin(), out.end()};
}

struct ComponentPartition {
  std::vector<ElementSet> blocks;  // sorted by smallest element
  int kappa() const { return static_cast<int>(blocks.size()); }
};

/// Finest decomposition M = ⊕ M|E_i: elements sharing a circuit are joined.
inline ComponentPartition components(const Matroid& m) {
  const int n = m.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElementSet c : circuits(m)) {
    auto elems = elements_of(c);
    for (std::size_t i = 1; i < elems.size(); ++i) parent[find(elems[i])] = find(elems[0]);
  }
  std::vector<ElementSet> by_root(n, 0);
  for (int e = 0; e < n; ++e) by_root[find(e)] |= singleton(e);
  ComponentPartition out;
  for (int e = 0; e < n; ++e) {
    if (by_root[e] != 0) out.blocks.push_back(by_root[e]);
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](ElementSet a, ElementSet b) { return std::countr_zero(a) < std::countr_zero(b); });
  return out;
}

inline bool is_connected(const Matroid& m) { return components(m).kappa() <= 1; }

inline bool is_simple(const Matroid& m) {
  if (loops(m) != 0) return false;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j)
      if (m.rank(singleton(i) | singleton(j)) == 1) return false;
  return true;
}

}  // namespace mfk
