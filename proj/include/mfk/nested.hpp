#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mfk/geometry.hpp"
#include "mfk/lattice.hpp"
#include "mfk/polytope.hpp"

namespace mfk {

/// Flats of positive rank, stored in lattice order (rank, then lexicographic).
struct BuildingSet {
  std::vector<ElementSet> members;

  bool contains(ElementSet x) const { return std::find(members.begin(), members.end(), x) != members.end(); }
  friend bool operator==(const BuildingSet&, const BuildingSet&) = default;
};

inline BuildingSet make_building_set(const FlatLattice& lattice, std::vector<ElementSet> members) {
  std::sort(members.begin(), members.end(), [&](ElementSet a, ElementSet b) {
    auto ia = lattice.index_of(a), ib = lattice.index_of(b);
    if (ia && ib) return *ia < *ib;
    if (ia || ib) return ia.has_value();
    return lex_less(a, b);
  });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {std::move(members)};
}

struct BuildingCheck {
  bool ok = true;
  std::optional<ElementSet> counterexample;  // a flat whose lower interval fails to factor
};

/// max(G ∩ [0̂, X]) as lattice indices.
inline std::vector<std::size_t> maximal_below(const FlatLattice& lattice, const BuildingSet& g, ElementSet x) {
  std::vector<std::size_t> below;
  for (ElementSet y : g.members)
    if (is_subset(y, x)) below.push_back(*lattice.index_of(y));
  std::vector<std::size_t> out;
  for (auto a : below) {
    bool maximal = std::none_of(below.begin(), below.end(),
                                [&](std::size_t b) { return b != a && lattice.leq(a, b); });
    if (maximal) out.push_back(a);
  }
  return out;
}

inline BuildingCheck is_building_set(const FlatLattice& lattice, const BuildingSet& g) {
  for (ElementSet y : g.members) {
    auto idx = lattice.index_of(y);
    if (!idx || *idx == lattice.bottom()) return {false, y};
  }
  for (std::size_t i = 1; i < lattice.size(); ++i) {
    const ElementSet x = lattice.flat(i);
    auto factors = maximal_below(lattice, g, x);
    if (factors.empty() || !interval_product_check(lattice, i, factors)) return {false, x};
  }
  return {};
}

inline BuildingSet min_building(const FlatLattice& lattice) {
  return make_building_set(lattice, irreducible_flats(lattice));
}

inline BuildingSet max_building(const FlatLattice& lattice) {
  std::vector<ElementSet> all;
  for (std::size_t i = 1; i < lattice.size(); ++i) all.push_back(lattice.flat(i));
  return make_building_set(lattice, std::move(all));
}

inline constexpr std::size_t kMaxOptionalFlats = 12;

/// Every building set between G_min and G_max, by exhaustive filtering. Limited to n <= 5
/// and at most kMaxOptionalFlats flats outside G_min.
inline std::vector<BuildingSet> building_sets_between(const FlatLattice& lattice) {
  if (lattice.matroid().size() > 5) {
    throw Error(ErrorCode::kParameterOutOfRange, "building set enumeration is limited to n <= 5");
  }
  const BuildingSet gmin = min_building(lattice);
  std::vector<ElementSet> extra;
  for (ElementSet x : max_building(lattice).members)
    if (!gmin.contains(x)) extra.push_back(x);
  if (extra.size() > kMaxOptionalFlats) {
    throw Error(ErrorCode::kParameterOutOfRange,
                std::to_string(extra.size()) + " optional flats; enumeration is limited to " +
                    std::to_string(kMaxOptionalFlats));
  }
  std::vector<BuildingSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << extra.size()); ++mask) {
    std::vector<ElementSet> members = gmin.members;
    for (std::size_t k = 0; k < extra.size(); ++k)
      if ((mask >> k) & 1U) members.push_back(extra[k]);
    BuildingSet g = make_building_set(lattice, std::move(members));
    if (is_building_set(lattice, g).ok) out.push_back(std::move(g));
  }
  return out;
}

namespace detail {

/// Can x join the nested set s? Checks every antichain of s ∪ {x} that contains x.
inline bool extends_nested(const Matroid& m, const BuildingSet& g, const std::vector<ElementSet>& s, ElementSet x) {
  std::vector<ElementSet> free;
  for (ElementSet y : s) {
    if (y == x) return false;
    if (!is_subset(y, x) && !is_subset(x, y)) free.push_back(y);
  }
  const std::size_t k = free.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    ElementSet u = x;
    bool antichain = true;
    std::vector<ElementSet> picked;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1U) picked.push_back(free[i]);
    for (std::size_t a = 0; a < picked.size() && antichain; ++a)
      for (std::size_t b = a + 1; b < picked.size() && antichain; ++b)
        antichain = !is_subset(picked[a], picked[b]) && !is_subset(picked[b], picked[a]);
    if (!antichain) continue;
    for (ElementSet y : picked) u |= y;
    if (g.contains(m.closure(u))) return false;
  }
  return true;
}

}  // namespace detail

inline bool is_nested(const FlatLattice& lattice, const BuildingSet& g, std::vector<ElementSet> s) {
  std::sort(s.begin(), s.end(), LexLess{});
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  std::vector<ElementSet> acc;
  for (ElementSet x : s) {
    if (!g.contains(x)) return false;
    if (!detail::extends_nested(lattice.matroid(), g, acc, x)) return false;
    acc.push_back(x);
  }
  return true;
}

/// Ne(G) with vertices numbered by position in g.members.
struct NestedComplex {
  std::vector<ElementSet> vertices;
  SimplicialComplex complex;

  std::vector<std::vector<ElementSet>> maximal_sets() const {
    std::vector<std::vector<ElementSet>> out;
    for (const auto& f : complex.facets()) {
      std::vector<ElementSet> s;
      for (int v : f) s.push_back(vertices[v]);
      out.push_back(std::move(s));
    }
    return out;
  }
};

/// Depth-first enumeration; nested sets are closed under taking subsets.
inline NestedComplex nested_complex(const FlatLattice& lattice, const BuildingSet& g) {
  const Matroid& m = lattice.matroid();
  NestedComplex out;
  out.vertices = g.members;
  std::vector<Simplex> facets;
  std::vector<ElementSet> current;
  Simplex ids;
  auto walk = [&](auto&& self, std::size_t from) -> void {
    bool extendable = false;
    for (std::size_t v = 0; v < g.members.size(); ++v) {
      if (std::find(ids.begin(), ids.end(), static_cast<int>(v)) != ids.end()) continue;
      if (!detail::extends_nested(m, g, current, g.members[v])) continue;
      extendable = true;
      if (v < from) continue;
      current.push_back(g.members[v]);
      ids.push_back(static_cast<int>(v));
      self(self, v + 1);
      ids.pop_back();
      current.pop_back();
    }
    if (!extendable) facets.push_back(ids);
  };
  walk(walk, 0);
  out.complex = SimplicialComplex(static_cast<int>(g.members.size()), std::move(facets));
  return out;
}

/// Ne_0(G): nested sets avoiding the top flat [n]; Ne(G) is a cone over it when [n] ∈ G.
inline NestedComplex nested_complex_reduced(const FlatLattice& lattice, const BuildingSet& g) {
  const NestedComplex full = nested_complex(lattice, g);
  const ElementSet top = lattice.flat(lattice.top());
  NestedComplex out;
  std::vector<int> renumber(full.vertices.size(), -1);
  for (std::size_t v = 0; v < full.vertices.size(); ++v) {
    if (full.vertices[v] == top) continue;
    renumber[v] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(full.vertices[v]);
  }
  std::vector<Simplex> facets;
  for (const auto& f : full.complex.facets()) {
    Simplex s;
    for (int v : f)
      if (renumber[v] >= 0) s.push_back(renumber[v]);
    if (!s.empty()) facets.push_back(std::move(s));
  }
  out.complex = SimplicialComplex(static_cast<int>(out.vertices.size()), std::move(facets));
  return out;
}

struct NestedFan {
  Fan fan;
  std::vector<std::vector<ElementSet>> nested_sets;  // label of fan.maximal_cones[i]
  bool unimodular = true;
};

/// One cone σ_S = cone{e_X : X ∈ S} per maximal nested set; e_[n] is zero in the quotient.
/// For disconnected M the maximal elements of G are the components and σ_S is not pointed.
inline NestedFan nested_fan(const Matroid& m, const BuildingSet& g) {
  const FlatLattice lattice(m);
  auto check = is_building_set(lattice, g);
  if (!check.ok) {
    throw Error(ErrorCode::kInvalidBuildingSet,
                "not a building set; fails at flat " + label(*check.counterexample));
  }
  const int n = m.size();
  const auto sets = nested_complex(lattice, g).maximal_sets();
  std::vector<std::vector<QuotientVector>> cones;
  for (const auto& s : sets) {
    std::vector<QuotientVector> rays;
    for (ElementSet x : s) rays.push_back(QuotientVector::indicator(n, x));
    cones.push_back(std::move(rays));
  }
  NestedFan out;
  out.fan = make_fan(n, cones);
  // Re-align labels with the sorted cone list.
  out.nested_sets.resize(out.fan.maximal_cones.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<int> ids;
    for (const auto& r : cones[i]) {
      if (r.is_zero()) continue;
      ids.push_back(static_cast<int>(std::lower_bound(out.fan.rays.begin(), out.fan.rays.end(), r) -
                                     out.fan.rays.begin()));
    }
    std::sort(ids.begin(), ids.end());
    auto pos = std::lower_bound(out.fan.maximal_cones.begin(), out.fan.maximal_cones.end(), ids) -
               out.fan.maximal_cones.begin();
    if (static_cast<std::size_t>(pos) < out.nested_sets.size()) out.nested_sets[pos] = sets[i];
  }
  for (std::size_t c = 0; c < out.fan.maximal_cones.size(); ++c)
    out.unimodular = out.unimodular && is_unimodular(n, out.fan.cone_rays(c));
  return out;
}

struct EqualityCondition {
  bool holds = true;
  std::optional<std::pair<ElementSet, ElementSet>> witness;  // (X, Y) with (M|Y)/X disconnected
};

/// (M|Y)/X connected for every flat X < Y with Y ∈ G_min.
inline EqualityCondition fans_equal_condition(const Matroid& m) {
  const FlatLattice lattice(m);
  for (ElementSet y : min_building(lattice).members) {
    const Matroid restricted = restriction(m, y);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const ElementSet x = lattice.flat(i);
      if (x == y || !is_subset(x, y)) continue;
      if (!is_connected(contraction(restricted, compress(x, y)))) return {false, std::make_pair(x, y)};
    }
  }
  return {};
}

/// Validates a linear extension of s (a permutation respecting inclusion).
inline void check_linear_extension(const std::vector<ElementSet>& s, const std::vector<ElementSet>& extension) {
  std::vector<ElementSet> a(s), b(extension);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw Error(ErrorCode::kNotLinearExtension, "extension is not a permutation of the nested set");
  for (std::size_t i = 0; i < extension.size(); ++i)
    for (std::size_t j = i + 1; j < extension.size(); ++j)
      if (is_proper_subset(extension[j], extension[i])) {
        throw Error(ErrorCode::kNotLinearExtension,
                    label(extension[j]) + " must precede " + label(extension[i]));
      }
}

/// Rank-then-lexicographic order.
inline std::vector<ElementSet> default_extension(const Matroid& m, std::vector<ElementSet> s) {
  std::sort(s.begin(), s.end(), [&](ElementSet a, ElementSet b) {
    const int ra = m.rank(a), rb = m.rank(b);
    return ra != rb ? ra < rb : lex_less(a, b);
  });
  return s;
}

/// E_k = (X_1 ∨ ... ∨ X_k) - (X_1 ∨ ... ∨ X_{k-1}).
inline std::vector<ElementSet> blocks_partition(const Matroid& m, const std::vector<ElementSet>& s,
                                                const std::vector<ElementSet>& extension) {
  check_linear_extension(s, extension);
  std::vector<ElementSet> blocks;
  ElementSet prev = m.closure(0);
  for (ElementSet x : extension) {
    const ElementSet next = m.closure(prev | x);
    blocks.push_back(next & ~prev);
    prev = next;
  }
  return blocks;
}

inline std::vector<ElementSet> blocks_partition(const Matroid& m, const std::vector<ElementSet>& s) {
  return blocks_partition(m, s, default_extension(m, s));
}

struct NestedHelpers {
  std::vector<std::vector<ElementSet>> chains;          // S_i in increasing order, per element i
  std::vector<std::optional<ElementSet>> minima;        // min S_i
  std::vector<std::pair<ElementSet, std::optional<int>>> flat_minimum;  // X -> i_0 with S_{i_0} ⊆ S_i for i ∈ X
};

inline NestedHelpers nested_chain_helpers(const FlatLattice& lattice, const std::vector<ElementSet>& s) {
  const int n = lattice.matroid().size();
  NestedHelpers out;
  for (int i = 0; i < n; ++i) {
    std::vector<ElementSet> si;
    for (ElementSet x : s)
      if (contains(x, i)) si.push_back(x);
    std::sort(si.begin(), si.end(), [](ElementSet a, ElementSet b) {
      return cardinality(a) != cardinality(b) ? cardinality(a) < cardinality(b) : lex_less(a, b);
    });
    out.minima.push_back(si.empty() ? std::nullopt : std::optional<ElementSet>(si.front()));
    out.chains.push_back(std::move(si));
  }
  auto subset_of = [](const std::vector<ElementSet>& a, const std::vector<ElementSet>& b) {
    return std::all_of(a.begin(), a.end(), [&](ElementSet x) { return std::find(b.begin(), b.end(), x) != b.end(); });
  };
  for (ElementSet x : lattice.flats()) {
    std::optional<int> found;
    for (int i : elements_of(x)) {
      bool smallest = true;
      for (int j : elements_of(x)) smallest = smallest && subset_of(out.chains[i], out.chains[j]);
      if (smallest) {
        found = i;
        break;
      }
    }
    out.flat_minimum.emplace_back(x, found);
  }
  return out;
}

/// Is s a chain under inclusion?
inline bool is_chain(const std::vector<ElementSet>& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!is_subset(s[a], s[b]) && !is_subset(s[b], s[a])) return false;
  return true;
}

struct ChainNesting {
  std::vector<ElementSet> nested_set;  // in the order of the linear extension
  std::vector<std::size_t> prefix;     // F_k is the join of the first prefix[k] members
};

/// Collects max(G ∩ [0̂, F_k]) for every k, in order of first appearance.
inline ChainNesting chain_to_nested(const FlatLattice& lattice, const BuildingSet& g,
                                    const std::vector<ElementSet>& chain) {
  const Matroid& m = lattice.matroid();
  if (chain.empty()) throw Error(ErrorCode::kNotAChain, "empty chain");
  for (ElementSet f : chain)
    if (!m.is_flat(f)) throw Error(ErrorCode::kNotFlats, label(f) + " is not a flat");
  for (std::size_t k = 1; k < chain.size(); ++k)
    if (!is_proper_subset(chain[k - 1], chain[k])) throw Error(ErrorCode::kNotAChain, "chain is not strictly increasing");
  if (chain.back() != m.ground()) throw Error(ErrorCode::kNotAChain, "chain must end at the ground set");

  ChainNesting out;
  for (ElementSet f : chain) {
    std::vector<ElementSet> fresh;
    for (auto idx : maximal_below(lattice, g, f)) {
      const ElementSet y = lattice.flat(idx);
      if (std::find(out.nested_set.begin(), out.nested_set.end(), y) == out.nested_set.end()) fresh.push_back(y);
    }
    fresh = default_extension(m, std::move(fresh));
    out.nested_set.insert(out.nested_set.end(), fresh.begin(), fresh.end());
    out.prefix.push_back(out.nested_set.size());
    ElementSet join = 0;
    for (ElementSet y : out.nested_set) join |= y;
    if (m.closure(join) != f) throw std::logic_error("nested prefix join differs from the chain flat");
  }
  if (!is_nested(lattice, g, out.nested_set)) throw std::logic_error("collected set is not nested");
  return out;
}

/// Σ_{X∈G} Δ_X with Δ_X = conv{e_i : i ∈ X}.
inline RationalPolytope dcp_weight_polytope(const Matroid& m, const BuildingSet& g) {
  const FlatLattice lattice(m);
  if (!is_building_set(lattice, g).ok) throw Error(ErrorCode::kInvalidBuildingSet, "not a building set");
  const int n = m.size();
  RationalPolytope acc = convex_hull({RationalVector(n, Rational(0))});
  for (ElementSet x : g.members) {
    std::vector<RationalVector> pts;
    for (int e : elements_of(x)) pts.push_back(indicator_vector(n, singleton(e)));
    acc = minkowski_sum(acc, convex_hull(std::move(pts)));
  }
  return acc;
}

/// Each maximal cone lies in the inner normal cone of some vertex: the rays share a
/// common minimizing vertex.
inline bool normal_fan_refined_by(const RationalPolytope& p, const Fan& fan) {
  for (std::size_t c = 0; c < fan.maximal_cones.size(); ++c) {
    std::vector<bool> common(p.vertices.size(), true);
    for (const auto& r : fan.cone_rays(c)) {
      std::vector<bool> on(p.vertices.size(), false);
      for (auto v : minimizing_face(p, r.to_rational())) on[v] = true;
      for (std::size_t i = 0; i < on.size(); ++i) common[i] = common[i] && on[i];
    }
    if (std::none_of(common.begin(), common.end(), [](bool b) { return b; })) return false;
  }
  return true;
}

}  // namespace mfk
