#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "mfk/geometry.hpp"
#include "mfk/matroid.hpp"

namespace mfk {

/// Linear functional on R^n.
using WeightVector = RationalVector;

/// ∅ = F_0 ⊂ F_1 ⊂ ... ⊂ F_k = [n]: the ascending sublevel sets of u.
struct ConstancyChain {
  std::vector<ElementSet> sets;

  int length() const { return static_cast<int>(sets.size()) - 1; }
  friend bool operator==(const ConstancyChain&, const ConstancyChain&) = default;
};

struct Degeneration {
  Matroid matroid_u;
  ConstancyChain chain;
  bool loop_free = false;
};

inline RationalVector indicator_vector(int n, ElementSet s) {
  RationalVector v(n, Rational(0));
  for (int e : elements_of(s)) v[e] = 1;
  return v;
}

inline Rational evaluate(const WeightVector& u, ElementSet s) {
  Rational sum = 0;
  for (int e : elements_of(s)) sum += u[e];
  return sum;
}

inline RationalPolytope polytope(const Matroid& m) {
  std::vector<RationalVector> pts;
  for (ElementSet b : m.bases()) pts.push_back(indicator_vector(m.size(), b));
  RationalPolytope p = convex_hull(std::move(pts));
  if (p.dim != m.size() - components(m).kappa()) {
    throw std::logic_error("matroid polytope dimension differs from n - kappa");
  }
  return p;
}

inline ConstancyChain constancy_chain(const WeightVector& u) {
  std::vector<Rational> values(u.begin(), u.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  ConstancyChain c;
  c.sets.push_back(0);
  for (const auto& v : values) {
    ElementSet s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] <= v) s |= singleton(static_cast<int>(i));
    c.sets.push_back(s);
  }
  return c;
}

/// M_u = ⊕ (M|F_a)/F_{a-1}: the matroid of the face of P_M minimizing u.
inline Degeneration degeneration(const Matroid& m, const WeightVector& u) {
  if (static_cast<int>(u.size()) != m.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "weight vector length differs from n");
  }
  Degeneration d;
  d.chain = constancy_chain(u);
  std::vector<std::vector<ElementSet>> parts;
  for (std::size_t a = 1; a < d.chain.sets.size(); ++a)
    parts.push_back(minor_bases(m, d.chain.sets[a], d.chain.sets[a - 1]));
  d.matroid_u = disjoint_union(m.size(), parts);
  d.loop_free = loops(d.matroid_u) == 0;

  Rational best;
  std::vector<ElementSet> argmin;
  for (ElementSet b : m.bases()) {
    Rational val = evaluate(u, b);
    if (argmin.empty() || val < best) {
      argmin.assign(1, b);
      best = val;
    } else if (val == best) {
      argmin.push_back(b);
    }
  }
  if (argmin != d.matroid_u.bases()) throw std::logic_error("degeneration differs from the minimizing face");
  return d;
}

/// True iff every set of the chain is a flat of m.
inline bool chain_of_flats(const Matroid& m, const ConstancyChain& c) {
  return std::all_of(c.sets.begin(), c.sets.end(), [&](ElementSet s) { return m.is_flat(s); });
}

struct ClassifiedFacet {
  enum class Kind { kInterior, kBoundary };
  Kind kind = Kind::kInterior;
  ElementSet set = 0;                // the flat X, or {i} for a boundary facet
  std::vector<long> inner_normal;    // -e_X or e_i
  std::vector<ElementSet> vertices;  // bases lying on the facet

  friend bool operator==(const ClassifiedFacet&, const ClassifiedFacet&) = default;
};

/// Facets of P_M for connected, loop-free M. A single-basis matroid gives a point and no facets.
inline std::vector<ClassifiedFacet> facets(const Matroid& m) {
  if (loops(m) != 0) throw Error(ErrorCode::kLoopsPresent, "facets need a loop-free matroid");
  if (m.bases().size() == 1) return {};
  if (!is_connected(m)) throw Error(ErrorCode::kDisconnected, "facets need a connected matroid");
  const int n = m.size();
  std::vector<ClassifiedFacet> out;
  std::set<ElementSet, LexLess> flats_seen;
  for_each_subset(m.ground(), [&](ElementSet x) {
    if (x == 0 || x == m.ground() || !m.is_flat(x)) return;
    if (!is_connected(restriction(m, x)) || !is_connected(contraction(m, x))) return;
    flats_seen.insert(x);
  });
  for (ElementSet x : flats_seen) {
    ClassifiedFacet f;
    f.kind = ClassifiedFacet::Kind::kInterior;
    f.set = x;
    f.inner_normal.assign(n, 0);
    for (int e : elements_of(x)) f.inner_normal[e] = -1;
    const int r = m.rank(x);
    for (ElementSet b : m.bases())
      if (cardinality(b & x) == r) f.vertices.push_back(b);
    out.push_back(std::move(f));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<ElementSet> avoiding;
    for (ElementSet b : m.bases())
      if (!contains(b, i)) avoiding.push_back(b);
    const ElementSet rest = m.ground() & ~singleton(i);
    if (avoiding.empty() || !is_connected(restriction(m, rest))) continue;
    ClassifiedFacet f;
    f.kind = ClassifiedFacet::Kind::kBoundary;
    f.set = singleton(i);
    f.inner_normal.assign(n, 0);
    f.inner_normal[i] = 1;
    f.vertices = std::move(avoiding);
    out.push_back(std::move(f));
  }
  return out;
}

/// Matroid whose bases are the given vertices; they must form a face of P_M.
inline Matroid face_matroid(const Matroid& m, std::vector<ElementSet> vertex_subset) {
  std::sort(vertex_subset.begin(), vertex_subset.end(), LexLess{});
  vertex_subset.erase(std::unique(vertex_subset.begin(), vertex_subset.end()), vertex_subset.end());
  if (vertex_subset.empty()) throw Error(ErrorCode::kNotAFace, "empty vertex set");
  for (ElementSet b : vertex_subset)
    if (!m.is_basis(b)) throw Error(ErrorCode::kNotAFace, label(b) + " is not a vertex of P_M");
  const RationalPolytope p = polytope(m);
  std::vector<std::size_t> wanted;
  for (ElementSet b : vertex_subset) {
    auto v = indicator_vector(m.size(), b);
    wanted.push_back(std::lower_bound(p.vertices.begin(), p.vertices.end(), v, detail::lex_less) -
                     p.vertices.begin());
  }
  std::sort(wanted.begin(), wanted.end());
  // Smallest face containing the set: intersection of the facets containing it.
  std::vector<bool> in_face(p.vertices.size(), true);
  for (const auto& f : p.facets) {
    if (!std::includes(f.vertices.begin(), f.vertices.end(), wanted.begin(), wanted.end())) continue;
    std::vector<bool> on(p.vertices.size(), false);
    for (auto v : f.vertices) on[v] = true;
    for (std::size_t i = 0; i < on.size(); ++i) in_face[i] = in_face[i] && on[i];
  }
  if (static_cast<std::size_t>(std::count(in_face.begin(), in_face.end(), true)) != wanted.size()) {
    throw Error(ErrorCode::kNotAFace, "vertex set is not a face of P_M");
  }
  return Matroid::trusted(m.size(), std::move(vertex_subset));
}

/// P_{M*} = e_[n] - P_M, comparing vertex sets. M* comes from the kernel of the realization
/// when one is attached, otherwise from basis complements.
inline bool dual_reflection_check(const Matroid& m) {
  const Matroid star = m.realization() ? from_matrix(kernel_basis(m.realization()->matrix)) : dual(m);
  const int n = m.size();
  std::set<RationalVector> reflected;
  for (ElementSet b : m.bases()) {
    RationalVector v = indicator_vector(n, b);
    for (auto& x : v) x = 1 - x;
    reflected.insert(std::move(v));
  }
  std::set<RationalVector> dual_vertices;
  for (ElementSet b : star.bases()) dual_vertices.insert(indicator_vector(n, b));
  return star.size() == n && reflected == dual_vertices;
}

}  // namespace mfk
