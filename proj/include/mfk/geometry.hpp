#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mfk/error.hpp"
#include "mfk/linalg.hpp"
#include "mfk/lp.hpp"
#include "mfk/rational.hpp"

namespace mfk {

// ---------------------------------------------------------------------------
// Polytopes
// ---------------------------------------------------------------------------

/// Facet inequality normal · x >= offset. The normal is primitive and lies in the
/// direction space of the polytope's affine hull, which makes it unique.
struct Facet {
  IntegerVector normal;
  Rational offset;
  std::vector<std::size_t> vertices;  // indices into RationalPolytope::vertices

  friend bool operator==(const Facet&, const Facet&) = default;
};

struct RationalPolytope {
  int ambient = 0;
  std::vector<RationalVector> vertices;  // lexicographically sorted, irredundant
  std::vector<Facet> facets;             // sorted by vertex index list
  int dim = -1;

  friend bool operator==(const RationalPolytope&, const RationalPolytope&) = default;
};

namespace detail {

using Bits = boost::dynamic_bitset<>;

struct DdRay {
  IntegerVector a;
  Bits zeros;
};

inline Integer dot(const IntegerVector& a, const IntegerVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Extreme rays of {a : g_i · a >= 0 for all i}; g must have full column rank.
///
/// Double description with the combinatorial adjacency test. Zero sets are tracked
/// against all constraints processed so far.
inline std::vector<DdRay> double_description(const std::vector<IntegerVector>& g) {
  const std::size_t m = g.size();
  const std::size_t dim = g.front().size();

  // Greedily pick an initial basis of constraints.
  std::vector<std::size_t> start;
  {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < m && start.size() < dim; ++i) {
      rows.emplace_back(g[i].begin(), g[i].end());
      if (rank(RationalMatrix::from_rows(rows, dim)) == rows.size()) {
        start.push_back(i);
      } else {
        rows.pop_back();
      }
    }
  }
  std::vector<std::vector<Rational>> basis_rows;
  for (auto i : start) basis_rows.emplace_back(g[i].begin(), g[i].end());
  RationalMatrix gb = RationalMatrix::from_rows(basis_rows, dim);
  // Columns of gb^{-1} are the initial rays.
  RationalMatrix aug(dim, 2 * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) aug(r, c) = gb(r, c);
    aug(r, dim + r) = 1;
  }
  auto inv = row_reduce(aug).reduced;
  std::vector<DdRay> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    RationalVector col(dim);
    for (std::size_t r = 0; r < dim; ++r) col[r] = inv(r, dim + j);
    DdRay ray{primitive_integer(col), Bits(m)};
    for (std::size_t k = 0; k < dim; ++k)
      if (k != j) ray.zeros.set(start[k]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> done(m, false);
  for (auto i : start) done[i] = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (done[i]) continue;
    done[i] = true;
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = dot(g[i], rays[r].a);
      if (s[r] > 0) pos.push_back(r);
      if (s[r] < 0) neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (s[r] == 0) rays[r].zeros.set(i);
      continue;
    }
    std::vector<DdRay> next;
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntegerVector a(dim);
        for (std::size_t k = 0; k < dim; ++k) a[k] = s[p] * rays[q].a[k] - s[q] * rays[p].a[k];
        common.set(i);
        next.push_back({primitive_integer(a), std::move(common)});
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (s[r] < 0) continue;
      if (s[r] == 0) rays[r].zeros.set(i);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }
  return rays;
}

inline bool lex_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

/// Affine dimension of a finite point set (-1 for the empty set).
inline int affine_dimension(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  const std::size_t n = points.front().size();
  RationalMatrix d(points.size() - 1, n);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) d(i - 1, c) = points[i][c] - points[0][c];
  return static_cast<int>(rank(d));
}

/// Exact convex hull: irredundant vertices and every facet.
///
/// Points are projected isomorphically onto coordinates of their affine hull, homogenized,
/// and the facet cone is enumerated by double description.
inline RationalPolytope convex_hull(std::vector<RationalVector> points) {
  if (points.empty()) throw Error(ErrorCode::kDimensionMismatch, "convex hull of no points");
  const std::size_t n = points.front().size();
  for (const auto& p : points)
    if (p.size() != n) throw Error(ErrorCode::kDimensionMismatch, "points of mixed dimension");
  std::sort(points.begin(), points.end(), detail::lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());

  RationalPolytope out;
  out.ambient = static_cast<int>(n);
  if (points.size() == 1) {
    out.vertices = points;
    out.dim = 0;
    return out;
  }

  RationalMatrix diffs(points.size() - 1, n);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) diffs(i - 1, c) = points[i][c] - points[0][c];
  auto ech = row_reduce(diffs);
  const std::size_t k = ech.rank();
  out.dim = static_cast<int>(k);
  std::vector<std::size_t> keep(k);
  std::iota(keep.begin(), keep.end(), 0);
  const RationalMatrix lin = ech.reduced.select_rows(keep);  // basis of the direction space
  const auto& piv = ech.pivots;

  std::vector<IntegerVector> g;
  for (const auto& p : points) {
    RationalVector h(k + 1);
    h[0] = 1;
    for (std::size_t j = 0; j < k; ++j) h[j + 1] = p[piv[j]];
    g.push_back(primitive_integer(h));
  }
  const auto rays = detail::double_description(g);

  // A point is a vertex iff its active facets pin down a single point.
  std::vector<std::size_t> vertex_ids;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<std::vector<Rational>> active;
    for (const auto& r : rays)
      if (r.zeros.test(i)) active.emplace_back(r.a.begin() + 1, r.a.end());
    if (!active.empty() && rank(RationalMatrix::from_rows(active, k)) == k) vertex_ids.push_back(i);
  }
  std::vector<std::size_t> new_index(points.size(), SIZE_MAX);
  for (std::size_t v = 0; v < vertex_ids.size(); ++v) {
    new_index[vertex_ids[v]] = v;
    out.vertices.push_back(points[vertex_ids[v]]);
  }

  // Lift each facet functional from pivot coordinates to a normal inside the direction space.
  RationalMatrix gram(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) gram(a, b) = dot(lin.row(a), lin.row(b));
  for (const auto& r : rays) {
    RationalVector rhs(k);
    for (std::size_t j = 0; j < k; ++j) rhs[j] = r.a[j + 1];
    auto lambda = *solve(gram, rhs);
    RationalVector normal(n, Rational(0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < n; ++c) normal[c] += lambda[j] * lin(j, c);
    Facet f;
    f.normal = primitive_integer(normal);
    RationalVector as_rational(f.normal.begin(), f.normal.end());
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (r.zeros.test(i) && new_index[i] != SIZE_MAX) f.vertices.push_back(new_index[i]);
    }
    f.offset = dot(as_rational, out.vertices[f.vertices.front()]);
    out.facets.push_back(std::move(f));
  }
  std::sort(out.facets.begin(), out.facets.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  return out;
}

/// Faces of a polytope as vertex-index sets, grouped by dimension 0..dim.
struct FaceLattice {
  std::vector<std::vector<std::vector<std::size_t>>> faces;

  /// (f_0, ..., f_{dim-1}); the polytope itself is excluded.
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d + 1 < faces.size(); ++d) out.push_back(faces[d].size());
    return out;
  }
};

inline FaceLattice face_lattice(const RationalPolytope& p) {
  using Bits = detail::Bits;
  const std::size_t nv = p.vertices.size();
  std::vector<Bits> facet_bits;
  for (const auto& f : p.facets) {
    Bits b(nv);
    for (auto v : f.vertices) b.set(v);
    facet_bits.push_back(b);
  }
  std::set<Bits> seen;
  Bits whole(nv);
  whole.set();
  seen.insert(whole);
  std::vector<Bits> frontier;
  for (const auto& b : facet_bits)
    if (seen.insert(b).second) frontier.push_back(b);
  while (!frontier.empty()) {
    std::vector<Bits> next;
    for (const auto& f : frontier) {
      for (const auto& g : facet_bits) {
        Bits h = f & g;
        if (h.none() || h == f) continue;
        if (seen.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  FaceLattice out;
  out.faces.resize(p.dim + 1);
  for (const auto& b : seen) {
    std::vector<std::size_t> ids;
    std::vector<RationalVector> pts;
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
      ids.push_back(i);
      pts.push_back(p.vertices[i]);
    }
    out.faces[affine_dimension(pts)].push_back(std::move(ids));
  }
  for (auto& level : out.faces) std::sort(level.begin(), level.end());
  return out;
}

inline RationalPolytope minkowski_sum(const RationalPolytope& a, const RationalPolytope& b) {
  if (a.ambient != b.ambient) {
    throw Error(ErrorCode::kDimensionMismatch, "Minkowski sum of polytopes in R^" +
                                                   std::to_string(a.ambient) + " and R^" +
                                                   std::to_string(b.ambient));
  }
  std::vector<RationalVector> sums;
  for (const auto& u : a.vertices) {
    for (const auto& v : b.vertices) {
      RationalVector w(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
      sums.push_back(std::move(w));
    }
  }
  return convex_hull(std::move(sums));
}

/// Vertices of `p` minimizing the linear functional u.
inline std::vector<std::size_t> minimizing_face(const RationalPolytope& p, const RationalVector& u) {
  std::vector<std::size_t> out;
  Rational best;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Rational val = dot(u, p.vertices[i]);
    if (out.empty() || val < best) {
      out.assign(1, i);
      best = val;
    } else if (val == best) {
      out.push_back(i);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integer lattices
// ---------------------------------------------------------------------------

using IntegerMatrix = Matrix<Integer>;

/// Invariant factors d_1 | d_2 | ... (positive; zero rows/columns dropped).
inline std::vector<Integer> smith_normal_form(IntegerMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<Integer> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a(r, c) != 0 && (pr == rows || abs(a(r, c)) < abs(a(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) return out;
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(t, c), a(pr, c));
      for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, t), a(r, pc));
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        Integer q = a(r, t) / a(t, t);
        if (q != 0)
          for (std::size_t c = t; c < cols; ++c) a(r, c) -= q * a(t, c);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        Integer q = a(t, c) / a(t, t);
        if (q != 0)
          for (std::size_t r = t; r < rows; ++r) a(r, c) -= q * a(r, t);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility by folding an offending row into the pivot row.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols && divides; ++c)
          if (a(r, c) % a(t, t) != 0) {
            for (std::size_t cc = t; cc < cols; ++cc) a(t, cc) += a(r, cc);
            divides = false;
          }
      if (divides) break;
    }
    out.push_back(abs(a(t, t)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cones and fans in N = Z^n / Z·(1,...,1)
// ---------------------------------------------------------------------------

/// Canonical representative of a class in Z^n / Z·e_[n]: minimum coordinate 0.
class QuotientVector {
 public:
  QuotientVector() = default;

  static QuotientVector canonical(std::vector<long> v) {
    if (!v.empty()) {
      const long lo = *std::min_element(v.begin(), v.end());
      for (auto& x : v) x -= lo;
    }
    QuotientVector q;
    q.rep_ = std::move(v);
    return q;
  }

  /// Canonical and primitive (coordinate gcd 1), as used for ray generators.
  static QuotientVector ray(std::vector<long> v) {
    QuotientVector q = canonical(std::move(v));
    long g = 0;
    for (auto x : q.rep_) g = std::gcd(g, x);
    if (g > 1)
      for (auto& x : q.rep_) x /= g;
    return q;
  }

  /// e_X for a subset given as a mask.
  static QuotientVector indicator(int n, std::uint64_t subset) {
    std::vector<long> v(n, 0);
    for (int i = 0; i < n; ++i)
      if ((subset >> i) & 1U) v[i] = 1;
    return ray(std::move(v));
  }

  const std::vector<long>& rep() const { return rep_; }
  std::size_t size() const { return rep_.size(); }
  bool is_zero() const {
    return std::all_of(rep_.begin(), rep_.end(), [](long x) { return x == 0; });
  }

  RationalVector to_rational() const { return RationalVector(rep_.begin(), rep_.end()); }

  friend auto operator<=>(const QuotientVector&, const QuotientVector&) = default;

 private:
  std::vector<long> rep_;
};

/// Generator matrix with the rays as columns followed by the lineality column e_[n].
inline RationalMatrix quotient_generator_matrix(int n, const std::vector<QuotientVector>& rays) {
  RationalMatrix m(n, rays.size() + 1);
  for (std::size_t j = 0; j < rays.size(); ++j)
    for (int i = 0; i < n; ++i) m(i, j) = rays[j].rep()[i];
  for (int i = 0; i < n; ++i) m(i, rays.size()) = 1;
  return m;
}

struct Cone {
  std::vector<QuotientVector> rays;
  bool simplicial = true;  // rays linearly independent modulo e_[n]
};

inline Cone make_cone(int n, std::vector<QuotientVector> rays) {
  Cone c;
  c.simplicial = rank(quotient_generator_matrix(n, rays)) == rays.size() + 1;
  c.rays = std::move(rays);
  return c;
}

/// Exact membership: v = Σ λ_i r_i + t·e_[n] with λ >= 0, t free.
inline bool cone_contains(int n, const std::vector<QuotientVector>& rays, const RationalVector& v) {
  RationalMatrix a(n, rays.size() + 2);
  for (std::size_t j = 0; j < rays.size(); ++j)
    for (int i = 0; i < n; ++i) a(i, j) = rays[j].rep()[i];
  for (int i = 0; i < n; ++i) {
    a(i, rays.size()) = 1;
    a(i, rays.size() + 1) = -1;
  }
  return nonnegative_solution(a, v).has_value();
}

inline bool cone_contains(const Cone& c, const QuotientVector& v) {
  return cone_contains(static_cast<int>(v.size()), c.rays, v.to_rational());
}

inline bool cone_subset(int n, const std::vector<QuotientVector>& inner,
                        const std::vector<QuotientVector>& outer) {
  return std::all_of(inner.begin(), inner.end(),
                     [&](const QuotientVector& r) { return cone_contains(n, outer, r.to_rational()); });
}

inline bool cone_subset(const Cone& c1, const Cone& c2) {
  if (c1.rays.empty()) return true;
  return cone_subset(static_cast<int>(c1.rays.front().size()), c1.rays, c2.rays);
}

/// Invariant factors of the lattice spanned by the rays together with e_[n].
inline std::vector<Integer> cone_invariant_factors(int n, const std::vector<QuotientVector>& rays) {
  IntegerMatrix m(rays.size() + 1, n);
  for (std::size_t j = 0; j < rays.size(); ++j)
    for (int i = 0; i < n; ++i) m(j, i) = rays[j].rep()[i];
  for (int i = 0; i < n; ++i) m(rays.size(), i) = 1;
  return smith_normal_form(std::move(m));
}

inline bool is_unimodular(int n, const std::vector<QuotientVector>& rays) {
  auto f = cone_invariant_factors(n, rays);
  return std::all_of(f.begin(), f.end(), [](const Integer& z) { return z == 1; });
}

/// Fan stored by its maximal cones over a shared, sorted ray list.
struct Fan {
  int n = 0;
  std::vector<QuotientVector> rays;
  std::vector<std::vector<int>> maximal_cones;  // sorted ray indices, sorted list

  std::vector<QuotientVector> cone_rays(std::size_t i) const {
    std::vector<QuotientVector> out;
    for (int r : maximal_cones[i]) out.push_back(rays[r]);
    return out;
  }
  Cone cone(std::size_t i) const { return make_cone(n, cone_rays(i)); }

  friend bool operator==(const Fan&, const Fan&) = default;
};

/// Builds a fan from cones given by explicit generators; zero generators are dropped.
inline Fan make_fan(int n, const std::vector<std::vector<QuotientVector>>& cones) {
  std::set<QuotientVector> all;
  for (const auto& c : cones)
    for (const auto& r : c)
      if (!r.is_zero()) all.insert(r);
  Fan f;
  f.n = n;
  f.rays.assign(all.begin(), all.end());
  std::set<std::vector<int>> seen;
  for (const auto& c : cones) {
    std::vector<int> ids;
    for (const auto& r : c) {
      if (r.is_zero()) continue;
      ids.push_back(static_cast<int>(std::lower_bound(f.rays.begin(), f.rays.end(), r) - f.rays.begin()));
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    seen.insert(std::move(ids));
  }
  f.maximal_cones.assign(seen.begin(), seen.end());
  return f;
}

/// Membership oracle for the support of a fan; simplicial cones use a precomputed inverse.
class FanMembership {
 public:
  explicit FanMembership(const Fan& fan) : n_(fan.n) {
    for (std::size_t c = 0; c < fan.maximal_cones.size(); ++c) {
      Entry e;
      e.rays = fan.cone_rays(c);
      RationalMatrix gen = quotient_generator_matrix(fan.n, e.rays);
      auto ech = row_reduce(gen.transpose());
      if (ech.rank() == gen.cols()) {
        // Independent rows of gen give a square system with a unique solution.
        std::vector<std::size_t> rows(ech.pivots.begin(), ech.pivots.end());
        RationalMatrix square = gen.select_rows(rows);
        RationalMatrix aug(square.rows(), 2 * square.rows());
        for (std::size_t r = 0; r < square.rows(); ++r) {
          for (std::size_t k = 0; k < square.cols(); ++k) aug(r, k) = square(r, k);
          aug(r, square.rows() + r) = 1;
        }
        auto red = row_reduce(aug).reduced;
        e.inverse = RationalMatrix(square.rows(), square.rows());
        for (std::size_t r = 0; r < square.rows(); ++r)
          for (std::size_t k = 0; k < square.rows(); ++k) e.inverse(r, k) = red(r, square.rows() + k);
        e.rows = std::move(rows);
        e.generators = std::move(gen);
        e.simplicial = true;
      }
      entries_.push_back(std::move(e));
    }
  }

  bool cone_contains(std::size_t c, const RationalVector& v) const {
    const Entry& e = entries_[c];
    if (!e.simplicial) return mfk::cone_contains(n_, e.rays, v);
    const std::size_t k = e.rows.size();
    RationalVector x(k, Rational(0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t j = 0; j < k; ++j) x[r] += e.inverse(r, j) * v[e.rows[j]];
      if (r + 1 < k && x[r] < 0) return false;
    }
    for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < k; ++j) s += e.generators(i, j) * x[j];
      if (s != v[i]) return false;
    }
    return true;
  }

  /// Index of some maximal cone containing v.
  std::optional<std::size_t> locate(const RationalVector& v) const {
    for (std::size_t c = 0; c < entries_.size(); ++c)
      if (cone_contains(c, v)) return c;
    return std::nullopt;
  }

  bool contains(const RationalVector& v) const { return locate(v).has_value(); }

 private:
  struct Entry {
    std::vector<QuotientVector> rays;
    bool simplicial = false;
    std::vector<std::size_t> rows;
    RationalMatrix inverse;
    RationalMatrix generators;
  };
  int n_;
  std::vector<Entry> entries_;
};

/// Calls fn(v) for every class of the integer grid {-radius..radius}^n modulo e_[n].
template <typename Fn>
void for_each_grid_class(int n, int radius, Fn&& fn) {
  std::set<std::vector<long>> seen;
  std::vector<long> v(n, -radius);
  while (true) {
    auto q = QuotientVector::canonical(v);
    if (seen.insert(q.rep()).second) fn(q);
    int i = 0;
    while (i < n && v[i] == radius) v[i++] = -radius;
    if (i == n) break;
    ++v[i];
  }
}

/// Checks that pairwise intersections of simplicial maximal cones are common faces.
/// Returns a witness pair on failure. Non-simplicial cones are skipped.
inline std::optional<std::pair<std::size_t, std::size_t>> fan_intersection_witness(const Fan& fan) {
  for (std::size_t a = 0; a < fan.maximal_cones.size(); ++a) {
    for (std::size_t b = a + 1; b < fan.maximal_cones.size(); ++b) {
      const auto& ca = fan.maximal_cones[a];
      const auto& cb = fan.maximal_cones[b];
      if (!fan.cone(a).simplicial || !fan.cone(b).simplicial) continue;
      std::vector<int> only_a, only_b;
      std::set_difference(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(only_a));
      std::set_difference(cb.begin(), cb.end(), ca.begin(), ca.end(), std::back_inserter(only_b));
      // A common point using a private generator with positive weight breaks the face condition.
      const std::size_t cols = ca.size() + cb.size() + 2;
      RationalMatrix m(fan.n + 1, cols);
      RationalVector rhs(fan.n + 1, Rational(0));
      std::size_t col = 0;
      for (int r : ca) {
        for (int i = 0; i < fan.n; ++i) m(i, col) = fan.rays[r].rep()[i];
        if (std::binary_search(only_a.begin(), only_a.end(), r)) m(fan.n, col) = 1;
        ++col;
      }
      for (int r : cb) {
        for (int i = 0; i < fan.n; ++i) m(i, col) = -fan.rays[r].rep()[i];
        if (std::binary_search(only_b.begin(), only_b.end(), r)) m(fan.n, col) = 1;
        ++col;
      }
      for (int i = 0; i < fan.n; ++i) {
        m(i, col) = 1;
        m(i, col + 1) = -1;
      }
      rhs[fan.n] = 1;
      if (nonnegative_solution(m, rhs)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

struct FanComparison {
  bool refines_ab = false;  // every cone of A inside a cone of B, equal supports
  bool refines_ba = false;
  bool equal = false;
  std::string witness;  // first failure, human readable
};

namespace detail {

inline std::string ray_string(const QuotientVector& q) {
  std::string s = "(";
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + std::to_string(q.rep()[i]);
  return s + ")";
}

inline std::optional<std::string> refinement_failure(const Fan& a, const Fan& b, int grid_radius) {
  FanMembership in_b(b);
  for (std::size_t c = 0; c < a.maximal_cones.size(); ++c) {
    auto rays = a.cone_rays(c);
    // Some single cone of B must hold all generators of this cone of A.
    RationalVector barycenter(a.n, Rational(0));
    for (const auto& r : rays)
      for (int i = 0; i < a.n; ++i) barycenter[i] += r.rep()[i];
    bool found = false;
    for (std::size_t d = 0; d < b.maximal_cones.size() && !found; ++d) {
      if (!in_b.cone_contains(d, barycenter)) continue;
      found = std::all_of(rays.begin(), rays.end(),
                          [&](const QuotientVector& r) { return in_b.cone_contains(d, r.to_rational()); });
    }
    if (!found && rays.empty()) found = true;
    if (!found) {
      std::string s = "cone {";
      for (const auto& r : rays) s += ray_string(r);
      return s + "} lies in no single cone";
    }
  }
  FanMembership in_a(a);
  for (const auto& r : b.rays)
    if (!in_a.contains(r.to_rational())) return "ray " + ray_string(r) + " outside the refining fan";
  std::optional<std::string> failure;
  if (grid_radius > 0) {
    for_each_grid_class(a.n, grid_radius, [&](const QuotientVector& q) {
      if (failure) return;
      auto v = q.to_rational();
      if (in_b.contains(v) != in_a.contains(v)) failure = "supports differ at " + ray_string(q);
    });
  }
  return failure;
}

}  // namespace detail

/// A refines B: every maximal cone of A sits in a cone of B, and the supports agree
/// (rays of B lie in |A|; both supports agree on the integer grid of the given radius).
inline bool refines(const Fan& a, const Fan& b, int grid_radius = 2) {
  return !detail::refinement_failure(a, b, grid_radius).has_value();
}

inline FanComparison compare_fans(const Fan& a, const Fan& b, int grid_radius = 2) {
  FanComparison out;
  auto ab = detail::refinement_failure(a, b, grid_radius);
  auto ba = detail::refinement_failure(b, a, grid_radius);
  out.refines_ab = !ab;
  out.refines_ba = !ba;
  out.equal = out.refines_ab && out.refines_ba;
  if (ab) out.witness = "A->B: " + *ab;
  else if (ba) out.witness = "B->A: " + *ba;
  return out;
}

}  // namespace mfk
