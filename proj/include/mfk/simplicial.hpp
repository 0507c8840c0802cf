#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "mfk/linalg.hpp"

namespace mfk {

using Simplex = std::vector<int>;  // sorted vertex indices

/// Complex given by its facets; the vertices carry caller-defined labels by index.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Drops non-maximal and duplicate generators so facets stay pairwise non-contained.
  SimplicialComplex(int vertex_count, std::vector<Simplex> generators) : vertex_count_(vertex_count) {
    for (auto& g : generators) std::sort(g.begin(), g.end());
    std::sort(generators.begin(), generators.end(),
              [](const Simplex& a, const Simplex& b) {
                return a.size() != b.size() ? a.size() > b.size() : a < b;
              });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (auto& g : generators) {
      bool covered = std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) {
        return std::includes(f.begin(), f.end(), g.begin(), g.end());
      });
      if (!covered) facets_.push_back(std::move(g));
    }
    std::sort(facets_.begin(), facets_.end());
  }

  int vertex_count() const { return vertex_count_; }
  const std::vector<Simplex>& facets() const { return facets_; }

  int dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }

  /// Nonempty faces grouped by dimension.
  std::vector<std::vector<Simplex>> faces_by_dimension() const {
    std::vector<std::set<Simplex>> levels(dimension() + 1);
    for (const auto& f : facets_) {
      const int k = static_cast<int>(f.size());
      for (unsigned mask = 1; mask < (1U << k); ++mask) {
        Simplex s;
        for (int i = 0; i < k; ++i)
          if (mask & (1U << i)) s.push_back(f[i]);
        levels[s.size() - 1].insert(std::move(s));
      }
    }
    std::vector<std::vector<Simplex>> out;
    for (auto& l : levels) out.emplace_back(l.begin(), l.end());
    return out;
  }

  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> out;
    for (const auto& l : faces_by_dimension()) out.push_back(l.size());
    return out;
  }

  bool contains_face(const Simplex& s) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) {
      return std::includes(f.begin(), f.end(), s.begin(), s.end());
    });
  }

 private:
  int vertex_count_ = 0;
  std::vector<Simplex> facets_;
};

struct ReducedHomology {
  std::vector<long> betti;  // reduced Betti numbers in dimensions 0..dim
  long euler_characteristic = 0;  // reduced: -1 + f_0 - f_1 + ...
};

/// Reduced rational homology via ranks of the augmented boundary maps.
inline ReducedHomology reduced_homology_ranks(const SimplicialComplex& complex) {
  const auto faces = complex.faces_by_dimension();
  const int top = static_cast<int>(faces.size()) - 1;
  std::vector<std::map<Simplex, std::size_t>> index(faces.size());
  for (int k = 0; k <= top; ++k)
    for (std::size_t i = 0; i < faces[k].size(); ++i) index[k][faces[k][i]] = i;

  // boundary_rank[k] = rank of d_k : C_k -> C_{k-1}; d_0 is the augmentation.
  std::vector<std::size_t> boundary_rank(top + 2, 0);
  if (top >= 0) boundary_rank[0] = faces[0].empty() ? 0 : 1;
  for (int k = 1; k <= top; ++k) {
    RationalMatrix d(faces[k - 1].size(), faces[k].size());
    for (std::size_t j = 0; j < faces[k].size(); ++j) {
      const auto& s = faces[k][j];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex t;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) t.push_back(s[i]);
        d(index[k - 1].at(t), j) = (drop % 2 == 0) ? 1 : -1;
      }
    }
    boundary_rank[k] = rank(d);
  }
  ReducedHomology out;
  out.euler_characteristic = -1;
  for (int k = 0; k <= top; ++k) {
    const long chains = static_cast<long>(faces[k].size());
    out.betti.push_back(chains - static_cast<long>(boundary_rank[k]) -
                        static_cast<long>(boundary_rank[k + 1]));
    out.euler_characteristic += (k % 2 == 0 ? 1 : -1) * chains;
  }
  return out;
}

}  // namespace mfk
