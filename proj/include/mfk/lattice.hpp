#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "mfk/matroid.hpp"
#include "mfk/simplicial.hpp"

namespace mfk {

/// The geometric lattice L(M) of flats, indexed rank-then-lexicographically.
///
/// Index 0 is the bottom flat cl(∅) (the loops) and the last index is the ground set.
/// Möbius values μ(0̂, X) are computed eagerly, so a constructed lattice is immutable.
class FlatLattice {
 public:
  FlatLattice() = default;

  explicit FlatLattice(Matroid m) : matroid_(std::move(m)) {
    std::vector<std::vector<ElementSet>> levels(matroid_.rank() + 1);
    levels[0].push_back(matroid_.closure(0));
    for (int p = 0; p < matroid_.rank(); ++p) {
      std::set<ElementSet, LexLess> next;
      for (ElementSet f : levels[p]) {
        for (int e : elements_of(matroid_.ground() & ~f)) next.insert(matroid_.closure(f | singleton(e)));
      }
      levels[p + 1].assign(next.begin(), next.end());
    }
    for (int p = 0; p <= matroid_.rank(); ++p) {
      level_start_.push_back(flats_.size());
      for (ElementSet f : levels[p]) {
        index_[f] = flats_.size();
        flats_.push_back(f);
        rank_.push_back(p);
      }
    }
    level_start_.push_back(flats_.size());
    up_.resize(flats_.size());
    down_.resize(flats_.size());
    for (std::size_t i = 0; i < flats_.size(); ++i) {
      std::set<std::size_t> covers;
      for (int e : elements_of(matroid_.ground() & ~flats_[i])) {
        covers.insert(index_.at(matroid_.closure(flats_[i] | singleton(e))));
      }
      up_[i].assign(covers.begin(), covers.end());
      for (auto j : covers) down_[j].push_back(i);
    }
    mobius_.assign(flats_.size(), 0);
    mobius_[0] = 1;
    for (std::size_t i = 1; i < flats_.size(); ++i) {
      long sum = 0;
      for (std::size_t j = 0; j < level_start_[rank_[i]]; ++j)
        if (is_subset(flats_[j], flats_[i])) sum += mobius_[j];
      mobius_[i] = -sum;
    }
  }

  const Matroid& matroid() const { return matroid_; }
  std::size_t size() const { return flats_.size(); }
  int height() const { return matroid_.rank(); }

  ElementSet flat(std::size_t i) const { return flats_[i]; }
  const std::vector<ElementSet>& flats() const { return flats_; }
  int rank_of(std::size_t i) const { return rank_[i]; }

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return flats_.size() - 1; }

  /// Flats of rank p.
  std::vector<ElementSet> level(int p) const {
    return {flats_.begin() + level_start_[p], flats_.begin() + level_start_[p + 1]};
  }

  std::optional<std::size_t> index_of(ElementSet f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<std::size_t>& covers_of(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& covered_by(std::size_t i) const { return down_[i]; }

  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < up_.size(); ++i)
      for (auto j : up_[i]) out.emplace_back(i, j);
    return out;
  }

  bool leq(std::size_t a, std::size_t b) const { return is_subset(flats_[a], flats_[b]); }

  std::size_t join(std::size_t a, std::size_t b) const {
    return index_.at(matroid_.closure(flats_[a] | flats_[b]));
  }
  std::size_t meet(std::size_t a, std::size_t b) const { return index_.at(flats_[a] & flats_[b]); }

  /// Closure of a union of flats, as a flat index.
  std::size_t join_all(const std::vector<std::size_t>& xs) const {
    ElementSet u = 0;
    for (auto x : xs) u |= flats_[x];
    return index_.at(matroid_.closure(u));
  }

  /// Indices of flats in [lower, upper].
  std::vector<std::size_t> interval(std::size_t lower, std::size_t upper) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < flats_.size(); ++i)
      if (leq(lower, i) && leq(i, upper)) out.push_back(i);
    return out;
  }

  /// μ(0̂, X).
  long mobius(std::size_t i) const { return mobius_[i]; }

  /// (-1)^d μ(0̂, ⊤).
  long mu_top() const { return (height() % 2 == 0 ? 1 : -1) * mobius_.back(); }

  /// All maximal chains 0̂ = X_0 < X_1 < ... < X_d = ⊤, as index lists.
  std::vector<std::vector<std::size_t>> maximal_chains() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> path{bottom()};
    auto walk = [&](auto&& self, std::size_t at) -> void {
      if (at == top()) {
        out.push_back(path);
        return;
      }
      for (auto next : up_[at]) {
        path.push_back(next);
        self(self, next);
        path.pop_back();
      }
    };
    walk(walk, bottom());
    return out;
  }

 private:
  Matroid matroid_;
  std::vector<ElementSet> flats_;
  std::vector<int> rank_;
  std::vector<std::size_t> level_start_;
  std::unordered_map<ElementSet, std::size_t> index_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<long> mobius_;
};

inline FlatLattice flats(const Matroid& m) { return FlatLattice(m); }

struct MoebiusTable {
  std::vector<long> values;  // μ(0̂, X) by flat index
  long mu_top = 0;
};

inline MoebiusTable moebius(const FlatLattice& lattice) {
  if (lattice.flat(lattice.bottom()) != 0) {
    throw Error(ErrorCode::kLoopsPresent, "Möbius invariant needs a loop-free matroid");
  }
  MoebiusTable t;
  for (std::size_t i = 0; i < lattice.size(); ++i) t.values.push_back(lattice.mobius(i));
  t.mu_top = lattice.mu_top();
  return t;
}

inline MoebiusTable moebius(const Matroid& m) { return moebius(FlatLattice(m)); }

/// Flats X of positive rank with M|X connected (G_min).
inline std::vector<ElementSet> irreducible_flats(const FlatLattice& lattice) {
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (lattice.rank_of(i) == 0) continue;
    if (is_connected(restriction(lattice.matroid(), lattice.flat(i)))) out.push_back(lattice.flat(i));
  }
  return out;
}

/// Order complex of the open interval (lower, upper); vertices are numbered in lattice order.
struct OrderComplex {
  std::vector<std::size_t> vertex_flats;  // lattice index of each vertex
  SimplicialComplex complex;
};

inline OrderComplex order_complex(const FlatLattice& lattice, std::size_t lower, std::size_t upper) {
  if (!lattice.leq(lower, upper) || lower == upper) {
    throw Error(ErrorCode::kEmptyInterval, "order complex needs lower < upper");
  }
  OrderComplex out;
  std::map<std::size_t, int> vertex;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (i != lower && i != upper && lattice.leq(lower, i) && lattice.leq(i, upper)) {
      vertex[i] = static_cast<int>(out.vertex_flats.size());
      out.vertex_flats.push_back(i);
    }
  }
  // Maximal chains of the open interval are the saturated chains lower < ... < upper.
  std::vector<Simplex> chains;
  Simplex path;
  auto walk = [&](auto&& self, std::size_t at) -> void {
    for (auto next : lattice.covers_of(at)) {
      if (!lattice.leq(next, upper)) continue;
      if (next == upper) {
        chains.push_back(path);
        continue;
      }
      path.push_back(vertex.at(next));
      self(self, next);
      path.pop_back();
    }
  };
  walk(walk, lower);
  std::erase_if(chains, [](const Simplex& s) { return s.empty(); });
  out.complex = SimplicialComplex(static_cast<int>(out.vertex_flats.size()), std::move(chains));
  return out;
}

/// Is the join map ∏ [0̂, Y_i] -> [0̂, X] an order isomorphism?
inline bool interval_product_check(const FlatLattice& lattice, std::size_t x,
                                   const std::vector<std::size_t>& factors) {
  const auto target = lattice.interval(lattice.bottom(), x);
  std::vector<std::vector<std::size_t>> pieces;
  std::size_t product = 1;
  for (auto y : factors) {
    if (!lattice.leq(y, x)) return false;
    pieces.push_back(lattice.interval(lattice.bottom(), y));
    product *= pieces.back().size();
    if (product > target.size()) return false;
  }
  if (product != target.size()) return false;

  std::vector<std::vector<std::size_t>> tuples{{}};
  for (const auto& p : pieces) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : tuples)
      for (auto z : p) {
        next.push_back(t);
        next.back().push_back(z);
      }
    tuples = std::move(next);
  }
  std::vector<std::size_t> image;
  image.reserve(tuples.size());
  for (const auto& t : tuples) image.push_back(t.empty() ? lattice.bottom() : lattice.join_all(t));
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

  for (std::size_t a = 0; a < tuples.size(); ++a) {
    for (std::size_t b = 0; b < tuples.size(); ++b) {
      bool componentwise = true;
      for (std::size_t k = 0; k < tuples[a].size() && componentwise; ++k)
        componentwise = lattice.leq(tuples[a][k], tuples[b][k]);
      if (componentwise != lattice.leq(image[a], image[b])) return false;
    }
  }
  return true;
}

}  // namespace mfk
