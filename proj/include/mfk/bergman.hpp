#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "mfk/geometry.hpp"
#include "mfk/lattice.hpp"
#include "mfk/polytope.hpp"

namespace mfk {

/// kOuterNormal: Be(M) sits in the outer normal fan of P_M, w is tested through the chain
/// of -w and the rays are e_X. kInitialIdeal: w is tested through its own chain (weights of
/// an initial ideal containing no monomial), which negates every ray.
enum class Convention { kOuterNormal, kInitialIdeal };

inline WeightVector negated(WeightVector w) {
  for (auto& x : w) x = -x;
  return w;
}

inline bool bergman_membership(const Matroid& m, const WeightVector& w,
                               Convention convention = Convention::kOuterNormal) {
  if (loops(m) != 0) throw Error(ErrorCode::kLoopsPresent, "Bergman fan needs a loop-free matroid");
  const auto chain = constancy_chain(convention == Convention::kOuterNormal ? negated(w) : w);
  return chain_of_flats(m, chain);
}

struct CoarseCone {
  std::vector<std::size_t> fine;        // indices into BergmanFan::fine_cones
  std::vector<QuotientVector> rays;     // irredundant generators, sorted
  std::vector<ElementSet> bases;        // bases of the degeneration shared by the group
};

struct BergmanFan {
  int n = 0;
  Convention convention = Convention::kOuterNormal;
  std::vector<std::vector<ElementSet>> fine_cones;  // maximal chains of proper nonempty flats
  std::vector<CoarseCone> coarse_cones;
  bool convex = true;  // every group passed the convexity diagnostic

  QuotientVector ray_of(ElementSet flat) const {
    std::vector<long> v(n, 0);
    for (int e : elements_of(flat)) v[e] = convention == Convention::kOuterNormal ? 1 : -1;
    return QuotientVector::ray(std::move(v));
  }

  Fan fine_fan() const {
    std::vector<std::vector<QuotientVector>> cones;
    for (const auto& chain : fine_cones) {
      std::vector<QuotientVector> rays;
      for (ElementSet f : chain) rays.push_back(ray_of(f));
      cones.push_back(std::move(rays));
    }
    return make_fan(n, cones);
  }

  Fan coarse_fan() const {
    std::vector<std::vector<QuotientVector>> cones;
    for (const auto& c : coarse_cones) cones.push_back(c.rays);
    return make_fan(n, cones);
  }

  /// Distinct coarse rays in sorted order.
  std::vector<QuotientVector> rays() const { return coarse_fan().rays; }
};

namespace detail {

inline std::vector<QuotientVector> irredundant(int n, std::vector<QuotientVector> rays) {
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      std::vector<QuotientVector> others;
      for (std::size_t j = 0; j < rays.size(); ++j)
        if (j != i) others.push_back(rays[j]);
      if (cone_contains(n, others, rays[i].to_rational())) {
        rays = std::move(others);
        changed = true;
        break;
      }
    }
  }
  return rays;
}

}  // namespace detail

/// Fine flag cones grouped into coarse cones by the bases of their degeneration.
/// Disconnected loop-free matroids are accepted; their cones then contain lines.
inline BergmanFan bergman_fan(const Matroid& m, Convention convention = Convention::kOuterNormal) {
  if (loops(m) != 0) throw Error(ErrorCode::kLoopsPresent, "Bergman fan needs a loop-free matroid");
  const FlatLattice lattice(m);
  BergmanFan fan;
  fan.n = m.size();
  fan.convention = convention;
  for (const auto& chain : lattice.maximal_chains()) {
    std::vector<ElementSet> proper;
    for (std::size_t k = 1; k + 1 < chain.size(); ++k) proper.push_back(lattice.flat(chain[k]));
    fan.fine_cones.push_back(std::move(proper));
  }

  const int n = m.size();
  std::map<std::vector<ElementSet>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < fan.fine_cones.size(); ++i) {
    WeightVector w(n, Rational(0));
    for (ElementSet f : fan.fine_cones[i])
      for (int e : elements_of(f)) w[e] += 1;
    groups[degeneration(m, negated(w)).matroid_u.bases()].push_back(i);
  }

  for (auto& [bases, members] : groups) {
    CoarseCone c;
    c.fine = members;
    c.bases = bases;
    std::vector<QuotientVector> all;
    for (auto i : members)
      for (ElementSet f : fan.fine_cones[i]) all.push_back(fan.ray_of(f));
    c.rays = detail::irredundant(n, std::move(all));

    // Pairwise sums and the barycenter must stay inside the union of the group's flag cones.
    Fan pieces;
    pieces.n = n;
    {
      std::vector<std::vector<QuotientVector>> cones;
      for (auto i : members) {
        std::vector<QuotientVector> rays;
        for (ElementSet f : fan.fine_cones[i]) rays.push_back(fan.ray_of(f));
        cones.push_back(std::move(rays));
      }
      pieces = make_fan(n, cones);
    }
    FanMembership inside(pieces);
    std::vector<RationalVector> probes;
    RationalVector bary(n, Rational(0));
    for (std::size_t a = 0; a < c.rays.size(); ++a) {
      for (int e = 0; e < n; ++e) bary[e] += c.rays[a].rep()[e];
      for (std::size_t b = a + 1; b < c.rays.size(); ++b) {
        RationalVector s(n);
        for (int e = 0; e < n; ++e) s[e] = c.rays[a].rep()[e] + c.rays[b].rep()[e];
        probes.push_back(std::move(s));
      }
    }
    probes.push_back(bary);
    for (const auto& p : probes)
      if (!inside.contains(p)) fan.convex = false;
    // The barycenter is interior to the coarse cone, so it must see the same degeneration.
    const WeightVector probe = convention == Convention::kOuterNormal ? negated(bary) : bary;
    if (degeneration(m, probe).matroid_u.bases() != bases) fan.convex = false;
    fan.coarse_cones.push_back(std::move(c));
  }
  std::sort(fan.coarse_cones.begin(), fan.coarse_cones.end(),
            [](const CoarseCone& a, const CoarseCone& b) { return a.rays < b.rays; });
  return fan;
}

/// Reduced Betti numbers of the order complex of the proper part of L(M).
inline ReducedHomology bergman_complex_homology(const Matroid& m) {
  const FlatLattice lattice(m);
  return reduced_homology_ranks(order_complex(lattice, lattice.bottom(), lattice.top()).complex);
}

}  // namespace mfk
