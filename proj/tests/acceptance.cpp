// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mfk/mfk.hpp"

using namespace mfk;

namespace {

// Pinned tolerances and time limits.
constexpr double kPolytopeSeconds = 1.0;
constexpr double kComparisonSeconds = 30.0;
constexpr double kGrobSeconds = 60.0;
constexpr double kAmoebaSeconds = 5.0;
constexpr double kAmoebaMaxDeviation = 0.15;
constexpr std::uint64_t kAmoebaSeed = 7;
constexpr std::uint64_t kGrobSeed = 11;
constexpr int kGridRadius = 2;

ElementSet set_of(std::initializer_list<int> one_based) {
  ElementSet s = 0;
  for (int e : one_based) s |= singleton(e - 1);
  return s;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s (%.3fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

std::string vec_string(const std::vector<std::size_t>& v) {
  std::vector<std::string> parts;
  for (auto x : v) parts.push_back(std::to_string(x));
  return "(" + join(parts) + ")";
}

}  // namespace

int main() {
  const Matroid del = corpus("delA3");
  const Matroid u24 = corpus("u24");

  report(1, "delA3 polytope f-vector (8,18,17,7) under 1 s", [&] {
    const auto t = std::chrono::steady_clock::now();
    const auto f = face_lattice(polytope(del)).f_vector();
    const double secs = seconds_since(t);
    const bool ok = f == std::vector<std::size_t>{8, 18, 17, 7} && secs < kPolytopeSeconds;
    return Outcome{ok, "f=" + vec_string(f)};
  });

  report(2, "delA3 facet classification", [&] {
    std::vector<std::string> interior;
    std::vector<ClassifiedFacet> boundary;
    for (const auto& f : facets(del)) {
      if (f.kind == ClassifiedFacet::Kind::kInterior) interior.push_back(label(f.set));
      else boundary.push_back(f);
    }
    std::sort(interior.begin(), interior.end());
    const std::vector<std::string> want{"124", "135", "2", "3", "4", "5"};
    const std::vector<ElementSet> want_vertices{set_of({2, 3, 4}), set_of({2, 3, 5}), set_of({2, 4, 5}),
                                                set_of({3, 4, 5})};
    const bool ok = interior == want && boundary.size() == 1 && boundary[0].vertices == want_vertices;
    return Outcome{ok, "interior " + join(interior) + "; boundary " + std::to_string(boundary.size())};
  });

  report(3, "U24 Bergman fan rays", [&] {
    std::vector<std::vector<long>> rays;
    for (const auto& r : bergman_fan(u24, Convention::kInitialIdeal).rays()) rays.push_back(r.rep());
    std::sort(rays.begin(), rays.end());
    const std::vector<std::vector<long>> want{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}};
    return Outcome{rays == want, std::to_string(rays.size()) + " rays"};
  });

  report(4, "delA3 G_min and the extra nested fan ray", [&] {
    const auto g = min_building(FlatLattice(del));
    std::vector<std::string> labels;
    for (ElementSet x : g.members) labels.push_back(label(x));
    const bool gmin_ok = labels == std::vector<std::string>{"1", "2", "3", "4", "5", "124", "135", "12345"};
    const auto nf = nested_fan(del, g).fan;
    auto be = bergman_fan(del).rays();
    std::vector<QuotientVector> extra;
    std::set_difference(nf.rays.begin(), nf.rays.end(), be.begin(), be.end(), std::back_inserter(extra));
    const bool rays_ok = nf.rays.size() == be.size() + 1 && extra.size() == 1 &&
                         extra[0] == QuotientVector::indicator(5, set_of({1}));
    return Outcome{gmin_ok && rays_ok, "G_min " + join(labels) + "; rays " + std::to_string(nf.rays.size()) +
                                           " vs " + std::to_string(be.size())};
  });

  report(5, "equality condition vs mutual refinement under 30 s", [&] {
    const auto t = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, Matroid>> cases;
    for (int n = 1; n <= 6; ++n)
      for (int d = 1; d <= n; ++d) cases.emplace_back("U" + std::to_string(d) + std::to_string(n), uniform(d, n));
    cases.emplace_back("braidK4", corpus("braidK4"));
    cases.emplace_back("delA3", del);
    std::string bad;
    for (const auto& [name, m] : cases) {
      const auto cond = fans_equal_condition(m);
      const bool expected = name != "delA3";
      const auto cmp = compare_fans(nested_fan(m, min_building(FlatLattice(m))).fan, bergman_fan(m).coarse_fan(),
                                    kGridRadius);
      if (cond.holds != expected || cmp.equal != cond.holds) bad += " " + name;
      if (name == "delA3" &&
          (!cond.witness || cond.witness->first != set_of({1}) || cond.witness->second != del.ground()))
        bad += " delA3-witness";
    }
    const double secs = seconds_since(t);
    return Outcome{bad.empty() && secs < kComparisonSeconds,
                   std::to_string(cases.size()) + " matroids" + (bad.empty() ? "" : "; mismatches:" + bad)};
  });

  report(6, "nested fan of G_min refines the Bergman fan (n <= 6)", [&] {
    std::string bad;
    std::size_t count = 0;
    for (const auto& [name, m] : corpus_upto(6)) {
      if (loops(m) != 0) continue;
      ++count;
      const auto nf = nested_fan(m, min_building(FlatLattice(m))).fan;
      if (!refines(nf, bergman_fan(m).coarse_fan(), kGridRadius)) bad += " " + name;
    }
    return Outcome{bad.empty(), std::to_string(count) + " matroids" + (bad.empty() ? "" : "; failed:" + bad)};
  });

  report(7, "nested fans are unimodular", [&] {
    std::string bad;
    std::size_t cones = 0;
    for (const auto& [name, m] : corpus_upto(6)) {
      const FlatLattice l(m);
      std::vector<BuildingSet> gs{min_building(l), max_building(l)};
      if (m.size() <= 5 && max_building(l).members.size() - min_building(l).members.size() <= kMaxOptionalFlats)
        gs = building_sets_between(l);
      for (const auto& g : gs) {
        const auto nf = nested_fan(m, g);
        for (std::size_t c = 0; c < nf.fan.maximal_cones.size(); ++c) {
          ++cones;
          for (const auto& z : cone_invariant_factors(m.size(), nf.fan.cone_rays(c)))
            if (z != 1) bad += " " + name;
        }
      }
    }
    return Outcome{bad.empty(), std::to_string(cones) + " cones" + (bad.empty() ? "" : "; failed:" + bad)};
  });

  report(8, "initial subspaces realize degenerations under 60 s", [&] {
    const auto t = std::chrono::steady_clock::now();
    std::size_t checked = 0, bad = 0;
    const auto r4 = *u24.realization();
    std::vector<long> u(4, -3);
    while (true) {
      ++checked;
      if (!check_initial_degeneration(r4, WeightVector(u.begin(), u.end()))) ++bad;
      int i = 0;
      while (i < 4 && u[i] == 3) u[i++] = -3;
      if (i == 4) break;
      ++u[i];
    }
    std::mt19937_64 rng(kGrobSeed);
    std::uniform_int_distribution<long> entry(-3, 3);
    const auto r5 = *del.realization();
    for (int s = 0; s < 500; ++s) {
      WeightVector w;
      for (int i = 0; i < 5; ++i) w.emplace_back(entry(rng));
      ++checked;
      if (!check_initial_degeneration(r5, w)) ++bad;
    }
    const double secs = seconds_since(t);
    return Outcome{bad == 0 && secs < kGrobSeconds,
                   std::to_string(checked) + " weights, " + std::to_string(bad) + " mismatches"};
  });

  report(9, "Moebius values and Bergman complex homology", [&] {
    const long mu_u24 = FlatLattice(u24).mu_top(), mu_del = FlatLattice(del).mu_top();
    bool ok = mu_u24 == 3 && mu_del == 4;
    std::string detail = "mu(U24)=" + std::to_string(mu_u24) + " mu(delA3)=" + std::to_string(mu_del);
    for (const auto& [name, m] : corpus_upto(6)) {
      if (loops(m) != 0 || m.rank() < 2) continue;
      const auto h = bergman_complex_homology(m);
      const long mu = FlatLattice(m).mu_top();
      for (int k = 0; k < static_cast<int>(h.betti.size()); ++k)
        if (h.betti[k] != (k == m.rank() - 2 ? mu : 0)) {
          ok = false;
          detail += "; " + name + " dim " + std::to_string(k);
        }
    }
    return Outcome{ok, detail};
  });

  report(10, "U25 circuit quadrics", [&] {
    const auto gens = reciprocal_generators(*realized_uniform(2, 5).realization());
    const auto count = minimal_generator_count(gens, 2);
    return Outcome{gens.size() == 10 && count == 6,
                   std::to_string(gens.size()) + " generators, " + std::to_string(count) + " needed"};
  });

  report(11, "Boolean maximal nested sets for G_max", [&] {
    std::string detail;
    bool ok = true;
    for (int n : {3, 4}) {
      const FlatLattice l(boolean_matroid(n));
      const auto count = nested_complex(l, max_building(l)).maximal_sets().size();
      const std::size_t want = n == 3 ? 6 : 24;
      ok = ok && count == want;
      detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " + std::to_string(count);
    }
    return Outcome{ok, detail};
  });

  report(12, "dual polytope is the reflected polytope", [&] {
    std::string bad;
    auto all = corpus_upto(6);
    all.emplace_back("braidK5", corpus("braidK5"));
    for (const auto& [name, m] : all)
      if (!dual_reflection_check(m)) bad += " " + name;
    return Outcome{bad.empty(), std::to_string(all.size()) + " matroids" + (bad.empty() ? "" : "; failed:" + bad)};
  });

  report(13, "amoeba of U23 approaches the Bergman fan under 5 s", [&] {
    const auto t = std::chrono::steady_clock::now();
    const Matroid u23 = corpus("u23");
    const auto fan = bergman_fan(u23);
    const auto low = support_deviation(amoeba_sample(*u23.realization(), 1e3, 500, kAmoebaSeed), fan);
    const auto high = support_deviation(amoeba_sample(*u23.realization(), 1e6, 500, kAmoebaSeed), fan);
    const double secs = seconds_since(t);
    std::ostringstream detail;
    detail << "max " << low.max << ", median " << low.median << " -> " << high.median;
    return Outcome{low.max < kAmoebaMaxDeviation && high.median <= low.median && secs < kAmoebaSeconds,
                   detail.str()};
  });

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
