#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mfk/corpus.hpp"
#include "mfk/io.hpp"

namespace mfk {

enum class InputKind { kNone, kMatrix, kBases, kUniform, kGraph, kCorpus };

enum class Computation {
  kMatroid,
  kLattice,
  kPolytope,
  kFacets,
  kDegenerate,
  kBergman,
  kNested,
  kCompareFans,
  kCircuits,
  kAmoeba,
};

struct JobSpec {
  InputKind input = InputKind::kNone;
  std::string path_or_name;  // file path or corpus name
  int uniform_d = 0;
  int uniform_n = 0;
  std::set<Computation> computations;
  std::string output;  // empty: standard output
  int grid_radius = 0;
  Convention convention = Convention::kOuterNormal;
  std::string building = "min";  // "min", "max" or a JSON file with 1-based flats
  std::string weights;           // comma separated rationals for degenerate
  double amoeba_t = 1000.0;
  std::size_t amoeba_count = 500;
  std::uint64_t seed = 0;
};

namespace detail {

inline io::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  try {
    return io::json::parse(in);
  } catch (const io::json::exception& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

inline WeightVector parse_weights(const std::string& text, int n) {
  WeightVector u;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorCode::kParseError, "empty weight entry in '" + text + "'");
    u.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (static_cast<int>(u.size()) != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "weight vector has " + std::to_string(u.size()) + " entries, expected " + std::to_string(n));
  }
  return u;
}

}  // namespace detail

inline Matroid load_input(const JobSpec& job) {
  try {
    switch (job.input) {
      case InputKind::kMatrix: return from_matrix(io::matrix_from(detail::read_json_file(job.path_or_name)));
      case InputKind::kBases: return io::matroid_from(detail::read_json_file(job.path_or_name));
      case InputKind::kUniform: return realized_uniform(job.uniform_d, job.uniform_n);
      case InputKind::kGraph: return io::graph_from(detail::read_json_file(job.path_or_name));
      case InputKind::kCorpus: return corpus(job.path_or_name);
      case InputKind::kNone: break;
    }
  } catch (const io::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  throw Error(ErrorCode::kUsage, "no input source");
}

inline BuildingSet load_building(const JobSpec& job, const FlatLattice& lattice) {
  if (job.building == "min") return min_building(lattice);
  if (job.building == "max") return max_building(lattice);
  const auto j = detail::read_json_file(job.building);
  return make_building_set(lattice, io::sets_from(j, lattice.matroid().size()));
}

/// Runs every requested computation; the result object has one key per computation.
inline io::json run(const JobSpec& job) {
  if (job.computations.empty()) throw Error(ErrorCode::kUsage, "no computation requested");
  const Matroid m = load_input(job);
  io::json out = io::json::object();
  auto wants = [&](Computation c) { return job.computations.count(c) > 0; };

  if (wants(Computation::kMatroid)) {
    io::json j = io::to_json(m);
    j["loops"] = io::set_json(loops(m));
    j["circuits"] = io::sets_json(circuits(m));
    j["components"] = io::sets_json(components(m).blocks);
    j["connected"] = is_connected(m);
    j["simple"] = is_simple(m);
    out["matroid"] = j;
  }
  if (wants(Computation::kLattice)) out["lattice"] = io::to_json(FlatLattice(m));
  if (wants(Computation::kPolytope)) {
    io::json j = io::to_json(polytope(m));
    j["dual_reflection"] = dual_reflection_check(m);
    out["polytope"] = j;
  }
  if (wants(Computation::kFacets)) out["facets"] = io::to_json(facets(m));
  if (wants(Computation::kDegenerate)) {
    out["degeneration"] = io::to_json(degeneration(m, detail::parse_weights(job.weights, m.size())));
  }
  if (wants(Computation::kBergman)) {
    const BergmanFan fan = bergman_fan(m, job.convention);
    io::json j = io::to_json(fan);
    if (job.grid_radius > 0) {
      FanMembership coarse(fan.coarse_fan());
      std::size_t points = 0, agree = 0;
      for_each_grid_class(m.size(), job.grid_radius, [&](const QuotientVector& q) {
        const auto w = q.to_rational();
        ++points;
        if (bergman_membership(m, w, job.convention) == coarse.contains(w)) ++agree;
      });
      j["support_check"] = {{"radius", job.grid_radius}, {"points", points}, {"agree", agree == points}};
    }
    out["bergman"] = j;
  }
  if (wants(Computation::kNested) || wants(Computation::kCompareFans)) {
    const FlatLattice lattice(m);
    const BuildingSet g = load_building(job, lattice);
    const NestedFan nf = nested_fan(m, g);
    if (wants(Computation::kNested)) {
      io::json j = io::to_json(nf);
      j["building_set"] = io::to_json(g);
      out["nested_fan"] = j;
    }
    if (wants(Computation::kCompareFans)) {
      const Fan be = bergman_fan(m).coarse_fan();
      io::json j = io::to_json(compare_fans(nf.fan, be, job.grid_radius > 0 ? job.grid_radius : 2));
      const auto cond = fans_equal_condition(m);
      j["equality_condition"] = cond.holds;
      if (cond.witness) j["condition_witness"] = {io::set_json(cond.witness->first), io::set_json(cond.witness->second)};
      j["rays_a"] = nf.fan.rays.size();
      j["rays_b"] = be.rays.size();
      out["comparison"] = j;
    }
  }
  if (wants(Computation::kCircuits)) {
    if (!m.realization()) throw Error(ErrorCode::kParameterOutOfRange, "circuit polynomials need a realization");
    const auto gens = reciprocal_generators(*m.realization());
    io::json counts = io::json::object();
    std::set<int> degrees;
    for (const auto& g : gens) degrees.insert(g.degree());
    for (int d : degrees) counts[std::to_string(d)] = minimal_generator_count(gens, d);
    out["circuits"] = {{"generators", io::to_json(gens)}, {"minimal_generator_count", counts}};
  }
  if (wants(Computation::kAmoeba)) {
    if (!m.realization()) throw Error(ErrorCode::kParameterOutOfRange, "amoeba sampling needs a realization");
    const auto sample = amoeba_sample(*m.realization(), job.amoeba_t, job.amoeba_count, job.seed);
    io::json j = io::to_json(sample, support_deviation(sample, bergman_fan(m)));
    j["seed"] = job.seed;
    out["amoeba"] = j;
  }
  return out;
}

}  // namespace mfk
