// Command-line front end: one job per invocation, JSON out.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <unistd.h>

#include "mfk/mfk.hpp"

namespace {

constexpr int kUsageExit = 2;
constexpr int kModuleExit = 1;

struct Sources {
  std::string matrix, bases, graph, corpus;
  std::vector<int> uniform;
};

void add_sources(CLI::App* cmd, Sources& s) {
  cmd->add_option("--matrix", s.matrix, "JSON file with matrix rows (integers or \"p/q\")");
  cmd->add_option("--bases", s.bases, "JSON file {\"n\":..,\"bases\":[[..],..]} with 1-based elements");
  cmd->add_option("--uniform", s.uniform, "uniform matroid U_{d,n}")->expected(2)->type_name("D N");
  cmd->add_option("--graph", s.graph, "JSON file {\"vertices\":k,\"edges\":[[u,v],..]}");
  cmd->add_option("--corpus", s.corpus, "built-in example name (see: corpus list)");
}

void resolve_sources(const Sources& s, mfk::JobSpec& job) {
  int given = 0;
  if (!s.matrix.empty()) { ++given; job.input = mfk::InputKind::kMatrix; job.path_or_name = s.matrix; }
  if (!s.bases.empty()) { ++given; job.input = mfk::InputKind::kBases; job.path_or_name = s.bases; }
  if (!s.graph.empty()) { ++given; job.input = mfk::InputKind::kGraph; job.path_or_name = s.graph; }
  if (!s.corpus.empty()) { ++given; job.input = mfk::InputKind::kCorpus; job.path_or_name = s.corpus; }
  if (!s.uniform.empty()) {
    ++given;
    job.input = mfk::InputKind::kUniform;
    job.uniform_d = s.uniform[0];
    job.uniform_n = s.uniform[1];
  }
  if (given != 1) throw mfk::Error(mfk::ErrorCode::kUsage, "exactly one input source is required");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  // Write beside the target and rename so readers never see a partial file.
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw mfk::Error(mfk::ErrorCode::kParseError, "cannot write " + tmp);
    out << text;
    if (!out.flush()) throw mfk::Error(mfk::ErrorCode::kParseError, "write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

int fail(const mfk::Error& e) {
  std::cerr << mfk::io::error_json(e).dump() << "\n";
  return e.code() == mfk::ErrorCode::kUsage ? kUsageExit : kModuleExit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroids, Bergman fans and nested-set fans"};
  app.require_subcommand(1);

  mfk::JobSpec job;
  Sources sources;
  std::string weights;
  std::string convention = "outer";

  struct Sub {
    CLI::App* cmd;
    std::vector<mfk::Computation> computations;
  };
  std::vector<Sub> subs;
  auto make = [&](const char* name, const char* help, std::vector<mfk::Computation> cs) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_sources(cmd, sources);
    cmd->add_option("--output,-o", job.output, "write JSON here instead of standard output");
    subs.push_back({cmd, std::move(cs)});
    return cmd;
  };

  make("matroid", "bases, loops, circuits, components", {mfk::Computation::kMatroid});
  make("lattice", "lattice of flats with Möbius values", {mfk::Computation::kLattice});
  make("polytope", "matroid polytope, facets and f-vector", {mfk::Computation::kPolytope});
  make("facets", "classified facets of the matroid polytope", {mfk::Computation::kFacets});
  auto* degenerate = make("degenerate", "degeneration along a weight vector", {mfk::Computation::kDegenerate});
  degenerate->add_option("--u", job.weights, "comma separated weights, e.g. \"1,0,0,0\"")->required();
  auto* bergman = make("bergman", "fine and coarse Bergman fan", {mfk::Computation::kBergman});
  bergman->add_option("--grid", job.grid_radius, "radius of the membership grid for the support test");
  bergman->add_option("--convention", convention, "outer | initial")->check(CLI::IsMember({"outer", "initial"}));
  auto* nested = make("nested", "nested-set fan of a building set", {mfk::Computation::kNested});
  nested->add_option("--building", job.building, "min | max | JSON file of 1-based flats");
  auto* compare = make("compare-fans", "nested-set fan against the Bergman fan", {mfk::Computation::kCompareFans});
  compare->add_option("--building", job.building, "min | max | JSON file of 1-based flats");
  compare->add_option("--grid", job.grid_radius, "radius of the support grid (default 2)");
  make("circuits", "reciprocal-plane circuit generators", {mfk::Computation::kCircuits});
  auto* amoeba = make("amoeba", "sampled amoeba against the Bergman support", {mfk::Computation::kAmoeba});
  amoeba->add_option("--t", job.amoeba_t, "logarithm base, > 1");
  amoeba->add_option("--count", job.amoeba_count, "number of sample points");
  amoeba->add_option("--seed", job.seed, "random seed");

  auto* compute = make("compute", "run any combination of computations", {});
  std::vector<std::pair<const char*, mfk::Computation>> flags = {
      {"--matroid", mfk::Computation::kMatroid},   {"--lattice", mfk::Computation::kLattice},
      {"--polytope", mfk::Computation::kPolytope}, {"--facets", mfk::Computation::kFacets},
      {"--bergman", mfk::Computation::kBergman},   {"--nested", mfk::Computation::kNested},
      {"--compare", mfk::Computation::kCompareFans}, {"--circuits", mfk::Computation::kCircuits},
      {"--amoeba", mfk::Computation::kAmoeba}};
  std::vector<std::unique_ptr<bool>> flag_storage;
  for (auto& [name, c] : flags) {
    flag_storage.push_back(std::make_unique<bool>(false));
    compute->add_flag(name, *flag_storage.back());
  }
  compute->add_option("--u", job.weights, "weights for a degeneration");
  compute->add_option("--grid", job.grid_radius, "membership grid radius");
  compute->add_option("--building", job.building, "min | max | JSON file");
  compute->add_option("--t", job.amoeba_t, "amoeba base");
  compute->add_option("--count", job.amoeba_count, "amoeba sample count");
  compute->add_option("--seed", job.seed, "random seed");
  compute->add_option("--convention", convention, "outer | initial")->check(CLI::IsMember({"outer", "initial"}));

  auto* corpus_cmd = app.add_subcommand("corpus", "built-in examples");
  auto* corpus_list = corpus_cmd->add_subcommand("list", "list corpus names");
  corpus_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  try {
    if (corpus_list->parsed()) {
      write_output("", mfk::io::json(mfk::corpus_names()).dump(2) + "\n");
      return 0;
    }
    for (const auto& sub : subs) {
      if (!sub.cmd->parsed()) continue;
      resolve_sources(sources, job);
      job.computations.insert(sub.computations.begin(), sub.computations.end());
      if (sub.cmd == compute) {
        for (std::size_t i = 0; i < flags.size(); ++i)
          if (*flag_storage[i]) job.computations.insert(flags[i].second);
        if (!job.weights.empty()) job.computations.insert(mfk::Computation::kDegenerate);
      }
      job.convention = convention == "initial" ? mfk::Convention::kInitialIdeal : mfk::Convention::kOuterNormal;
      const auto result = mfk::run(job);
      write_output(job.output, result.dump(2) + "\n");
      return 0;
    }
  } catch (const mfk::Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    std::cerr << mfk::io::json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return kModuleExit;
  }
  return kUsageExit;
}
