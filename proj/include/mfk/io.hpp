#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "mfk/amoeba.hpp"
#include "mfk/bergman.hpp"
#include "mfk/lattice.hpp"
#include "mfk/nested.hpp"
#include "mfk/polytope.hpp"
#include "mfk/reciprocal.hpp"

namespace mfk::io {

using json = nlohmann::json;

// Exact numbers are JSON integers when they fit, otherwise "p/q" strings.

inline json number(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

inline json number(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return to_string(z);
}

inline Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::kParseError, "expected an integer or a \"p/q\" string, got " + j.dump());
}

inline Integer integer_from(const json& j) {
  Rational q = rational_from(j);
  if (q.get_den() != 1) throw Error(ErrorCode::kParseError, "expected an integer, got " + j.dump());
  return q.get_num();
}

inline json set_json(ElementSet s) { return to_one_based(s); }

inline ElementSet set_from(const json& j, int n) {
  if (!j.is_array()) throw Error(ErrorCode::kParseError, "expected a list of elements, got " + j.dump());
  ElementSet s = 0;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw Error(ErrorCode::kParseError, "element must be an integer: " + e.dump());
    const long long v = e.get<long long>();
    if (v < 1 || v > n) throw Error(ErrorCode::kParameterOutOfRange, "element " + std::to_string(v) + " outside 1.." + std::to_string(n));
    s |= singleton(static_cast<int>(v - 1));
  }
  return s;
}

inline json sets_json(const std::vector<ElementSet>& sets) {
  json out = json::array();
  for (ElementSet s : sets) out.push_back(set_json(s));
  return out;
}

inline std::vector<ElementSet> sets_from(const json& j, int n) {
  std::vector<ElementSet> out;
  for (const auto& s : j) out.push_back(set_from(s, n));
  return out;
}

inline json matrix_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(number(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

/// Accepts a bare list of rows or {"matrix": rows}; cols gives the width of an empty matrix.
inline RationalMatrix matrix_from(const json& j, std::size_t cols = 0) {
  const json& rows = j.is_object() ? j.at("matrix") : j;
  if (!rows.is_array()) throw Error(ErrorCode::kParseError, "matrix must be a list of rows");
  if (!rows.empty()) cols = rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != cols) throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from(rows[r][c]);
  }
  return m;
}

inline json vector_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(number(q));
  return out;
}

inline RationalVector vector_from(const json& j) {
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from(x));
  return v;
}

// --- matroids -------------------------------------------------------------

inline json to_json(const Matroid& m) {
  json j = {{"n", m.size()}, {"rank", m.rank()}, {"bases", sets_json(m.bases())}};
  if (m.realization()) j["realization"] = matrix_json(m.realization()->matrix);
  return j;
}

inline Matroid matroid_from(const json& j) {
  const int n = j.at("n").get<int>();
  check_ground_size(n);
  Matroid m = Matroid::from_bases(n, sets_from(j.at("bases"), n));
  if (j.contains("realization")) {
    RationalMatrix r = matrix_from(j.at("realization"), n);
    if (static_cast<int>(r.cols()) != n) throw Error(ErrorCode::kDimensionMismatch, "realization width differs from n");
    m = m.with_realization({std::move(r)});
  }
  return m;
}

/// {"vertices": k, "edges": [[u, v], ...]} with 1-based vertices.
inline Matroid graph_from(const json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::kParseError, "edge must be a pair: " + e.dump());
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return from_graph(j.at("vertices").get<int>(), edges);
}

inline json to_json(const FlatLattice& lattice) {
  json covers = json::array();
  for (auto [a, b] : lattice.covering_pairs()) covers.push_back({a, b});
  json ranks = json::array(), mobius = json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    ranks.push_back(lattice.rank_of(i));
    mobius.push_back(lattice.mobius(i));
  }
  return {{"matroid", to_json(lattice.matroid())},
          {"flats", sets_json(lattice.flats())},
          {"ranks", ranks},
          {"covers", covers},
          {"mobius", mobius},
          {"mu_top", lattice.mu_top()}};
}

/// Rebuilds from the embedded matroid and checks the stored flats agree.
inline FlatLattice lattice_from(const json& j) {
  FlatLattice lattice(matroid_from(j.at("matroid")));
  if (sets_from(j.at("flats"), lattice.matroid().size()) != lattice.flats()) {
    throw Error(ErrorCode::kParseError, "stored flats disagree with the matroid");
  }
  return lattice;
}

// --- geometry -------------------------------------------------------------

inline json to_json(const RationalPolytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices) verts.push_back(vector_json(v));
  json facets_j = json::array();
  for (const auto& f : p.facets) {
    json normal = json::array();
    for (const auto& z : f.normal) normal.push_back(number(z));
    facets_j.push_back({{"normal", normal}, {"offset", number(f.offset)}, {"vertices", f.vertices}});
  }
  json fv = face_lattice(p).f_vector();
  return {{"ambient", p.ambient}, {"dim", p.dim}, {"vertices", verts}, {"facets", facets_j}, {"f_vector", fv}};
}

inline RationalPolytope polytope_from(const json& j) {
  RationalPolytope p;
  p.ambient = j.at("ambient").get<int>();
  p.dim = j.at("dim").get<int>();
  for (const auto& v : j.at("vertices")) p.vertices.push_back(vector_from(v));
  for (const auto& f : j.at("facets")) {
    Facet facet;
    for (const auto& z : f.at("normal")) facet.normal.push_back(integer_from(z));
    facet.offset = rational_from(f.at("offset"));
    facet.vertices = f.at("vertices").get<std::vector<std::size_t>>();
    p.facets.push_back(std::move(facet));
  }
  return p;
}

inline json to_json(const QuotientVector& q) { return q.rep(); }

inline json to_json(const Fan& f) {
  json rays = json::array();
  for (const auto& r : f.rays) rays.push_back(to_json(r));
  return {{"n", f.n}, {"rays", rays}, {"cones", f.maximal_cones}};
}

inline Fan fan_from(const json& j) {
  Fan f;
  f.n = j.at("n").get<int>();
  for (const auto& r : j.at("rays")) f.rays.push_back(QuotientVector::canonical(r.get<std::vector<long>>()));
  f.maximal_cones = j.at("cones").get<std::vector<std::vector<int>>>();
  return f;
}

inline json to_json(const FanComparison& c) {
  return {{"equal", c.equal}, {"refines_ab", c.refines_ab}, {"refines_ba", c.refines_ba}, {"witness", c.witness}};
}

// --- polytope module ------------------------------------------------------

inline json to_json(const Degeneration& d) {
  return {{"chain", sets_json(d.chain.sets)}, {"matroid_u", to_json(d.matroid_u)}, {"loop_free", d.loop_free}};
}

inline Degeneration degeneration_from(const json& j) {
  Degeneration d;
  d.matroid_u = matroid_from(j.at("matroid_u"));
  d.chain.sets = sets_from(j.at("chain"), d.matroid_u.size());
  d.loop_free = j.at("loop_free").get<bool>();
  return d;
}

inline json to_json(const std::vector<ClassifiedFacet>& fs) {
  json out = json::array();
  for (const auto& f : fs) {
    out.push_back({{"kind", f.kind == ClassifiedFacet::Kind::kInterior ? "interior" : "boundary"},
                   {"set", set_json(f.set)},
                   {"inner_normal", f.inner_normal},
                   {"vertices", sets_json(f.vertices)}});
  }
  return out;
}

inline std::vector<ClassifiedFacet> facets_from(const json& j, int n) {
  std::vector<ClassifiedFacet> out;
  for (const auto& f : j) {
    ClassifiedFacet c;
    const auto kind = f.at("kind").get<std::string>();
    if (kind != "interior" && kind != "boundary") throw Error(ErrorCode::kParseError, "unknown facet kind " + kind);
    c.kind = kind == "interior" ? ClassifiedFacet::Kind::kInterior : ClassifiedFacet::Kind::kBoundary;
    c.set = set_from(f.at("set"), n);
    c.inner_normal = f.at("inner_normal").get<std::vector<long>>();
    c.vertices = sets_from(f.at("vertices"), n);
    out.push_back(std::move(c));
  }
  return out;
}

// --- Bergman --------------------------------------------------------------

inline json to_json(const BergmanFan& b) {
  json fine = json::array();
  for (const auto& chain : b.fine_cones) fine.push_back(sets_json(chain));
  json coarse = json::array();
  for (const auto& c : b.coarse_cones) {
    json rays = json::array();
    for (const auto& r : c.rays) rays.push_back(to_json(r));
    coarse.push_back({{"fine", c.fine}, {"rays", rays}, {"bases", sets_json(c.bases)}});
  }
  json rays = json::array();
  for (const auto& r : b.rays()) rays.push_back(to_json(r));
  return {{"n", b.n},
          {"convention", b.convention == Convention::kOuterNormal ? "outer_normal" : "initial_ideal"},
          {"fine_cones", fine},
          {"coarse_cones", coarse},
          {"rays", rays},
          {"convex", b.convex}};
}

inline BergmanFan bergman_from(const json& j) {
  BergmanFan b;
  b.n = j.at("n").get<int>();
  const auto conv = j.at("convention").get<std::string>();
  if (conv != "outer_normal" && conv != "initial_ideal") throw Error(ErrorCode::kParseError, "unknown convention " + conv);
  b.convention = conv == "outer_normal" ? Convention::kOuterNormal : Convention::kInitialIdeal;
  for (const auto& chain : j.at("fine_cones")) b.fine_cones.push_back(sets_from(chain, b.n));
  for (const auto& c : j.at("coarse_cones")) {
    CoarseCone cc;
    cc.fine = c.at("fine").get<std::vector<std::size_t>>();
    for (const auto& r : c.at("rays")) cc.rays.push_back(QuotientVector::canonical(r.get<std::vector<long>>()));
    cc.bases = sets_from(c.at("bases"), b.n);
    b.coarse_cones.push_back(std::move(cc));
  }
  b.convex = j.at("convex").get<bool>();
  return b;
}

// --- nested ---------------------------------------------------------------

inline json to_json(const NestedFan& nf) {
  json j = to_json(nf.fan);
  json labels = json::array();
  for (const auto& s : nf.nested_sets) labels.push_back(sets_json(s));
  j["nested_sets"] = labels;
  j["unimodular"] = nf.unimodular;
  return j;
}

inline NestedFan nested_fan_from(const json& j) {
  NestedFan nf;
  nf.fan = fan_from(j);
  for (const auto& s : j.at("nested_sets")) nf.nested_sets.push_back(sets_from(s, nf.fan.n));
  nf.unimodular = j.at("unimodular").get<bool>();
  return nf;
}

inline json to_json(const BuildingSet& g) { return sets_json(g.members); }

// --- reciprocal plane -----------------------------------------------------

inline json to_json(const std::vector<CircuitPolynomial>& gens) {
  json out = json::array();
  for (const auto& g : gens) {
    json coeffs = json::array();
    for (const auto& z : g.coefficients) coeffs.push_back(number(z));
    json terms = json::array();
    for (const auto& [mono, c] : g.terms()) terms.push_back({{"monomial", set_json(mono)}, {"coefficient", number(c)}});
    out.push_back({{"circuit", set_json(g.circuit)}, {"coefficients", coeffs}, {"terms", terms}});
  }
  return out;
}

inline std::vector<CircuitPolynomial> circuits_from(const json& j, int n) {
  std::vector<CircuitPolynomial> out;
  for (const auto& g : j) {
    CircuitPolynomial c;
    c.circuit = set_from(g.at("circuit"), n);
    for (const auto& z : g.at("coefficients")) c.coefficients.push_back(integer_from(z));
    if (static_cast<int>(c.coefficients.size()) != cardinality(c.circuit)) {
      throw Error(ErrorCode::kDimensionMismatch, "coefficient count differs from circuit size");
    }
    out.push_back(std::move(c));
  }
  return out;
}

// --- amoeba ---------------------------------------------------------------

inline json to_json(const AmoebaSample& s, const DeviationReport& r) {
  return {{"t", s.t}, {"count", s.points.size()}, {"max_deviation", r.max}, {"median_deviation", r.median},
          {"points", s.points}, {"distances", r.distances}};
}

// --- errors ---------------------------------------------------------------

inline json error_json(const Error& e) { return {{"error", to_string(e.code())}, {"message", e.what()}}; }

}  // namespace mfk::io
