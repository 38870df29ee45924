#pragma once

// JSON encodings. Rationals are strings "p/q" (or "p"), points are arrays
// of such strings; every list is emitted in a fixed order so output is
// byte-for-byte reproducible.

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "halfint/error.hpp"
#include "halfint/flows.hpp"
#include "halfint/graph.hpp"
#include "halfint/rational.hpp"
#include "halfint/skeleton.hpp"
#include "halfint/xi.hpp"
#include "halfint/zonotope.hpp"

namespace halfint::io {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw UsageError("rational must be a string \"p/q\" or an integer");
}

inline json to_json(const RatPoint& p) {
  json arr = json::array();
  for (const auto& c : p) arr.push_back(c.str());
  return arr;
}

inline RatPoint point_from_json(const json& j) {
  if (!j.is_array()) throw UsageError("point must be an array");
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return RatPoint(std::move(coords));
}

inline json to_json(const Integer& z) { return z.get_str(); }

inline std::size_t read_size(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw UsageError(std::string("missing or invalid field '") + key + "'");
  }
  return j.at(key).get<std::size_t>();
}

// Graph: {"n": int, "labels": [string], "edges": [[i, j]]}

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.vertex_count()}, {"labels", g.labels()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  const std::size_t n = read_size(j, "n");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != n) throw UsageError("label count does not match n");
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  std::vector<Edge> edges;
  if (!j.contains("edges") || !j.at("edges").is_array()) throw UsageError("missing field 'edges'");
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw UsageError("edge must be a pair [i, j]");
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return Graph(std::move(labels), std::move(edges));
}

// PointSet: {"dim": int, "points": [[...]]}

inline json to_json(const PointSet& ps) {
  json pts = json::array();
  for (const auto& p : ps.points()) pts.push_back(to_json(p));
  return json{{"dim", ps.dim()}, {"points", pts}};
}

inline PointSet point_set_from_json(const json& j) {
  const std::size_t dim = read_size(j, "dim");
  std::vector<RatPoint> pts;
  for (const auto& p : j.at("points")) pts.push_back(point_from_json(p));
  return PointSet(dim, std::move(pts));
}

// GeneratorSet: {"dim": int, "generators": [[...]]}

inline json to_json(const zono::GeneratorSet& gs) {
  json gens = json::array();
  for (const auto& g : gs.generators()) gens.push_back(to_json(g));
  return json{{"dim", gs.dim()}, {"generators", gens}};
}

inline zono::GeneratorSet generator_set_from_json(const json& j) {
  const std::size_t dim = read_size(j, "dim");
  if (!j.contains("generators") || !j.at("generators").is_array()) {
    throw UsageError("missing field 'generators'");
  }
  std::vector<RatPoint> gens;
  for (const auto& g : j.at("generators")) gens.push_back(point_from_json(g));
  return zono::canonicalize(dim, std::move(gens));
}

inline json to_json(const CutReport& c) {
  return json{{"subset", c.subset},
              {"boundary_size", c.boundary_size},
              {"subset_size", c.subset_size},
              {"ratio", c.ratio.str()}};
}

inline json to_json(const zono::BudgetVerdict& v) {
  json viol = json::array();
  for (const auto& x : v.violations) viol.push_back({{"coordinate", x.coordinate}, {"reason", x.reason}});
  return json{{"pass", v.pass}, {"violations", viol}};
}

inline json components_json(const zono::ComponentSummary& s) {
  json comps = json::array();
  for (const std::size_t k : s.cycle_lengths) comps.push_back({{"cycle", k}});
  if (s.path_edges > 0) comps.push_back({{"path", s.path_edges}});
  return comps;
}

inline json to_json(const zono::Decomposition& dec) {
  json witnesses = json::array();
  for (const auto& w : dec.witnesses) {
    json targets = json::array();
    for (const auto& [a, b] : w.target_edges) targets.push_back({a, b});
    witnesses.push_back({{"members", w.members}, {"lambda", w.lambda}, {"target_edges", targets}});
  }
  json coeffs = json::array();
  for (const auto& c : dec.circuit_coefficients) {
    json row = json::array();
    for (const auto& x : c) row.push_back(x.str());
    coeffs.push_back(row);
  }
  json g = to_json(dec.graph);
  g["components"] = components_json(zono::summarize(dec));
  return json{{"circuit_blocks", dec.circuit_blocks},
              {"circuit_coefficients", coeffs},
              {"independent_block", dec.independent_block},
              {"block_supports", dec.block_supports},
              {"graph", g},
              {"edge_of_generator", dec.edge_of_generator},
              {"affine_witness", witnesses}};
}

inline json to_json(const flow::CongestionReport& r, const Graph& g) {
  json j{{"max_arc_flow", r.max_arc_flow.str()}, {"n", r.n}, {"congestion", r.congestion.str()}};
  if (g.arc_count() > 0) {
    j["argmax_arc"] = {g.label(r.argmax_arc.first), g.label(r.argmax_arc.second)};
  }
  return j;
}

// Routing (export only):
// {"graph": ..., "demands": [{"s": i, "t": j, "paths": [{"vertices": [...], "weight": "p/q"}]}]}
inline json to_json(const flow::Routing& r) {
  json demands = json::array();
  for (const auto& d : r.demands) {
    json paths = json::array();
    for (const auto& p : d.paths) paths.push_back({{"vertices", p.vertices}, {"weight", p.weight.str()}});
    demands.push_back({{"s", d.source}, {"t", d.target}, {"paths", paths}});
  }
  return json{{"graph", to_json(r.graph)}, {"demands", demands}};
}

inline json to_json(const xi::CutSummary& s) {
  return json{{"d", s.d},
              {"subset_size", to_json(s.subset_size)},
              {"subset_size_face_centers_only", to_json(s.center_only_size)},
              {"subset_size_note",
               "subset_size counts every vertex with coordinate sum <= (d-1)/2; "
               "subset_size_face_centers_only omits the integral vertices of that side"},
              {"boundary_size", to_json(s.boundary_size)},
              {"ratio", s.ratio.str()},
              {"ratio_sq_times_2pow_d_over_d_sq", s.scaled_ratio_sq.str()},
              {"ratio_below_d_over_sqrt2_pow_d", s.below_target},
              {"central_binomial_bound_holds", s.central_binomial_bound_holds},
              {"typeset_central_binomial_bound_holds", s.typeset_central_binomial_bound_holds}};
}

}  // namespace halfint::io
