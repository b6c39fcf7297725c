#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "locdom/associated_graph.hpp"
#include "locdom/bipartite_analysis.hpp"
#include "locdom/ld_sets.hpp"
#include "locdom/verify.hpp"

// JSON report schema, version 1. Keys are emitted in insertion order so that
// identical inputs give byte-identical output.
namespace locdom::report {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline Json header(const std::string& command) {
  Json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  return j;
}

inline Json set_json(VertexSet s) { return Json(s.to_vector()); }

inline Json ld_json(const Graph& g, const LDReport& rep) {
  Json j;
  j["n"] = g.order();
  j["lambda"] = rep.lambda;
  j["witness"] = set_json(rep.witness);
  if (rep.all_codes) {
    Json codes = Json::array();
    for (VertexSet c : *rep.all_codes) codes.push_back(set_json(c));
    j["all_codes"] = std::move(codes);
  }
  return j;
}

inline Json bounded_json(const Graph& g, std::size_t kmax, const BoundedResult& res) {
  Json j;
  j["n"] = g.order();
  j["kmax"] = kmax;
  j["found"] = res.found;
  j["size"] = res.size;
  if (res.found) {
    j["lambda"] = res.size;
    j["witness"] = set_json(res.witness);
  }
  j["nodes"] = res.nodes;
  return j;
}

inline Json conditions_json(const ConditionTriple& t) {
  Json j;
  j["c1_w_twin_free"] = t.c1;
  j["c2_w_vertex_sees_all_u"] = t.c2;
  j["c3_labels_twice"] = t.c3;
  j["c3_twin_form"] = t.c3_twin_form;
  j["c3_from_associated_graph"] = t.associated_form;
  return j;
}

inline Json classification_json(const ClassificationReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["r"] = rep.r();
  j["s"] = rep.s();
  j["u"] = set_json(rep.sides.u);
  j["w"] = set_json(rep.sides.w);
  j["solved"] = rep.solved;
  if (rep.solved) {
    j["lambda_g"] = rep.lambda_g;
    j["lambda_complement"] = rep.lambda_gbar;
    j["relation"] = rep.relation;
    j["witness_g"] = set_json(rep.witness_g);
    j["witness_complement"] = set_json(rep.witness_gbar);
  }
  j["conditions"] = conditions_json(rep.conditions);
  j["predicted_plus_one"] = rep.predicted_plus_one;
  return j;
}

inline Json cactus_json(const CactusStats& st) {
  Json j;
  j["vertices"] = st.vertices;
  j["edges"] = st.edges;
  j["cc"] = st.cc;
  j["cy"] = st.cy;
  j["ex"] = st.ex;
  j["is_cactus"] = st.is_cactus;
  return j;
}

inline Json associated_json(const AssociatedGraph& ag, bool with_labels) {
  Json j;
  j["set"] = set_json(ag.set());
  j["k"] = ag.k();
  Json verts = Json::array();
  for (Vertex x : ag.vertices()) {
    Json v;
    v["vertex"] = x;
    v["trace"] = set_json(ag.trace(x));
    v["level"] = ag.level(x);
    verts.push_back(std::move(v));
  }
  j["vertices"] = std::move(verts);
  Json edges = Json::array();
  for (const LabeledEdge& e : ag.edges()) edges.push_back(Json::array({e.x, e.y, e.label}));
  j["edges"] = std::move(edges);
  j["parity_ok"] = parity_audit(ag);
  if (with_labels) {
    Json counts;
    for (auto [u, c] : label_multiplicity(ag)) counts[std::to_string(u)] = c;
    j["label_multiplicity"] = std::move(counts);
  }
  return j;
}

inline Json label_subgraph_json(const LabelSubgraph& ls) {
  Json j;
  j["labels"] = set_json(ls.selected_labels());
  Json edges = Json::array();
  for (const LabeledEdge& e : ls.edges()) edges.push_back(Json::array({e.x, e.y, e.label}));
  j["edges"] = std::move(edges);
  Json comps = Json::array();
  for (VertexSet c : ls.components()) comps.push_back(set_json(c));
  j["components"] = std::move(comps);
  j["component_traces_agree"] = component_trace_check(ls);
  j["cactus"] = cactus_json(cactus_stats(ls));
  return j;
}

inline Json suite_json(const SuiteResult& res, bool with_timing) {
  Json j;
  j["suite"] = res.name;
  j["checks"] = res.checks;
  j["violations"] = res.violations;
  j["ok"] = res.ok();
  if (with_timing) j["seconds"] = res.seconds;
  return j;
}

inline Json census_json(const CensusResult& res, bool with_entries, bool with_timing) {
  Json j;
  j["max_n"] = res.max_n;
  j["graphs"] = res.entries.size();
  j["checks"] = res.checks;
  Json counts;
  for (int rel : {-1, 0, 1}) {
    auto it = res.relation_counts.find(rel);
    counts[rel < 0 ? "-1" : rel == 0 ? "0" : "+1"] = it == res.relation_counts.end() ? 0 : it->second;
  }
  j["relation_counts"] = std::move(counts);
  j["counterexamples"] = res.counterexamples();
  if (with_entries) {
    Json entries = Json::array();
    for (const auto& e : res.entries) {
      Json row;
      row["graph6"] = e.graph6;
      row["report"] = classification_json(e.report);
      entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
  }
  if (with_timing) j["seconds"] = res.seconds;
  return j;
}

// One CSV row per census graph.
inline std::string census_csv(const CensusResult& res) {
  std::string out = "graph6,n,r,s,lambda_g,lambda_complement,relation,c1,c2,c3,c3_twin_form,predicted_plus_one\n";
  for (const auto& e : res.entries) {
    const auto& r = e.report;
    const auto& c = r.conditions;
    // graph6 bytes lie in 63..126 and never include ',' or '"'.
    out += e.graph6 + "," + std::to_string(r.n) + "," + std::to_string(r.r()) + "," + std::to_string(r.s()) + "," +
           std::to_string(r.lambda_g) + "," + std::to_string(r.lambda_gbar) + "," + std::to_string(r.relation) + "," +
           std::to_string(c.c1) + "," + std::to_string(c.c2) + "," + std::to_string(c.c3) + "," +
           std::to_string(c.c3_twin_form) + "," + std::to_string(r.predicted_plus_one) + "\n";
  }
  return out;
}

}  // namespace locdom::report
