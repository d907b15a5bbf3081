#pragma once

#include <string>

#include "cyclesmith/cyclefinder.hpp"
#include "cyclesmith/hypothesis.hpp"
#include "cyclesmith/longpath.hpp"
#include "cyclesmith/motif.hpp"
#include "cyclesmith/verify.hpp"
#include "json.hpp"

namespace cyclesmith {

using ordered_json = nlohmann::ordered_json;

inline ordered_json motif_to_json(const ClawWitness& w) {
  return ordered_json{{"type", "claw"},
                      {"center", w.center},
                      {"leaves", {w.leaves[0], w.leaves[1], w.leaves[2]}}};
}

inline ordered_json motif_to_json(const ModifiedClawWitness& w) {
  return ordered_json{{"type", "modified-claw"},
                      {"attachment", w.attachment},
                      {"triangle", {w.triangle[0], w.triangle[1]}},
                      {"pendant", w.pendant}};
}

inline ordered_json violation_to_json(const Violation& v) {
  ordered_json j;
  j["kind"] = violation_kind_name(v.kind);
  if (v.pair) j["vertices"] = {v.pair->first, v.pair->second};
  if (v.degrees) j["degrees"] = {v.degrees->first, v.degrees->second};
  if (v.common_neighbor_count) j["commonNeighborCount"] = *v.common_neighbor_count;
  if (v.claw) j["motif"] = motif_to_json(*v.claw);
  if (v.modified_claw) j["motif"] = motif_to_json(*v.modified_claw);
  return j;
}

inline ordered_json report_to_json(const HypothesisReport& r) {
  ordered_json j;
  j["theorem"] = theorem_name(r.theorem);
  if (r.c) j["c"] = *r.c;
  j["holds"] = r.holds;
  if (r.violation) j["violation"] = violation_to_json(*r.violation);
  return j;
}

inline ordered_json trace_to_json(const RotationTrace& trace) {
  ordered_json steps = ordered_json::array();
  for (const RotationStep& s : trace) {
    ordered_json j;
    j["rule"] = step_rule_name(s.rule);
    j["tBefore"] = s.t_before;
    j["tAfter"] = s.t_after;
    if (s.pivot) j["pivot"] = *s.pivot;
    j["pathAfter"] = s.path_after;
    steps.push_back(std::move(j));
  }
  return steps;
}

inline ordered_json find_result_to_json(const FindResult& r, CycleTarget c, const Graph& g,
                                        bool include_traces) {
  ordered_json j;
  if (auto* h = std::get_if<Hamilton>(&r.result)) {
    j["result"] = "hamilton";
    j["c"] = c.value;
    j["n"] = g.vertex_count();
    j["cycle"] = h->cycle;
    j["achievedLength"] = static_cast<int>(h->cycle.size());
  } else if (auto* lc = std::get_if<LongCycle>(&r.result)) {
    j["result"] = "longCycle";
    j["c"] = c.value;
    j["n"] = g.vertex_count();
    j["cycle"] = lc->cycle;
    j["achievedLength"] = lc->achieved_length;
  } else if (auto* hf = std::get_if<HypothesisFailed>(&r.result)) {
    j["result"] = "hypothesisFailed";
    j["c"] = c.value;
    j["n"] = g.vertex_count();
    j["report"] = report_to_json(hf->report);
  } else if (std::holds_alternative<NotTwoConnected>(r.result)) {
    j["result"] = "notTwoConnected";
    j["c"] = c.value;
    j["n"] = g.vertex_count();
  } else if (auto* sc = std::get_if<SizeCapExceeded>(&r.result)) {
    j["result"] = "sizeCapExceeded";
    j["c"] = c.value;
    j["n"] = sc->n;
    j["cap"] = sc->cap;
  }
  if (include_traces)
    j["traces"] = ordered_json{{"first", trace_to_json(r.first_trace)},
                               {"second", trace_to_json(r.second_trace)}};
  return j;
}

inline ordered_json summary_to_json(const VerifySummary& s) {
  return ordered_json{{"graphs", s.graphs},
                      {"hypothesisPasses", s.hypothesis_passes},
                      {"verified", s.verified},
                      {"counterexamples", s.counterexamples}};
}

// Fixed columns: graph,theorem,c,holds,kind,u,v,degreeU,degreeV,commonNeighbors.
// Absent fields stay empty; graph6 bytes never contain a comma.
inline std::string report_to_csv_row(const std::string& graph6, const HypothesisReport& r) {
  std::string row = graph6;
  row += ',';
  row += theorem_name(r.theorem);
  row += ',';
  if (r.c) row += std::to_string(*r.c);
  row += ',';
  row += r.holds ? "true" : "false";
  std::string kind, u, v, du, dv, cn;
  if (r.violation) {
    kind = violation_kind_name(r.violation->kind);
    if (r.violation->pair) {
      u = std::to_string(r.violation->pair->first);
      v = std::to_string(r.violation->pair->second);
    }
    if (r.violation->degrees) {
      du = std::to_string(r.violation->degrees->first);
      dv = std::to_string(r.violation->degrees->second);
    }
    if (r.violation->common_neighbor_count)
      cn = std::to_string(*r.violation->common_neighbor_count);
  }
  for (const std::string* f : {&kind, &u, &v, &du, &dv, &cn}) {
    row += ',';
    row += *f;
  }
  return row;
}

}  // namespace cyclesmith
