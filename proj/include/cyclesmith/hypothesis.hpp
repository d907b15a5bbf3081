#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "cyclesmith/graph.hpp"
#include "cyclesmith/motif.hpp"

namespace cyclesmith {

// Length bound the degree conditions are measured against. Cycle lengths
// below 3 are meaningless, reject them at the boundary.
struct CycleTarget {
  explicit CycleTarget(int c) : value(c) {
    if (c < 3) throw std::invalid_argument("cycle target must be at least 3, got " + std::to_string(c));
  }
  int value;
};

enum class Theorem { fan, bcs, shi, thm4 };

inline const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::fan: return "fan";
    case Theorem::bcs: return "bcs";
    case Theorem::shi: return "shi";
    case Theorem::thm4: return "thm4";
  }
  return "?";
}

inline std::optional<Theorem> parse_theorem(const std::string& s) {
  if (s == "fan") return Theorem::fan;
  if (s == "bcs") return Theorem::bcs;
  if (s == "shi") return Theorem::shi;
  if (s == "thm4") return Theorem::thm4;
  return std::nullopt;
}

enum class ViolationKind {
  Distance2Degree,              // distance-2 pair with both degrees below c/2
  ClawDegree,                   // claw pair with both degrees below c/2
  ModifiedClawDegree,           // modified-claw pair with both degrees below c/2
  ClawPresent,                  // claw in a hypothesis demanding claw-freeness
  Distance2CommonNeighbors,     // distance-2 pair with fewer than 2 common neighbors
  ModifiedClawCommonNeighbors,  // modified-claw pair with fewer than 2 common neighbors
};

inline const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::Distance2Degree: return "distance2-degree";
    case ViolationKind::ClawDegree: return "claw-degree";
    case ViolationKind::ModifiedClawDegree: return "modified-claw-degree";
    case ViolationKind::ClawPresent: return "claw-present";
    case ViolationKind::Distance2CommonNeighbors: return "distance2-common-neighbors";
    case ViolationKind::ModifiedClawCommonNeighbors: return "modified-claw-common-neighbors";
  }
  return "?";
}

// First failure found by the checker's fixed scan order, with enough context
// to re-verify it without rerunning the scan.
struct Violation {
  ViolationKind kind;
  std::optional<std::pair<Vertex, Vertex>> pair;
  std::optional<std::pair<int, int>> degrees;
  std::optional<int> common_neighbor_count;
  std::optional<ClawWitness> claw;
  std::optional<ModifiedClawWitness> modified_claw;
};

struct HypothesisReport {
  Theorem theorem;
  std::optional<int> c;  // absent for hypotheses with no length parameter
  bool holds = false;
  std::optional<Violation> violation;
};

namespace hypothesis_detail {

// Degree clauses compare 2*max(d) against c so everything stays in integers.
inline bool degree_pair_ok(const Graph& g, Vertex u, Vertex v, int c, std::pair<int, int>& degs) {
  degs = {g.degree(u), g.degree(v)};
  return 2 * std::max(degs.first, degs.second) >= c;
}

inline std::pair<Vertex, Vertex> ordered(Vertex u, Vertex v) {
  return u < v ? std::pair{u, v} : std::pair{v, u};
}

// The degree and common-neighbor conditions depend only on the pair, so a
// pair shared by several motifs is tested once per predicate.
struct PairSeen {
  std::array<VertexSet, kMaxVertices> rows{};

  bool insert(Vertex u, Vertex v) {
    auto [a, b] = ordered(u, v);
    if (rows[a].test(b)) return false;
    rows[a].set(b);
    return true;
  }
};

}  // namespace hypothesis_detail

// Every pair at distance exactly 2 must have a vertex of degree >= c/2.
inline HypothesisReport check_fan(const Graph& g, CycleTarget target) {
  HypothesisReport r{Theorem::fan, target.value, true, std::nullopt};
  int n = g.vertex_count();
  for (Vertex u = 0; u < n && r.holds; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      if (g.common_neighbors(u, v).none()) continue;  // distance 2 iff nonadjacent with one
      std::pair<int, int> degs;
      if (!hypothesis_detail::degree_pair_ok(g, u, v, target.value, degs)) {
        r.holds = false;
        r.violation = Violation{ViolationKind::Distance2Degree, {{u, v}}, degs, {}, {}, {}};
        break;
      }
    }
  return r;
}

// Every nonadjacent pair inside an induced claw or modified claw must have a
// vertex of degree >= c/2.
inline HypothesisReport check_bcs(const Graph& g, CycleTarget target) {
  HypothesisReport r{Theorem::bcs, target.value, true, std::nullopt};
  hypothesis_detail::PairSeen seen;  // shared: both clauses apply the same degree test
  for_each_claw(g, [&](const ClawWitness& w) {
    for (auto [u, v] : nonadjacent_pairs(w)) {
      if (!seen.insert(u, v)) continue;
      std::pair<int, int> degs;
      if (!hypothesis_detail::degree_pair_ok(g, u, v, target.value, degs)) {
        r.holds = false;
        r.violation = Violation{ViolationKind::ClawDegree, {{u, v}}, degs, {}, w, {}};
        return false;
      }
    }
    return true;
  });
  if (!r.holds) return r;
  for_each_modified_claw(g, [&](const ModifiedClawWitness& w) {
    for (auto [u, v] : nonadjacent_pairs(w)) {
      if (!seen.insert(u, v)) continue;
      auto [a, b] = hypothesis_detail::ordered(u, v);
      std::pair<int, int> degs;
      if (!hypothesis_detail::degree_pair_ok(g, a, b, target.value, degs)) {
        r.holds = false;
        r.violation = Violation{ViolationKind::ModifiedClawDegree, {{a, b}}, degs, {}, {}, w};
        return false;
      }
    }
    return true;
  });
  return r;
}

// Claw-free, and every pair at distance 2 has at least two common neighbors.
// No length parameter: the conclusion this feeds is Hamiltonicity itself.
inline HypothesisReport check_shi(const Graph& g) {
  HypothesisReport r{Theorem::shi, std::nullopt, true, std::nullopt};
  if (auto w = find_claw(g)) {
    r.holds = false;
    r.violation = Violation{ViolationKind::ClawPresent, {}, {}, {}, *w, {}};
    return r;
  }
  int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      int k = g.common_neighbors(u, v).count();
      if (k >= 1 && k < 2) {
        r.holds = false;
        r.violation = Violation{ViolationKind::Distance2CommonNeighbors, {{u, v}}, {}, k, {}, {}};
        return r;
      }
    }
  return r;
}

// Claw pairs satisfy the degree clause; modified-claw pairs have at least two
// common neighbors.
inline HypothesisReport check_thm4(const Graph& g, CycleTarget target) {
  HypothesisReport r{Theorem::thm4, target.value, true, std::nullopt};
  hypothesis_detail::PairSeen claw_seen, mc_seen;  // separate: the clauses test different predicates
  for_each_claw(g, [&](const ClawWitness& w) {
    for (auto [u, v] : nonadjacent_pairs(w)) {
      if (!claw_seen.insert(u, v)) continue;
      std::pair<int, int> degs;
      if (!hypothesis_detail::degree_pair_ok(g, u, v, target.value, degs)) {
        r.holds = false;
        r.violation = Violation{ViolationKind::ClawDegree, {{u, v}}, degs, {}, w, {}};
        return false;
      }
    }
    return true;
  });
  if (!r.holds) return r;
  for_each_modified_claw(g, [&](const ModifiedClawWitness& w) {
    for (auto [u, v] : nonadjacent_pairs(w)) {
      if (!mc_seen.insert(u, v)) continue;
      auto [a, b] = hypothesis_detail::ordered(u, v);
      int k = g.common_neighbors(a, b).count();
      if (k < 2) {
        r.holds = false;
        r.violation =
            Violation{ViolationKind::ModifiedClawCommonNeighbors, {{a, b}}, {}, k, {}, w};
        return false;
      }
    }
    return true;
  });
  return r;
}

// Re-checks a violation against the graph from scratch: witness induced, pair
// taken from the witness (or genuinely at distance 2), recorded numbers match,
// and the claimed clause really fails. Checkers and the rotation engine assert
// this before reporting, so a bogus witness can never certify a failure.
inline bool violation_certified(const Graph& g, const Violation& v, std::optional<int> c) {
  auto degrees_fail = [&](Vertex a, Vertex b) {
    if (!v.degrees || !c) return false;
    if (g.degree(a) != v.degrees->first || g.degree(b) != v.degrees->second) return false;
    return 2 * std::max(v.degrees->first, v.degrees->second) < *c;
  };
  auto pair_among = [&](const auto& pairs) {
    if (!v.pair) return false;
    auto [a, b] = hypothesis_detail::ordered(v.pair->first, v.pair->second);
    for (auto [x, y] : pairs) {
      auto [px, py] = hypothesis_detail::ordered(x, y);
      if (px == a && py == b) return true;
    }
    return false;
  };
  switch (v.kind) {
    case ViolationKind::Distance2Degree: {
      if (!v.pair) return false;
      auto [a, b] = *v.pair;
      if (a == b || g.adjacent(a, b) || g.common_neighbors(a, b).none()) return false;
      return degrees_fail(a, b);
    }
    case ViolationKind::ClawDegree:
      if (!v.claw || !is_induced_claw(g, *v.claw) || !pair_among(nonadjacent_pairs(*v.claw)))
        return false;
      return degrees_fail(v.pair->first, v.pair->second);
    case ViolationKind::ModifiedClawDegree:
      if (!v.modified_claw || !is_induced_modified_claw(g, *v.modified_claw) ||
          !pair_among(nonadjacent_pairs(*v.modified_claw)))
        return false;
      return degrees_fail(v.pair->first, v.pair->second);
    case ViolationKind::ClawPresent:
      return v.claw && is_induced_claw(g, *v.claw);
    case ViolationKind::Distance2CommonNeighbors: {
      if (!v.pair || !v.common_neighbor_count) return false;
      auto [a, b] = *v.pair;
      if (a == b || g.adjacent(a, b)) return false;
      int k = g.common_neighbors(a, b).count();
      return k == *v.common_neighbor_count && k == 1;
    }
    case ViolationKind::ModifiedClawCommonNeighbors: {
      if (!v.modified_claw || !is_induced_modified_claw(g, *v.modified_claw) ||
          !pair_among(nonadjacent_pairs(*v.modified_claw)) || !v.common_neighbor_count)
        return false;
      auto [a, b] = *v.pair;
      int k = g.common_neighbors(a, b).count();
      return k == *v.common_neighbor_count && k < 2;
    }
  }
  return false;
}

// Dispatch by theorem tag. The length parameter is required except for shi,
// which ignores it.
inline HypothesisReport check_hypothesis(Theorem t, const Graph& g, std::optional<CycleTarget> c) {
  switch (t) {
    case Theorem::fan:
    case Theorem::bcs:
    case Theorem::thm4:
      if (!c)
        throw std::invalid_argument(std::string(theorem_name(t)) + " requires a cycle target");
      break;
    case Theorem::shi:
      break;
  }
  switch (t) {
    case Theorem::fan: return check_fan(g, *c);
    case Theorem::bcs: return check_bcs(g, *c);
    case Theorem::shi: return check_shi(g);
    case Theorem::thm4: return check_thm4(g, *c);
  }
  throw std::logic_error("unreachable theorem tag");
}

}  // namespace cyclesmith
