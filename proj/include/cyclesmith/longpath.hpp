#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cyclesmith/errors.hpp"
#include "cyclesmith/graph.hpp"
#include "cyclesmith/hypothesis.hpp"
#include "cyclesmith/motif.hpp"
#include "cyclesmith/path.hpp"

namespace cyclesmith {

// Exact searches are exponential; the cap keeps them at desk scale unless the
// caller raises it deliberately.
inline constexpr int kDefaultExactSearchCap = 18;

namespace longpath_detail {

inline constexpr int kSubsetDpMaxN = 20;  // 2^n tables stay under ~10 MB

inline void check_cap(const Graph& g, int cap, const char* what) {
  if (g.vertex_count() > cap)
    throw SizeCapError(std::string(what) + ": graph has " + std::to_string(g.vertex_count()) +
                       " vertices; exact-search cap is " + std::to_string(cap));
}

inline std::vector<uint32_t> adjacency_words(const Graph& g) {
  std::vector<uint32_t> adj(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    adj[v] = static_cast<uint32_t>(g.neighbors(v).word(0));
  return adj;
}

// ends[mask] = vertices at which some path spanning exactly G[mask] ends.
struct SpanTable {
  std::vector<uint32_t> ends;
  int best_len = 1;
};

inline SpanTable span_table(const Graph& g) {
  int n = g.vertex_count();
  const auto adj = adjacency_words(g);
  const uint32_t full = (uint32_t(1) << n) - 1;
  SpanTable t;
  t.ends.assign(size_t(full) + 1, 0);
  for (int v = 0; v < n; ++v) t.ends[uint32_t(1) << v] = uint32_t(1) << v;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    uint32_t lasts = t.ends[mask];
    if (!lasts) continue;
    int len = std::popcount(mask);
    if (len > t.best_len) t.best_len = len;
    uint32_t rest = full & ~mask;
    while (lasts) {
      int v = std::countr_zero(lasts);
      lasts &= lasts - 1;
      uint32_t ext = adj[v] & rest;
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        t.ends[mask | (uint32_t(1) << w)] |= uint32_t(1) << w;
      }
    }
  }
  return t;
}

// completable[mask] = vertices v ∈ mask from which the unused vertices can
// still extend the path to target_len total (ending at target_end if ≥ 0).
// Supersets are numerically larger, so a single descending pass suffices.
inline std::vector<uint32_t> completable_table(const Graph& g, int target_len, int target_end) {
  int n = g.vertex_count();
  const auto adj = adjacency_words(g);
  const uint32_t full = (uint32_t(1) << n) - 1;
  std::vector<uint32_t> cc(size_t(full) + 1, 0);
  for (uint32_t mask = full; mask != 0; --mask) {
    int k = std::popcount(mask);
    if (k > target_len) continue;
    if (k == target_len) {
      cc[mask] = target_end < 0 ? mask : (mask & (uint32_t(1) << target_end));
      continue;
    }
    uint32_t onward = 0;
    uint32_t scan = full & ~mask;
    while (scan) {
      int w = std::countr_zero(scan);
      scan &= scan - 1;
      if (cc[mask | (uint32_t(1) << w)] & (uint32_t(1) << w)) onward |= uint32_t(1) << w;
    }
    if (!onward) continue;
    uint32_t members = mask, res = 0;
    while (members) {
      int v = std::countr_zero(members);
      members &= members - 1;
      if (adj[v] & onward) res |= uint32_t(1) << v;
    }
    cc[mask] = res;
  }
  return cc;
}

// Greedy front-to-back choice of the least feasible vertex at every position
// yields the lexicographically least optimal path.
inline std::optional<Path> reconstruct_lex(const Graph& g, const std::vector<uint32_t>& cc,
                                           int target_len) {
  int n = g.vertex_count();
  const auto adj = adjacency_words(g);
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (cc[uint32_t(1) << v] & (uint32_t(1) << v)) {
      start = v;
      break;
    }
  if (start < 0) return std::nullopt;
  Path p{start};
  uint32_t mask = uint32_t(1) << start;
  while (static_cast<int>(p.size()) < target_len) {
    uint32_t cand = adj[p.back()] & ~mask;
    int next = -1;
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (cc[mask | (uint32_t(1) << w)] & (uint32_t(1) << w)) {
        next = w;
        break;
      }
    }
    if (next < 0) throw std::logic_error("longest-path reconstruction lost feasibility");
    p.push_back(next);
    mask |= uint32_t(1) << next;
  }
  return p;
}

// Depth-first fallback for graphs past the subset-table range. Prunes on the
// count of unused vertices still reachable from the path head.
struct BranchAndBound {
  const Graph& g;
  Path current;
  VertexSet used;

  explicit BranchAndBound(const Graph& graph) : g(graph) {}

  // including v itself
  int reachable_unused(Vertex v) const {
    VertexSet blocked = used;
    blocked.reset(v);
    return g.reach_from(v, blocked).count();
  }

  int max_from(Vertex last, int best) {
    if (static_cast<int>(current.size()) > best) best = static_cast<int>(current.size());
    for (Vertex w : and_not(g.neighbors(last), used)) {
      used.set(w);
      current.push_back(w);
      if (static_cast<int>(current.size()) + reachable_unused(w) - 1 > best)
        best = max_from(w, best);
      current.pop_back();
      used.reset(w);
    }
    return best;
  }

  int max_length() {
    int best = 1;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      current.assign(1, s);
      used.clear();
      used.set(s);
      best = max_from(s, best);
    }
    return best;
  }

  // First full-length path in depth-first lexicographic order is the least.
  bool lex_from(Vertex last, int target_len, int target_end) {
    if (static_cast<int>(current.size()) == target_len)
      return target_end < 0 || last == target_end;
    for (Vertex w : and_not(g.neighbors(last), used)) {
      used.set(w);
      current.push_back(w);
      VertexSet blocked = used;
      blocked.reset(w);
      VertexSet reach = g.reach_from(w, blocked);
      bool feasible = static_cast<int>(current.size()) + reach.count() - 1 >= target_len &&
                      (target_end < 0 || reach.test(target_end));
      if (feasible && lex_from(w, target_len, target_end)) return true;
      current.pop_back();
      used.reset(w);
    }
    return false;
  }

  std::optional<Path> lex_path(int target_len, int target_end) {
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      if (target_len == 1 && target_end >= 0 && s != target_end) continue;
      current.assign(1, s);
      used.clear();
      used.set(s);
      if (lex_from(s, target_len, target_end)) return current;
    }
    return std::nullopt;
  }
};

inline std::optional<Path> exact_path(const Graph& g, int target_end, int cap, const char* what) {
  if (g.vertex_count() == 0) throw std::invalid_argument("graph has no vertices, hence no paths");
  check_cap(g, cap, what);
  if (g.vertex_count() <= kSubsetDpMaxN) {
    auto table = span_table(g);
    auto cc = completable_table(g, table.best_len, target_end);
    return reconstruct_lex(g, cc, table.best_len);
  }
  BranchAndBound bb(g);
  int len = bb.max_length();
  return bb.lex_path(len, target_end);
}

}  // namespace longpath_detail

inline Path longest_path(const Graph& g, int cap = kDefaultExactSearchCap) {
  auto p = longpath_detail::exact_path(g, -1, cap, "longest_path");
  if (!p) throw std::logic_error("no path found in a nonempty graph");
  return *p;
}

inline std::optional<Path> longest_path_ending_at(const Graph& g, Vertex v,
                                                  int cap = kDefaultExactSearchCap) {
  if (v < 0 || v >= g.vertex_count())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return longpath_detail::exact_path(g, v, cap, "longest_path_ending_at");
}

// Largest 1-based position on the path holding a neighbor of the path's first
// vertex; at least 2 for any valid path of ≥ 2 vertices.
inline int t_of(const Graph& g, const Path& p) {
  if (p.size() < 2) throw std::invalid_argument("t index needs a path of at least 2 vertices");
  for (int j = static_cast<int>(p.size()); j >= 2; --j)
    if (g.adjacent(p[0], p[j - 1])) return j;
  throw PreconditionError("first two path vertices are not adjacent");
}

enum class StepRule {
  CycleClose,          // closing chord present and the path is spanning
  LongerPathRestart,   // a strictly longer path was constructed (input was not maximal)
  FarClawFinish,       // claw at the top anchor; prefix reversal frees a qualifying end
  FarChordRotate,      // chord past the top anchor; prefix reversal raises t
  PickCommonNeighbor,  // inner pivot chosen among the shared neighbors
  InnerChordRotate,    // chord onto the pivot's successor; prefix reversal at the pivot
  InnerClawFinish,     // claw at the pivot; three-segment splice frees a qualifying end
  InnerSpliceRotate,   // triangle at the pivot; the same splice raises t
};

inline const char* step_rule_name(StepRule r) {
  switch (r) {
    case StepRule::CycleClose: return "cycle-close";
    case StepRule::LongerPathRestart: return "longer-path-restart";
    case StepRule::FarClawFinish: return "far-claw-finish";
    case StepRule::FarChordRotate: return "far-chord-rotate";
    case StepRule::PickCommonNeighbor: return "pick-common-neighbor";
    case StepRule::InnerChordRotate: return "inner-chord-rotate";
    case StepRule::InnerClawFinish: return "inner-claw-finish";
    case StepRule::InnerSpliceRotate: return "inner-splice-rotate";
  }
  return "?";
}

// Audit record. t_after ≥ t_before on every step except LongerPathRestart,
// which rebases the walk on a longer path whose own t starts fresh.
struct RotationStep {
  StepRule rule;
  int t_before = 0;
  int t_after = 0;
  std::optional<Vertex> pivot;  // PickCommonNeighbor only
  Path path_after;
};

using RotationTrace = std::vector<RotationStep>;

struct Rotated {
  Path path;  // same length and final vertex, strictly larger t
};
struct Finished {
  Path path;  // same length and final vertex, 2·degree(first) ≥ c
};
struct HamiltonCycle {
  Cycle cycle;
};
struct LongerPathFound {
  Path path;
};

using StepOutcome = std::variant<Rotated, Finished, HamiltonCycle, LongerPathFound, Violation>;

namespace longpath_detail {

// v_k..v_1 v_{k+1}..v_m for k = prefix_last+1 vertices; needs v_1 v_{k+1} ∈ E.
inline Path reverse_prefix(const Path& p, int prefix_last) {
  Path q(p.rbegin() + (p.size() - prefix_last - 1), p.rend());
  q.insert(q.end(), p.begin() + prefix_last + 1, p.end());
  return q;
}

// v_{i+1}..v_{t'} v_1..v_i v_{t'+1}..v_m; needs v_{t'} v_1 and v_i v_{t'+1} ∈ E.
inline Path splice_segments(const Path& p, int i, int t) {
  Path q(p.begin() + i, p.begin() + t);
  q.insert(q.end(), p.begin(), p.begin() + i);
  q.insert(q.end(), p.begin() + t, p.end());
  return q;
}

inline std::array<Vertex, 3> sorted3(Vertex a, Vertex b, Vertex c) {
  std::array<Vertex, 3> r{a, b, c};
  std::sort(r.begin(), r.end());
  return r;
}

inline void record(RotationTrace* trace, StepRule rule, int t_before, int t_after,
                   std::optional<Vertex> pivot, const Path& path_after) {
  if (trace) trace->push_back({rule, t_before, t_after, pivot, path_after});
}

}  // namespace longpath_detail

// One step of the path-improvement decision tree on p = v_1..v_m, which the
// caller supplies as a longest path ending at v_m with 2·degree(v_1) < c.
// Maximality is not checkable here; when it was breached, the step may emit a
// LongerPathFound or a PreconditionError instead of the usual outcomes. Every
// returned witness and surgery is re-checkable against g alone.
inline StepOutcome lemma2_step(const Graph& g, const Path& p, CycleTarget c,
                               RotationTrace* trace = nullptr) {
  using namespace longpath_detail;
  require_valid_path(g, p, "lemma2_step");
  const int m = static_cast<int>(p.size());
  const int n = g.vertex_count();
  if (m < 2) throw PreconditionError("lemma2_step: path has fewer than 2 vertices");
  if (2 * g.degree(p[0]) >= c.value)
    throw PreconditionError("lemma2_step: first end already meets the degree bound");

  // (0) closing chord: spanning → Hamilton cycle; otherwise the cycle plus an
  // edge leaving it unrolls into a strictly longer path (possible only when
  // the input was not maximal).
  if (g.adjacent(p[0], p[m - 1])) {
    if (m == n) {
      record(trace, StepRule::CycleClose, m, m, {}, p);
      return HamiltonCycle{p};
    }
    VertexSet on_path = path_vertex_set(p);
    int at = -1;
    Vertex out = -1;
    for (int j = 0; j < m && at < 0; ++j) {
      VertexSet ext = and_not(g.neighbors(p[j]), on_path);
      if (ext.any()) {
        at = j;
        out = ext.lowest();
      }
    }
    if (at < 0)
      throw PreconditionError("lemma2_step: closed path spans a whole component; graph not connected");
    Path longer;
    longer.reserve(m + 1);
    longer.push_back(out);
    for (int j = at; j >= 0; --j) longer.push_back(p[j]);
    for (int j = m - 1; j > at; --j) longer.push_back(p[j]);
    record(trace, StepRule::LongerPathRestart, m, t_of(g, longer), {}, longer);
    return LongerPathFound{longer};
  }

  // (1) t' < m here, so v_{t'+1} exists, and v_1 v_{t'+1} ∉ E by maximality
  // of t'. t' ≥ 3 whenever the input is maximal in a 2-connected graph.
  const int t = t_of(g, p);
  if (t < 3)
    throw PreconditionError("lemma2_step: t = 2 means degree(v_1) < 2 on a maximal path; "
                            "graph not 2-connected or path not maximal");
  const Vertex v1 = p[0], far_prev = p[t - 2], far = p[t - 1], far_next = p[t];

  // (2) {v_1, v_{t'-1}, v_{t'+1}} independent: induced claw centered v_{t'}.
  if (!g.adjacent(v1, far_prev) && !g.adjacent(far_prev, far_next)) {
    ClawWitness claw{far, sorted3(v1, far_prev, far_next)};
    if (2 * g.degree(far_prev) >= c.value) {
      Path q = reverse_prefix(p, t - 2);
      record(trace, StepRule::FarClawFinish, t, t_of(g, q), {}, q);
      return Finished{q};
    }
    // With 2·d(v_1) < c given, some claw pair now has both degrees short.
    if (2 * g.degree(far_next) < c.value) {
      auto [a, b] = hypothesis_detail::ordered(far_prev, far_next);
      return Violation{ViolationKind::ClawDegree, {{a, b}},
                       std::pair{g.degree(a), g.degree(b)}, {}, claw, {}};
    }
    auto [a, b] = hypothesis_detail::ordered(v1, far_prev);
    return Violation{ViolationKind::ClawDegree, {{a, b}},
                     std::pair{g.degree(a), g.degree(b)}, {}, claw, {}};
  }

  // (3) chord v_{t'-1} v_{t'+1}: the same prefix reversal lands its new first
  // end next to position t'+1, so t strictly grows.
  if (g.adjacent(far_prev, far_next)) {
    Path q = reverse_prefix(p, t - 2);
    record(trace, StepRule::FarChordRotate, t, t_of(g, q), {}, q);
    return Rotated{q};
  }

  // (4) here v_1 v_{t'-1} ∈ E: triangle {v_1, v_{t'-1}, v_{t'}} with pendant
  // v_{t'+1} is an induced modified claw.
  if (!g.adjacent(v1, far_prev)) throw std::logic_error("lemma2_step: branch guards inconsistent");
  Vertex tri_lo = std::min(v1, far_prev), tri_hi = std::max(v1, far_prev);
  ModifiedClawWitness mclaw{far, {tri_lo, tri_hi}, far_next};
  VertexSet shared = g.common_neighbors(v1, far_next);
  if (shared.count() < 2) {
    auto [a, b] = hypothesis_detail::ordered(v1, far_next);
    return Violation{ViolationKind::ModifiedClawCommonNeighbors, {{a, b}}, {},
                     shared.count(), {}, mclaw};
  }
  // Least on-path pivot position: shared neighbors other than v_{t'} sit at
  // positions 2..t'-2 when the path is maximal (an off-path one would extend it).
  int pivot_pos = -1;  // 1-based
  for (int j = 2; j <= t - 2; ++j)
    if (shared.test(p[j - 1])) {
      pivot_pos = j;
      break;
    }
  if (pivot_pos < 0)
    throw PreconditionError("lemma2_step: shared neighbor lies off the path; path not maximal");
  const Vertex pivot = p[pivot_pos - 1], pivot_next = p[pivot_pos];
  record(trace, StepRule::PickCommonNeighbor, t, t, pivot, p);

  // (4a) chord v_1 v_{i+1}: reverse the prefix at the pivot; the new first
  // end v_i is adjacent to v_{t'+1} at position t'+1.
  if (g.adjacent(v1, pivot_next)) {
    Path q = reverse_prefix(p, pivot_pos - 1);
    record(trace, StepRule::InnerChordRotate, t, t_of(g, q), {}, q);
    return Rotated{q};
  }

  // (4b) {v_1, v_{i+1}, v_{t'+1}} independent: claw centered at the pivot.
  if (!g.adjacent(pivot_next, far_next)) {
    ClawWitness claw{pivot, sorted3(v1, pivot_next, far_next)};
    if (2 * g.degree(pivot_next) >= c.value) {
      Path q = splice_segments(p, pivot_pos, t);
      record(trace, StepRule::InnerClawFinish, t, t_of(g, q), {}, q);
      return Finished{q};
    }
    auto [a, b] = hypothesis_detail::ordered(v1, pivot_next);
    return Violation{ViolationKind::ClawDegree, {{a, b}},
                     std::pair{g.degree(a), g.degree(b)}, {}, claw, {}};
  }

  // (4c) v_{i+1} v_{t'+1} ∈ E: the splice is a pure rotation; its first end
  // v_{i+1} is adjacent to v_{t'+1} at position t'+1.
  Path q = splice_segments(p, pivot_pos, t);
  record(trace, StepRule::InnerSpliceRotate, t, t_of(g, q), {}, q);
  return Rotated{q};
}

struct Improved {
  Path path;  // 2·degree(first) ≥ c, final vertex and length as at the last rebase
};

struct ImproveResult {
  std::variant<Improved, Violation, HamiltonCycle> outcome;
  RotationTrace trace;
  int restarts = 0;  // longer-path rebases; 0 whenever the input path was maximal
};

// Drives lemma2_step until the first end qualifies, a Hamilton cycle closes,
// or a certified hypothesis violation emerges. Each rotation is re-validated:
// valid path, unchanged length and final vertex, strictly increased t.
inline ImproveResult lemma2_improve(const Graph& g, Path p, CycleTarget c) {
  require_valid_path(g, p, "lemma2_improve");
  if (!g.is_two_connected()) throw PreconditionError("lemma2_improve: graph is not 2-connected");
  const int n = g.vertex_count();
  ImproveResult res;
  int guard = 2 * n * n + 16;
  while (true) {
    if (--guard < 0) throw std::logic_error("lemma2_improve: step budget exhausted");
    if (2 * g.degree(p.front()) >= c.value) {
      res.outcome = Improved{std::move(p)};
      return res;
    }
    const int t_before = t_of(g, p);
    const Vertex fixed_end = p.back();
    const size_t len = p.size();
    StepOutcome out = lemma2_step(g, p, c, &res.trace);
    if (auto* r = std::get_if<Rotated>(&out)) {
      require_valid_path(g, r->path, "lemma2_improve: rotated path");
      if (r->path.size() != len || r->path.back() != fixed_end ||
          t_of(g, r->path) <= t_before)
        throw std::logic_error("lemma2_improve: rotation broke its contract");
      p = std::move(r->path);
    } else if (auto* f = std::get_if<Finished>(&out)) {
      require_valid_path(g, f->path, "lemma2_improve: finished path");
      if (f->path.size() != len || f->path.back() != fixed_end ||
          2 * g.degree(f->path.front()) < c.value)
        throw std::logic_error("lemma2_improve: finish broke its contract");
      res.outcome = Improved{std::move(f->path)};
      return res;
    } else if (auto* h = std::get_if<HamiltonCycle>(&out)) {
      if (!is_valid_cycle(g, h->cycle) || static_cast<int>(h->cycle.size()) != n)
        throw std::logic_error("lemma2_improve: invalid Hamilton cycle");
      res.outcome = std::move(*h);
      return res;
    } else if (auto* l = std::get_if<LongerPathFound>(&out)) {
      require_valid_path(g, l->path, "lemma2_improve: longer path");
      if (l->path.size() <= len)
        throw std::logic_error("lemma2_improve: longer path is not longer");
      ++res.restarts;
      p = std::move(l->path);  // rebase: the new final vertex becomes the fixed end
    } else {
      auto& v = std::get<Violation>(out);
      if (!violation_certified(g, v, c.value))
        throw std::logic_error("lemma2_improve: uncertified violation");
      res.outcome = std::move(v);
      return res;
    }
  }
}

}  // namespace cyclesmith
