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
#include "cyclesmith/longpath.hpp"
#include "cyclesmith/path.hpp"

namespace cyclesmith {

namespace cyclefinder_detail {

// Exact maximum cycle, deterministic: the lexicographically least vertex
// sequence among maximum cycles, rooted at each cycle's smallest vertex.
// Subset tables anchor every mask at its lowest bit, so each cycle vertex set
// is examined exactly once.
inline std::optional<Cycle> max_cycle_subset(const Graph& g) {
  int n = g.vertex_count();
  const auto adj = longpath_detail::adjacency_words(g);
  const uint32_t full = (uint32_t(1) << n) - 1;
  std::vector<uint32_t> ends(size_t(full) + 1, 0);
  int best_len = 0;
  int best_anchor = n;
  for (int v = 0; v < n; ++v) ends[uint32_t(1) << v] = uint32_t(1) << v;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    uint32_t lasts = ends[mask];
    if (!lasts) continue;
    int anchor = std::countr_zero(mask);
    int len = std::popcount(mask);
    if (len >= 3 && (lasts & adj[anchor])) {
      if (len > best_len || (len == best_len && anchor < best_anchor)) {
        best_len = len;
        best_anchor = anchor;
      }
    }
    uint32_t rest = full & ~mask & ~((uint32_t(1) << (anchor + 1)) - 1);  // keep anchor minimal
    while (lasts) {
      int v = std::countr_zero(lasts);
      lasts &= lasts - 1;
      uint32_t ext = adj[v] & rest;
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        ends[mask | (uint32_t(1) << w)] |= uint32_t(1) << w;
      }
    }
  }
  if (best_len == 0) return std::nullopt;

  // Completability toward a best_len cycle anchored at best_anchor; then a
  // greedy least-next walk emits the lexicographically least sequence.
  const int a = best_anchor;
  const uint32_t abit = uint32_t(1) << a;
  const uint32_t high = full & ~((abit << 1) - 1);  // vertices above the anchor
  std::vector<uint32_t> cc(size_t(full) + 1, 0);
  for (uint32_t mask = full; mask != 0; --mask) {
    if (!(mask & abit) || (mask & ~abit & ~high)) continue;
    int k = std::popcount(mask);
    if (k > best_len) continue;
    if (k == best_len) {
      cc[mask] = mask & adj[a] & high;
      continue;
    }
    uint32_t onward = 0;
    uint32_t scan = high & ~mask;
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
  Cycle cyc{a};
  uint32_t mask = abit;
  if (!(cc[mask] & abit)) throw std::logic_error("max-cycle reconstruction lost feasibility");
  while (static_cast<int>(cyc.size()) < best_len) {
    uint32_t cand = adj[cyc.back()] & high & ~mask;
    int next = -1;
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (cc[mask | (uint32_t(1) << w)] & (uint32_t(1) << w)) {
        next = w;
        break;
      }
    }
    if (next < 0) throw std::logic_error("max-cycle reconstruction lost feasibility");
    cyc.push_back(next);
    mask |= uint32_t(1) << next;
  }
  return cyc;
}

// Depth-first fallback past the subset-table range. Paths grow only through
// vertices above the anchor; a step back to the anchor closes a cycle.
struct CycleSearch {
  const Graph& g;
  Vertex anchor = 0;
  Path current;
  VertexSet used;

  explicit CycleSearch(const Graph& graph) : g(graph) {}

  bool feasible(Vertex last, int target_len) const {
    VertexSet blocked = used;
    blocked.reset(last);
    VertexSet reach = g.reach_from(last, blocked);
    if (static_cast<int>(current.size()) + reach.count() - 1 < target_len) return false;
    return (reach & g.neighbors(anchor)).any();
  }

  int max_from(Vertex last, int best) {
    if (static_cast<int>(current.size()) >= 3 && g.adjacent(last, anchor))
      best = std::max(best, static_cast<int>(current.size()));
    for (Vertex w : and_not(g.neighbors(last), used)) {
      if (w <= anchor) continue;
      used.set(w);
      current.push_back(w);
      if (feasible(w, best + 1)) best = max_from(w, best);
      current.pop_back();
      used.reset(w);
    }
    return best;
  }

  bool lex_from(Vertex last, int target_len) {
    if (static_cast<int>(current.size()) == target_len) return g.adjacent(last, anchor);
    for (Vertex w : and_not(g.neighbors(last), used)) {
      if (w <= anchor) continue;
      used.set(w);
      current.push_back(w);
      if (feasible(w, target_len) && lex_from(w, target_len)) return true;
      current.pop_back();
      used.reset(w);
    }
    return false;
  }

  std::optional<Cycle> run() {
    int best = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      anchor = s;
      current.assign(1, s);
      used.clear();
      used.set(s);
      best = max_from(s, best);
    }
    if (best == 0) return std::nullopt;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      anchor = s;
      current.assign(1, s);
      used.clear();
      used.set(s);
      if (lex_from(s, best)) return current;
    }
    return std::nullopt;
  }
};

}  // namespace cyclefinder_detail

// Exact maximum-length cycle, or nullopt for acyclic graphs.
inline std::optional<Cycle> max_cycle_exact(const Graph& g, int cap = kDefaultExactSearchCap) {
  longpath_detail::check_cap(g, cap, "max_cycle_exact");
  if (g.vertex_count() < 3) return std::nullopt;
  if (g.vertex_count() <= longpath_detail::kSubsetDpMaxN)
    return cyclefinder_detail::max_cycle_subset(g);
  cyclefinder_detail::CycleSearch cs(g);
  return cs.run();
}

// Turns a degree-qualified longest path into a long cycle: a closing edge or a
// crossing chord pair spans all of V(p); otherwise exact search supplies the
// best cycle. The d(x)+d(y) bound is enforced, and missing it escalates as a
// theorem counterexample rather than a quiet short answer.
inline Cycle cycle_from_path(const Graph& g, const Path& p, int cap = kDefaultExactSearchCap) {
  require_valid_path(g, p, "cycle_from_path");
  if (!g.is_two_connected()) throw PreconditionError("cycle_from_path: graph is not 2-connected");
  longpath_detail::check_cap(g, cap, "cycle_from_path");
  const int m = static_cast<int>(p.size());
  const int n = g.vertex_count();
  const int bound = std::min(n, g.degree(p.front()) + g.degree(p.back()));

  std::optional<Cycle> cyc;
  if (m >= 3 && g.adjacent(p.front(), p.back())) {
    cyc = p;
  } else if (m >= 3) {
    for (int a = 0; a + 2 < m && !cyc; ++a) {
      if (g.adjacent(p[0], p[a + 1]) && g.adjacent(p[a], p[m - 1])) {
        Cycle c(p.begin(), p.begin() + a + 1);
        c.insert(c.end(), p.rbegin(), p.rend() - (a + 1));
        cyc = std::move(c);
      }
    }
  }
  if (!cyc) cyc = max_cycle_exact(g, cap);
  if (!cyc || !is_valid_cycle(g, *cyc))
    throw std::logic_error("cycle_from_path: extraction produced no valid cycle");
  if (static_cast<int>(cyc->size()) < bound)
    throw CounterexampleError("cycle_from_path: best cycle has " + std::to_string(cyc->size()) +
                              " vertices, below the required " + std::to_string(bound) +
                              " = min(n, d(x)+d(y))");
  return *cyc;
}

struct Hamilton {
  Cycle cycle;
};
struct LongCycle {
  Cycle cycle;
  int achieved_length = 0;
};
struct HypothesisFailed {
  HypothesisReport report;
};
struct NotTwoConnected {};
struct SizeCapExceeded {
  int n = 0;
  int cap = 0;
};

struct FindResult {
  std::variant<Hamilton, LongCycle, HypothesisFailed, NotTwoConnected, SizeCapExceeded> result;
  RotationTrace first_trace;   // improve pass on the path's first end
  RotationTrace second_trace;  // improve pass on the other end, first end held fixed
};

// End-to-end driver: hypothesis gate, longest path, one improve pass per end,
// cycle extraction. Every stage's guarantee is re-checked, so a returned
// LongCycle of length < c is impossible without an exception escaping first.
inline FindResult find_long_cycle(const Graph& g, CycleTarget c,
                                  int cap = kDefaultExactSearchCap) {
  FindResult out;
  if (!g.is_two_connected()) {
    out.result = NotTwoConnected{};
    return out;
  }
  HypothesisReport report = check_thm4(g, c);
  if (!report.holds) {
    out.result = HypothesisFailed{std::move(report)};
    return out;
  }
  if (g.vertex_count() > cap) {
    out.result = SizeCapExceeded{g.vertex_count(), cap};
    return out;
  }
  const int n = g.vertex_count();
  Path p = longest_path(g, cap);
  if (static_cast<int>(p.size()) == n && g.adjacent(p.front(), p.back())) {
    out.result = Hamilton{std::move(p)};
    return out;
  }

  auto finish_pass = [&](ImproveResult&& r, RotationTrace& slot,
                         const char* stage) -> std::optional<Path> {
    slot = std::move(r.trace);
    if (r.restarts > 0)
      throw std::logic_error(std::string(stage) +
                             ": engine improved on an exact longest path; search inconsistent");
    if (auto* h = std::get_if<HamiltonCycle>(&r.outcome)) {
      out.result = Hamilton{std::move(h->cycle)};
      return std::nullopt;
    }
    if (std::holds_alternative<Violation>(r.outcome))
      throw std::logic_error(std::string(stage) +
                             ": hypothesis checker and rotation engine disagree");
    return std::move(std::get<Improved>(r.outcome).path);
  };

  auto q1 = finish_pass(lemma2_improve(g, std::move(p), c), out.first_trace, "first improve");
  if (!q1) return out;
  std::reverse(q1->begin(), q1->end());
  auto q2 = finish_pass(lemma2_improve(g, std::move(*q1), c), out.second_trace, "second improve");
  if (!q2) return out;
  if (2 * g.degree(q2->front()) < c.value || 2 * g.degree(q2->back()) < c.value)
    throw std::logic_error("second improve pass lost the first pass's end guarantee");

  Cycle cyc = cycle_from_path(g, *q2, cap);
  const int len = static_cast<int>(cyc.size());
  if (len == n)
    out.result = Hamilton{std::move(cyc)};
  else if (len >= c.value)
    out.result = LongCycle{std::move(cyc), len};
  else
    throw CounterexampleError("find_long_cycle: extracted cycle has " + std::to_string(len) +
                              " vertices, below target " + std::to_string(c.value));
  return out;
}

}  // namespace cyclesmith
