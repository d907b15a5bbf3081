#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclesmith/errors.hpp"
#include "cyclesmith/graph.hpp"
#include "cyclesmith/motif.hpp"
#include "cyclesmith/path.hpp"

// Reference answers by exhaustive recursion. Everything here stays
// deliberately naive and separate from the subset-table search code: the two
// sides must only agree through their results.
namespace cyclesmith::oracle {

inline constexpr int kOracleCap = 14;
inline constexpr int kMotifScanCap = 16;

namespace oracle_detail {

inline void check_cap(const Graph& g, int cap, const char* what) {
  if (g.vertex_count() > cap)
    throw SizeCapError(std::string(what) + ": n = " + std::to_string(g.vertex_count()) +
                       " exceeds cap " + std::to_string(cap));
}

struct PathSearch {
  const Graph& g;
  std::vector<char> visited;
  std::vector<Vertex> current;
  std::vector<Vertex> best;

  explicit PathSearch(const Graph& graph) : g(graph), visited(graph.vertex_count(), 0) {}

  // First strictly-longer path wins; enumeration in lex order makes the
  // winner the lexicographically least maximum path.
  void extend() {
    if (current.size() > best.size()) best = current;
    int potential = static_cast<int>(current.size());
    for (char v : visited)
      if (!v) ++potential;
    if (potential < static_cast<int>(best.size())) return;
    Vertex last = current.back();
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (visited[w] || !g.adjacent(last, w)) continue;
      visited[w] = 1;
      current.push_back(w);
      extend();
      current.pop_back();
      visited[w] = 0;
    }
  }
};

struct CycleSearch {
  const Graph& g;
  Vertex anchor = 0;
  std::vector<char> visited;
  std::vector<Vertex> current;
  std::vector<Vertex> best;

  explicit CycleSearch(const Graph& graph) : g(graph), visited(graph.vertex_count(), 0) {}

  // Cycles are rooted at their smallest vertex; only larger vertices extend.
  void extend() {
    Vertex last = current.back();
    if (current.size() >= 3 && g.adjacent(last, anchor) && current.size() > best.size())
      best = current;
    for (Vertex w = anchor + 1; w < g.vertex_count(); ++w) {
      if (visited[w] || !g.adjacent(last, w)) continue;
      visited[w] = 1;
      current.push_back(w);
      extend();
      current.pop_back();
      visited[w] = 0;
    }
  }
};

}  // namespace oracle_detail

// Longest cycle, or nullopt when the graph has no cycle at all.
inline std::optional<Cycle> circumference(const Graph& g, int cap = kOracleCap) {
  oracle_detail::check_cap(g, cap, "circumference");
  oracle_detail::CycleSearch cs(g);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    cs.anchor = s;
    cs.visited.assign(g.vertex_count(), 0);
    cs.visited[s] = 1;
    cs.current.assign(1, s);
    cs.extend();
  }
  if (cs.best.empty()) return std::nullopt;
  return cs.best;
}

inline Path brute_longest_path(const Graph& g, int cap = kOracleCap) {
  oracle_detail::check_cap(g, cap, "brute_longest_path");
  if (g.vertex_count() == 0) throw std::invalid_argument("brute_longest_path: empty graph");
  oracle_detail::PathSearch ps(g);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    ps.visited.assign(g.vertex_count(), 0);
    ps.visited[s] = 1;
    ps.current.assign(1, s);
    ps.extend();
  }
  return ps.best;
}

namespace oracle_detail {

inline bool hamilton_extend(const Graph& g, std::vector<char>& visited,
                            std::vector<Vertex>& current) {
  int n = g.vertex_count();
  Vertex last = current.back();
  if (static_cast<int>(current.size()) == n) return g.adjacent(last, 0);
  for (Vertex w = 1; w < n; ++w) {
    if (visited[w] || !g.adjacent(last, w)) continue;
    visited[w] = 1;
    current.push_back(w);
    if (hamilton_extend(g, visited, current)) return true;
    current.pop_back();
    visited[w] = 0;
  }
  return false;
}

}  // namespace oracle_detail

// Hamilton cycle through all vertices (rooted at vertex 0), or nullopt.
inline std::optional<Cycle> is_hamiltonian(const Graph& g, int cap = kOracleCap) {
  oracle_detail::check_cap(g, cap, "is_hamiltonian");
  if (g.vertex_count() < 3) return std::nullopt;
  std::vector<char> visited(g.vertex_count(), 0);
  visited[0] = 1;
  std::vector<Vertex> current{0};
  if (oracle_detail::hamilton_extend(g, visited, current)) return current;
  return std::nullopt;
}

struct MotifScan {
  std::vector<ClawWitness> claws;
  std::vector<ModifiedClawWitness> modified_claws;
};

// Classifies every 4-subset by its induced edge count and degree multiset.
// Three edges with degrees (3,1,1,1) is a claw; four edges with (3,2,2,1) is
// a triangle plus pendant.
inline MotifScan scan_motifs_naive(const Graph& g, int cap = kMotifScanCap) {
  oracle_detail::check_cap(g, cap, "scan_motifs_naive");
  MotifScan out;
  int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          Vertex vs[4] = {a, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(vs[i], vs[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          if (edges == 3) {
            int center = -1;
            for (int i = 0; i < 4; ++i)
              if (deg[i] == 3) center = i;
            if (center < 0) continue;
            ClawWitness w;
            w.center = vs[center];
            int k = 0;
            for (int i = 0; i < 4; ++i)
              if (i != center) w.leaves[k++] = vs[i];
            out.claws.push_back(w);
          } else if (edges == 4) {
            int attach = -1, pendant = -1;
            for (int i = 0; i < 4; ++i) {
              if (deg[i] == 3) attach = i;
              if (deg[i] == 1) pendant = i;
            }
            if (attach < 0 || pendant < 0) continue;
            ModifiedClawWitness w;
            w.attachment = vs[attach];
            w.pendant = vs[pendant];
            int k = 0;
            for (int i = 0; i < 4; ++i)
              if (i != attach && i != pendant) w.triangle[k++] = vs[i];
            out.modified_claws.push_back(w);
          }
        }
  return out;
}

}  // namespace cyclesmith::oracle
