#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cyclesmith/errors.hpp"
#include "cyclesmith/graph.hpp"

namespace cyclesmith {

namespace enumerate_detail {

struct CanonSearch {
  const Graph& g;
  int n;
  int total_bits;
  std::vector<Vertex> perm;
  std::vector<char> used;
  uint64_t best = 0;
  bool have_best = false;

  explicit CanonSearch(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        total_bits(graph.vertex_count() * (graph.vertex_count() - 1) / 2),
        perm(graph.vertex_count(), 0),
        used(graph.vertex_count(), 0) {}

  // Column-major upper-triangle bits under the placement order; a prefix that
  // falls below the incumbent's prefix can never catch up.
  void place(uint64_t code, int bits, int depth) {
    if (depth == n) {
      if (!have_best || code > best) {
        best = code;
        have_best = true;
      }
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      uint64_t col = 0;
      for (int i = 0; i < depth; ++i) col = (col << 1) | (g.adjacent(perm[i], v) ? 1u : 0u);
      uint64_t ncode = (code << depth) | col;
      int nbits = bits + depth;
      if (have_best && ncode < (best >> (total_bits - nbits))) continue;
      used[v] = 1;
      perm[depth] = v;
      place(ncode, nbits, depth + 1);
      used[v] = 0;
    }
  }
};

inline std::vector<std::pair<Vertex, Vertex>> edge_list(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbors(u))
      if (v > u) edges.emplace_back(u, v);
  return edges;
}

}  // namespace enumerate_detail

// Isomorphism-invariant key: the maximum column-major adjacency bit string
// over all vertex orderings. Two graphs share a code iff they are isomorphic.
inline uint64_t canonical_code(const Graph& g) {
  int n = g.vertex_count();
  if (n > 11) throw SizeCapError("canonical_code: n = " + std::to_string(n) + " exceeds cap 11");
  if (n <= 1) return 0;
  enumerate_detail::CanonSearch cs(g);
  cs.place(0, 0, 0);
  return cs.best;
}

// All connected graphs on n vertices, one per isomorphism class, built tier
// by tier: each n-vertex connected graph arises from some connected
// (n-1)-vertex graph by attaching one new vertex (delete any non-cut vertex
// to see this), so extending every parent by every attachment set and
// deduplicating by canonical code is exhaustive.
inline std::vector<Graph> enumerate_connected(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_connected: n must be >= 1");
  if (n > 9) throw SizeCapError("enumerate_connected: n = " + std::to_string(n) + " exceeds cap 9");
  std::vector<Graph> tier{Graph::from_edge_list(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::unordered_set<uint64_t> seen;
    for (const Graph& parent : tier) {
      auto base = enumerate_detail::edge_list(parent);
      for (uint32_t mask = 1; mask < (uint32_t(1) << (k - 1)); ++mask) {
        auto edges = base;
        for (int i = 0; i < k - 1; ++i)
          if (mask & (uint32_t(1) << i)) edges.emplace_back(i, k - 1);
        Graph child = Graph::from_edge_list(k, edges);
        if (seen.insert(canonical_code(child)).second) next.push_back(std::move(child));
      }
    }
    tier = std::move(next);
  }
  return tier;
}

inline std::vector<Graph> enumerate_two_connected(int n) {
  std::vector<Graph> out;
  for (Graph& g : enumerate_connected(n))
    if (g.is_two_connected()) out.push_back(std::move(g));
  return out;
}

// Brute count over all vertex permutations; intended for small n only.
inline int automorphism_count(const Graph& g) {
  int n = g.vertex_count();
  if (n > 9) throw SizeCapError("automorphism_count: n = " + std::to_string(n) + " exceeds cap 9");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      for (Vertex v = u + 1; v < n && ok; ++v)
        if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace cyclesmith
