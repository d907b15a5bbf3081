#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclesmith/graph.hpp"

namespace cyclesmith {

// Recorded in corpus manifests so a reader can tell exactly how randomness
// was drawn. std::uniform_int_distribution is implementation-defined, so
// sampling below uses raw mt19937_64 words with rejection.
inline constexpr const char* kRngIdentity = "mt19937_64/fisher-yates/rejection-sampling";

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace generators_detail {

inline uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
  uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

inline int require_param(const std::map<std::string, int>& params, const std::string& key,
                         const std::string& family) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("named: family '" + family + "' needs parameter '" + key + "'");
  return it->second;
}

}  // namespace generators_detail

// Fixed families. petersen is built as the Kneser graph K(5,2): vertices are
// the 2-subsets of {0..4} in lex order, edges join disjoint subsets.
inline Graph named(const std::string& family, const std::map<std::string, int>& params = {}) {
  using generators_detail::require_param;
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (family == "complete") {
    int n = require_param(params, "n", family);
    if (n < 1) throw std::invalid_argument("named: complete needs n >= 1");
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
  }
  if (family == "cycle") {
    int n = require_param(params, "n", family);
    if (n < 3) throw std::invalid_argument("named: cycle needs n >= 3");
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph::from_edge_list(n, edges);
  }
  if (family == "path") {
    int n = require_param(params, "n", family);
    if (n < 1) throw std::invalid_argument("named: path needs n >= 1");
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph::from_edge_list(n, edges);
  }
  if (family == "complete_bipartite") {
    int a = require_param(params, "a", family);
    int b = require_param(params, "b", family);
    if (a < 1 || b < 1) throw std::invalid_argument("named: complete_bipartite needs a, b >= 1");
    for (int u = 0; u < a; ++u)
      for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edge_list(a + b, edges);
  }
  if (family == "star") {
    int k = require_param(params, "k", family);
    if (k < 1) throw std::invalid_argument("named: star needs k >= 1");
    for (int v = 1; v <= k; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(k + 1, edges);
  }
  if (family == "claw") {
    return named("star", {{"k", 3}});
  }
  if (family == "modified_claw") {
    return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  }
  if (family == "petersen") {
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
    for (int i = 0; i < 10; ++i)
      for (int j = i + 1; j < 10; ++j) {
        auto [a, b] = subsets[i];
        auto [c, d] = subsets[j];
        if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
      }
    return Graph::from_edge_list(10, edges);
  }
  if (family == "prism") {
    int gon = params.count("gon") ? params.at("gon") : 3;
    if (gon < 3) throw std::invalid_argument("named: prism needs gon >= 3");
    for (int u = 0; u < gon; ++u) {
      edges.emplace_back(u, (u + 1) % gon);
      edges.emplace_back(gon + u, gon + (u + 1) % gon);
      edges.emplace_back(u, gon + u);
    }
    return Graph::from_edge_list(2 * gon, edges);
  }
  throw std::invalid_argument("named: unknown family '" + family + "'");
}

// Cycle 0..n-1 plus extra_edges distinct chords chosen by a partial
// Fisher-Yates pass over the chord list. Identical (n, extra_edges, seed)
// always yields the identical graph.
inline Graph random_two_connected(int n, int extra_edges, uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_two_connected: n must be >= 3");
  if (extra_edges < 0) throw std::invalid_argument("random_two_connected: extra_edges < 0");
  std::vector<std::pair<Vertex, Vertex>> chords;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool cycle_edge = (v == u + 1) || (u == 0 && v == n - 1);
      if (!cycle_edge) chords.emplace_back(u, v);
    }
  if (extra_edges > static_cast<int>(chords.size()))
    throw std::invalid_argument("random_two_connected: only " + std::to_string(chords.size()) +
                                " chords exist on " + std::to_string(n) + " vertices");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < extra_edges; ++i) {
    uint64_t j = i + generators_detail::uniform_below(rng, chords.size() - i);
    std::swap(chords[i], chords[j]);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  edges.insert(edges.end(), chords.begin(), chords.begin() + extra_edges);
  return Graph::from_edge_list(n, edges);
}

// Vertices of the result are the edges of g as (u, v) pairs with u < v, in
// ascending lex order; adjacency is sharing an endpoint.
inline Graph line_graph(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> base;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbors(u))
      if (v > u) base.emplace_back(u, v);
  if (base.empty()) throw std::invalid_argument("line_graph: graph has no edges");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < static_cast<int>(base.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(base.size()); ++j) {
      auto [a, b] = base[i];
      auto [c, d] = base[j];
      if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
    }
  return Graph::from_edge_list(static_cast<int>(base.size()), edges);
}

}  // namespace cyclesmith
