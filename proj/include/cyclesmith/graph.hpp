#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclesmith/bitset.hpp"
#include "cyclesmith/errors.hpp"

namespace cyclesmith {

using Vertex = int;

#ifndef CYCLESMITH_MAX_VERTICES
#define CYCLESMITH_MAX_VERTICES 64
#endif

inline constexpr int kMaxVertices = CYCLESMITH_MAX_VERTICES;

using VertexSet = FixedBitset<kMaxVertices>;

// Immutable simple undirected graph on vertices 0..n-1. Adjacency is one
// fixed-width bitset per vertex, so neighborhood intersections and motif
// scans are word-parallel. Values are safe to share across threads.
class Graph {
 public:
  static Graph from_edge_list(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    g.recount();
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].test(v);
  }

  const VertexSet& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(Vertex v) const {
    check_vertex(v);
    return adj_[v].count();
  }

  // N(u) ∩ N(v). Cannot contain u or v since the graph is irreflexive.
  VertexSet common_neighbors(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("common_neighbors: identical endpoints");
    return adj_[u] & adj_[v];
  }

  // BFS shortest-path length; nullopt when v is unreachable from u.
  std::optional<int> distance(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    VertexSet frontier, seen;
    frontier.set(u);
    seen.set(u);
    int d = 0;
    while (frontier.any()) {
      ++d;
      VertexSet next;
      for (Vertex w : frontier) next |= adj_[w];
      next = and_not(next, seen);
      if (next.test(v)) return d;
      seen |= next;
      frontier = next;
    }
    return std::nullopt;
  }

  bool is_connected() const {
    if (n_ == 0) return true;
    return reach_from(0, VertexSet{}).count() == n_;
  }

  // n >= 3, connected, and no articulation vertex (low-link computation).
  bool is_two_connected() const {
    if (n_ < 3) return false;
    std::vector<int> order(n_, -1), low(n_, 0);
    int counter = 0;
    bool has_cut = false;
    // Iterative DFS from vertex 0; an articulation at the root means >1 child.
    struct Frame {
      Vertex v;
      Vertex parent;
      int next = -1;  // last neighbor handed out by next_after
    };
    std::vector<Frame> stack;
    stack.push_back({0, -1, -1});
    order[0] = low[0] = counter++;
    int root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      int w = adj_[f.v].next_after(f.next);
      if (w < 0) {
        Vertex v = f.v, parent = f.parent;
        stack.pop_back();
        if (parent >= 0) {
          if (low[v] < low[parent]) low[parent] = low[v];
          if (parent != 0 && low[v] >= order[parent]) has_cut = true;
        }
        continue;
      }
      f.next = w;
      if (w == f.parent) continue;
      if (order[w] >= 0) {
        if (order[w] < low[f.v]) low[f.v] = order[w];
        continue;
      }
      if (f.v == 0) ++root_children;
      order[w] = low[w] = counter++;
      stack.push_back({w, f.v, -1});
    }
    if (counter < n_) return false;  // disconnected
    if (root_children > 1) has_cut = true;
    return !has_cut;
  }

  VertexSet vertex_set() const { return VertexSet::up_to(n_); }

  // Vertices reachable from v while avoiding `blocked`.
  VertexSet reach_from(Vertex v, const VertexSet& blocked) const {
    VertexSet seen;
    if (blocked.test(v)) return seen;
    seen.set(v);
    VertexSet frontier = seen;
    while (frontier.any()) {
      VertexSet next;
      for (Vertex w : frontier) next |= adj_[w];
      next = and_not(and_not(next, seen), blocked);
      seen |= next;
      frontier = next;
    }
    return seen;
  }

 private:
  explicit Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (n > kMaxVertices)
      throw SizeCapError("graph has " + std::to_string(n) + " vertices; capacity is " +
                         std::to_string(kMaxVertices));
    adj_.resize(n);
  }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
  }

  void recount() {
    int total = 0;
    for (const auto& s : adj_) total += s.count();
    m_ = total / 2;
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(n_) + ")");
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;

  friend class GraphBuilder;
};

// Mutable staging area for construction code (parsers, generators).
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(n) {}
  void add_edge(Vertex u, Vertex v) { g_.add_edge(u, v); }
  Graph build() {
    g_.recount();
    return std::move(g_);
  }

 private:
  Graph g_;
};

}  // namespace cyclesmith
