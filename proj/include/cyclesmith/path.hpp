#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cyclesmith/errors.hpp"
#include "cyclesmith/graph.hpp"

namespace cyclesmith {

// A path is a sequence of distinct vertices with consecutive pairs adjacent;
// a cycle additionally closes back to its first vertex. Both are stored as
// plain vertex sequences (a cycle does not repeat its first vertex at the end).
using Path = std::vector<Vertex>;
using Cycle = std::vector<Vertex>;

inline bool is_valid_path(const Graph& g, const Path& p) {
  if (p.empty()) return false;
  VertexSet seen;
  for (Vertex v : p) {
    if (v < 0 || v >= g.vertex_count()) return false;
    if (seen.test(v)) return false;
    seen.set(v);
  }
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.adjacent(p[i], p[i + 1])) return false;
  return true;
}

inline bool is_valid_cycle(const Graph& g, const Cycle& c) {
  if (c.size() < 3) return false;
  if (!is_valid_path(g, c)) return false;
  return g.adjacent(c.back(), c.front());
}

inline void require_valid_path(const Graph& g, const Path& p, const std::string& where) {
  if (!is_valid_path(g, p)) throw PreconditionError(where + ": not a valid path");
}

inline VertexSet path_vertex_set(const Path& p) {
  VertexSet s;
  for (Vertex v : p) s.set(v);
  return s;
}

}  // namespace cyclesmith
