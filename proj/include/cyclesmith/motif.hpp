#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "cyclesmith/graph.hpp"

namespace cyclesmith {

// Induced K_{1,3}: center adjacent to three pairwise-nonadjacent leaves.
struct ClawWitness {
  Vertex center;
  std::array<Vertex, 3> leaves;  // ascending

  bool operator==(const ClawWitness&) const = default;
};

// Induced triangle plus pendant edge on four vertices. The attachment is the
// triangle vertex carrying the pendant; the nonadjacent pairs are each
// remaining triangle vertex with the pendant.
struct ModifiedClawWitness {
  Vertex attachment;
  std::array<Vertex, 2> triangle;  // ascending, both adjacent to each other
  Vertex pendant;

  bool operator==(const ModifiedClawWitness&) const = default;
};

inline bool is_induced_claw(const Graph& g, const ClawWitness& w) {
  auto [a, b, c] = w.leaves;
  if (a == b || b == c || a == w.center || b == w.center || c == w.center) return false;
  return g.adjacent(w.center, a) && g.adjacent(w.center, b) && g.adjacent(w.center, c) &&
         !g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c);
}

inline bool is_induced_modified_claw(const Graph& g, const ModifiedClawWitness& w) {
  auto [a, b] = w.triangle;
  Vertex x = w.attachment, p = w.pendant;
  if (a == b || a == x || b == x || p == a || p == b || p == x) return false;
  return g.adjacent(a, b) && g.adjacent(a, x) && g.adjacent(b, x) && g.adjacent(x, p) &&
         !g.adjacent(a, p) && !g.adjacent(b, p);
}

inline std::array<std::pair<Vertex, Vertex>, 3> nonadjacent_pairs(const ClawWitness& w) {
  auto [a, b, c] = w.leaves;
  return {{{a, b}, {a, c}, {b, c}}};
}

inline std::array<std::pair<Vertex, Vertex>, 2> nonadjacent_pairs(const ModifiedClawWitness& w) {
  return {{{w.pendant, w.triangle[0]}, {w.pendant, w.triangle[1]}}};
}

// Visits induced claws center-major, leaves in lexicographic order. The
// visitor returns false to stop early; the function reports whether the scan
// ran to completion.
template <typename Visitor>
bool for_each_claw(const Graph& g, Visitor&& visit) {
  int n = g.vertex_count();
  std::vector<Vertex> nbr;
  for (Vertex v = 0; v < n; ++v) {
    nbr.clear();
    for (Vertex w : g.neighbors(v)) nbr.push_back(w);
    for (size_t i = 0; i < nbr.size(); ++i)
      for (size_t j = i + 1; j < nbr.size(); ++j) {
        if (g.adjacent(nbr[i], nbr[j])) continue;
        for (size_t k = j + 1; k < nbr.size(); ++k) {
          if (g.adjacent(nbr[i], nbr[k]) || g.adjacent(nbr[j], nbr[k])) continue;
          if (!visit(ClawWitness{v, {nbr[i], nbr[j], nbr[k]}})) return false;
        }
      }
  }
  return true;
}

// Visits induced modified claws attachment-major, then triangle pair, then
// pendant, each in lexicographic order.
template <typename Visitor>
bool for_each_modified_claw(const Graph& g, Visitor&& visit) {
  int n = g.vertex_count();
  std::vector<Vertex> nbr;
  for (Vertex x = 0; x < n; ++x) {
    nbr.clear();
    for (Vertex w : g.neighbors(x)) nbr.push_back(w);
    for (size_t i = 0; i < nbr.size(); ++i)
      for (size_t j = i + 1; j < nbr.size(); ++j) {
        Vertex a = nbr[i], b = nbr[j];
        if (!g.adjacent(a, b)) continue;
        for (Vertex p : nbr) {
          if (p == a || p == b || g.adjacent(a, p) || g.adjacent(b, p)) continue;
          if (!visit(ModifiedClawWitness{x, {a, b}, p})) return false;
        }
      }
  }
  return true;
}

inline std::vector<ClawWitness> enumerate_claws(const Graph& g) {
  std::vector<ClawWitness> out;
  for_each_claw(g, [&](const ClawWitness& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

inline std::vector<ModifiedClawWitness> enumerate_modified_claws(const Graph& g) {
  std::vector<ModifiedClawWitness> out;
  for_each_modified_claw(g, [&](const ModifiedClawWitness& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

inline std::optional<ClawWitness> find_claw(const Graph& g) {
  std::optional<ClawWitness> found;
  for_each_claw(g, [&](const ClawWitness& w) {
    found = w;
    return false;
  });
  return found;
}

inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

}  // namespace cyclesmith
