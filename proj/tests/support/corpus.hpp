#pragma once

// Shared per-process corpus cache so every test file can sweep the same
// graphs without re-running the enumerator.

#include <map>
#include <string>
#include <vector>

#include "cyclesmith/enumerate.hpp"
#include "cyclesmith/graph.hpp"
#include "cyclesmith/graph6.hpp"
#include "cyclesmith/oracle.hpp"

namespace testsupport {

inline const std::vector<cyclesmith::Graph>& connected_corpus(int n) {
  static std::map<int, std::vector<cyclesmith::Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, cyclesmith::enumerate_connected(n)).first;
  return it->second;
}

inline const std::vector<cyclesmith::Graph>& two_connected_corpus(int n) {
  static std::map<int, std::vector<cyclesmith::Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<cyclesmith::Graph> tier;
    for (const cyclesmith::Graph& g : connected_corpus(n))
      if (g.is_two_connected()) tier.push_back(g);
    it = cache.emplace(n, std::move(tier)).first;
  }
  return it->second;
}

// Oracle circumference, cached by graph6 key; 0 means acyclic.
inline int circumference_cached(const cyclesmith::Graph& g) {
  static std::map<std::string, int> cache;
  std::string key = cyclesmith::write_graph6(g);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto cyc = cyclesmith::oracle::circumference(g);
    it = cache.emplace(key, cyc ? int(cyc->size()) : 0).first;
  }
  return it->second;
}

}  // namespace testsupport
