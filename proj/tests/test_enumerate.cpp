#include <catch2/catch_amalgamated.hpp>
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "cyclesmith/enumerate.hpp"
#include "cyclesmith/errors.hpp"
#include "cyclesmith/generators.hpp"
#include "cyclesmith/graph.hpp"
#include "support/corpus.hpp"
#include "support/naive.hpp"

using namespace cyclesmith;

TEST_CASE("canonical code is permutation invariant") {
  std::mt19937_64 rng(2024);
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : testsupport::connected_corpus(n)) {
      uint64_t code = canonical_code(g);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::reverse(perm.begin(), perm.end());
      REQUIRE(canonical_code(testsupport::permute_graph(g, perm)) == code);
      std::iota(perm.begin(), perm.end(), 0);
      for (int trial = 0; trial < 4; ++trial) {
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
        REQUIRE(canonical_code(testsupport::permute_graph(g, perm)) == code);
      }
    }
}

TEST_CASE("connected graph counts per isomorphism class") {
  const int expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n)
    REQUIRE(int(testsupport::connected_corpus(n).size()) == expected[n]);
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : testsupport::connected_corpus(n)) {
      REQUIRE(g.vertex_count() == n);
      REQUIRE(testsupport::naive_connected(g));
    }
}

TEST_CASE("2-connected graph counts per isomorphism class") {
  const int expected[] = {0, 0, 0, 1, 3, 10, 56, 468};
  for (int n = 3; n <= 7; ++n) {
    const auto& tier = testsupport::two_connected_corpus(n);
    REQUIRE(int(tier.size()) == expected[n]);
    for (const Graph& g : tier) {
      REQUIRE(testsupport::naive_two_connected(g));
      for (Vertex v = 0; v < n; ++v) REQUIRE(g.degree(v) >= 2);
    }
  }
}

TEST_CASE("automorphism counts on fixed graphs") {
  REQUIRE(automorphism_count(named("complete", {{"n", 4}})) == 24);
  REQUIRE(automorphism_count(named("cycle", {{"n", 5}})) == 10);
  REQUIRE(automorphism_count(named("cycle", {{"n", 6}})) == 12);
  REQUIRE(automorphism_count(named("path", {{"n", 4}})) == 2);
  REQUIRE(automorphism_count(named("claw")) == 6);
  REQUIRE(automorphism_count(named("star", {{"k", 4}})) == 24);
  REQUIRE(automorphism_count(named("prism")) == 12);
}

TEST_CASE("orbit sums reproduce the labeled connected-graph counts") {
  // sum over classes of n!/|Aut| = number of labeled graphs, so the tiers
  // are complete and free of duplicates.
  auto labeled = testsupport::labeled_connected_counts(7);
  REQUIRE(labeled[7] == 1866256);
  for (int n = 1; n <= 7; ++n) {
    uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= uint64_t(i);
    uint64_t total = 0;
    for (const Graph& g : testsupport::connected_corpus(n))
      total += fact / uint64_t(automorphism_count(g));
    REQUIRE(total == labeled[n]);
  }
}

TEST_CASE("enumeration size guards") {
  REQUIRE_THROWS_AS(enumerate_connected(0), std::invalid_argument);
  REQUIRE_THROWS_AS(enumerate_connected(10), SizeCapError);
  REQUIRE_THROWS_AS(canonical_code(named("complete", {{"n", 12}})), SizeCapError);
  REQUIRE_THROWS_AS(automorphism_count(named("petersen")), SizeCapError);
}
