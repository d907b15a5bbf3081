#include <catch2/catch_amalgamated.hpp>
#include <set>
#include <stdexcept>
#include <string>

#include "cyclesmith/enumerate.hpp"
#include "cyclesmith/generators.hpp"
#include "cyclesmith/graph.hpp"
#include "cyclesmith/graph6.hpp"
#include "cyclesmith/motif.hpp"
#include "support/corpus.hpp"
#include "support/naive.hpp"

using namespace cyclesmith;

TEST_CASE("named families have the right shape") {
  Graph k5 = named("complete", {{"n", 5}});
  REQUIRE(k5.vertex_count() == 5);
  REQUIRE(k5.edge_count() == 10);

  Graph c6 = named("cycle", {{"n", 6}});
  REQUIRE(c6.edge_count() == 6);
  for (Vertex v = 0; v < 6; ++v) {
    REQUIRE(c6.degree(v) == 2);
    REQUIRE(c6.adjacent(v, (v + 1) % 6));
  }

  Graph p5 = named("path", {{"n", 5}});
  REQUIRE(p5.edge_count() == 4);
  REQUIRE(p5.degree(0) == 1);
  REQUIRE(p5.degree(2) == 2);
  REQUIRE(p5.degree(4) == 1);

  Graph k23 = named("complete_bipartite", {{"a", 2}, {"b", 3}});
  REQUIRE(k23.vertex_count() == 5);
  REQUIRE(k23.edge_count() == 6);
  REQUIRE(!k23.adjacent(0, 1));
  REQUIRE(!k23.adjacent(2, 3));
  REQUIRE(k23.adjacent(0, 2));
  REQUIRE(k23.adjacent(1, 4));

  Graph star = named("star", {{"k", 4}});
  REQUIRE(star.vertex_count() == 5);
  REQUIRE(star.degree(0) == 4);
  REQUIRE(star.degree(3) == 1);

  REQUIRE(testsupport::graphs_equal(named("claw"), named("star", {{"k", 3}})));

  Graph mc = named("modified_claw");
  REQUIRE(mc.vertex_count() == 4);
  REQUIRE(mc.edge_count() == 4);
  REQUIRE(enumerate_modified_claws(mc).size() == 1);
}

TEST_CASE("petersen is the 3-regular triangle-free graph of diameter 2") {
  Graph pet = named("petersen");
  REQUIRE(pet.vertex_count() == 10);
  REQUIRE(pet.edge_count() == 15);
  for (Vertex v = 0; v < 10; ++v) REQUIRE(pet.degree(v) == 3);
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = u + 1; v < 10; ++v) {
      if (pet.adjacent(u, v))
        REQUIRE(pet.common_neighbors(u, v).none());  // girth 5: no triangles
      else
        REQUIRE(pet.common_neighbors(u, v).count() == 1);  // strongly regular
    }
}

TEST_CASE("prisms") {
  Graph tri = named("prism");
  REQUIRE(tri.vertex_count() == 6);
  REQUIRE(tri.edge_count() == 9);
  for (Vertex v = 0; v < 6; ++v) REQUIRE(tri.degree(v) == 3);
  REQUIRE(tri.is_two_connected());

  Graph cube = named("prism", {{"gon", 4}});
  REQUIRE(cube.vertex_count() == 8);
  REQUIRE(cube.edge_count() == 12);
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = u + 1; v < 8; ++v)
      if (cube.adjacent(u, v)) REQUIRE(cube.common_neighbors(u, v).none());
}

TEST_CASE("named family parameter errors") {
  REQUIRE_THROWS_AS(named("cycle"), std::invalid_argument);
  REQUIRE_THROWS_AS(named("cycle", {{"n", 2}}), std::invalid_argument);
  REQUIRE_THROWS_AS(named("complete", {{"n", 0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(named("complete_bipartite", {{"a", 2}}), std::invalid_argument);
  REQUIRE_THROWS_AS(named("star", {{"k", 0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(named("prism", {{"gon", 2}}), std::invalid_argument);
  REQUIRE_THROWS_AS(named("mystery"), std::invalid_argument);
}

TEST_CASE("random 2-connected graphs are deterministic in the seed") {
  Graph a = random_two_connected(9, 5, 12345);
  Graph b = random_two_connected(9, 5, 12345);
  REQUIRE(testsupport::graphs_equal(a, b));
  REQUIRE(a.vertex_count() == 9);
  REQUIRE(a.edge_count() == 9 + 5);
  REQUIRE(a.is_two_connected());

  // Different seeds must reach different chord sets somewhere in a batch.
  std::set<std::string> distinct;
  for (uint64_t seed = 0; seed < 10; ++seed)
    distinct.insert(write_graph6(random_two_connected(9, 5, seed)));
  REQUIRE(distinct.size() > 1);

  for (int i = 0; i < 25; ++i) {
    int n = 5 + i % 6;
    Graph g = random_two_connected(n, i % 4, 999 + i);
    REQUIRE(g.edge_count() == n + i % 4);
    REQUIRE(g.is_two_connected());
  }
}

TEST_CASE("random 2-connected edge-count bounds") {
  // On 5 vertices there are exactly 5 chords, so 5 extras make K5.
  REQUIRE(testsupport::graphs_equal(random_two_connected(5, 5, 7),
                                    named("complete", {{"n", 5}})));
  REQUIRE_THROWS_AS(random_two_connected(5, 6, 7), std::invalid_argument);
  REQUIRE_THROWS_AS(random_two_connected(2, 0, 7), std::invalid_argument);
  REQUIRE_THROWS_AS(random_two_connected(5, -1, 7), std::invalid_argument);
  REQUIRE(testsupport::graphs_equal(random_two_connected(3, 0, 7),
                                    named("cycle", {{"n", 3}})));
}

TEST_CASE("line graphs") {
  REQUIRE(canonical_code(line_graph(named("cycle", {{"n", 5}}))) ==
          canonical_code(named("cycle", {{"n", 5}})));
  REQUIRE(canonical_code(line_graph(named("claw"))) ==
          canonical_code(named("complete", {{"n", 3}})));
  REQUIRE(canonical_code(line_graph(named("path", {{"n", 4}}))) ==
          canonical_code(named("path", {{"n", 3}})));
  Graph lk4 = line_graph(named("complete", {{"n", 4}}));
  REQUIRE(lk4.vertex_count() == 6);  // one per edge of K4
  for (Vertex v = 0; v < 6; ++v) REQUIRE(lk4.degree(v) == 4);
  REQUIRE_THROWS_AS(line_graph(named("path", {{"n", 1}})), std::invalid_argument);

  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : testsupport::connected_corpus(n))
      REQUIRE(is_claw_free(line_graph(g)));
}

TEST_CASE("splitmix64 reference vectors") {
  REQUIRE(splitmix64(0) == 0xE220A8397B1DCDAFULL);
  REQUIRE(splitmix64(0x9e3779b97f4a7c15ULL) == 0x6E789E6AA1B965F4ULL);
}
