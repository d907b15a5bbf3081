#include <catch2/catch_amalgamated.hpp>
#include <algorithm>
#include <stdexcept>

#include "cyclesmith/cyclefinder.hpp"
#include "cyclesmith/errors.hpp"
#include "cyclesmith/generators.hpp"
#include "cyclesmith/graph.hpp"
#include "cyclesmith/oracle.hpp"
#include "cyclesmith/path.hpp"

using namespace cyclesmith;

TEST_CASE("oracle circumference on fixed graphs") {
  auto c7 = oracle::circumference(named("cycle", {{"n", 7}}));
  REQUIRE(c7.has_value());
  REQUIRE(*c7 == Cycle{0, 1, 2, 3, 4, 5, 6});

  auto k4 = oracle::circumference(named("complete", {{"n", 4}}));
  REQUIRE(k4.has_value());
  REQUIRE(k4->size() == 4);

  REQUIRE(!oracle::circumference(named("path", {{"n", 5}})).has_value());
  REQUIRE(!oracle::circumference(named("star", {{"k", 4}})).has_value());
  REQUIRE(!oracle::circumference(named("path", {{"n", 1}})).has_value());

  Graph pet = named("petersen");
  auto pc = oracle::circumference(pet);
  REQUIRE(pc.has_value());
  REQUIRE(pc->size() == 9);
  REQUIRE(is_valid_cycle(pet, *pc));
  // Two independent searches, one answer: both emit the lex-least maximum.
  REQUIRE(*pc == *max_cycle_exact(pet));
}

TEST_CASE("oracle longest path on fixed graphs") {
  REQUIRE(oracle::brute_longest_path(named("path", {{"n", 5}})) == Path{0, 1, 2, 3, 4});
  REQUIRE(oracle::brute_longest_path(named("star", {{"k", 3}})) == Path{1, 0, 2});
  REQUIRE(oracle::brute_longest_path(Graph::from_edge_list(1, {})) == Path{0});
  REQUIRE_THROWS_AS(oracle::brute_longest_path(Graph::from_edge_list(0, {})),
                    std::invalid_argument);
}

TEST_CASE("oracle Hamilton search") {
  auto c4 = oracle::is_hamiltonian(named("cycle", {{"n", 4}}));
  REQUIRE(c4.has_value());
  REQUIRE(*c4 == Cycle{0, 1, 2, 3});

  auto c5 = oracle::is_hamiltonian(named("cycle", {{"n", 5}}));
  REQUIRE(c5.has_value());
  REQUIRE(*c5 == Cycle{0, 1, 2, 3, 4});

  auto k33 = oracle::is_hamiltonian(named("complete_bipartite", {{"a", 3}, {"b", 3}}));
  REQUIRE(k33.has_value());
  REQUIRE(k33->size() == 6);
  REQUIRE(is_valid_cycle(named("complete_bipartite", {{"a", 3}, {"b", 3}}), *k33));

  REQUIRE(!oracle::is_hamiltonian(named("complete_bipartite", {{"a", 2}, {"b", 3}})).has_value());
  REQUIRE(!oracle::is_hamiltonian(named("path", {{"n", 4}})).has_value());
  REQUIRE(!oracle::is_hamiltonian(named("path", {{"n", 2}})).has_value());
  REQUIRE(!oracle::is_hamiltonian(named("petersen")).has_value());
}

TEST_CASE("naive motif scan on fixed graphs") {
  auto pet = oracle::scan_motifs_naive(named("petersen"));
  REQUIRE(pet.claws.size() == 10);
  REQUIRE(pet.modified_claws.empty());

  auto k23 = oracle::scan_motifs_naive(named("complete_bipartite", {{"a", 2}, {"b", 3}}));
  REQUIRE(k23.claws.size() == 2);
  REQUIRE(k23.claws[0] == ClawWitness{0, {2, 3, 4}});
  REQUIRE(k23.claws[1] == ClawWitness{1, {2, 3, 4}});
  REQUIRE(k23.modified_claws.empty());

  auto mc = oracle::scan_motifs_naive(named("modified_claw"));
  REQUIRE(mc.claws.empty());
  REQUIRE(mc.modified_claws.size() == 1);
  REQUIRE(mc.modified_claws[0] == ModifiedClawWitness{0, {1, 2}, 3});

  auto star = oracle::scan_motifs_naive(named("star", {{"k", 4}}));
  REQUIRE(star.claws.size() == 4);
  REQUIRE(star.modified_claws.empty());

  auto c6 = oracle::scan_motifs_naive(named("cycle", {{"n", 6}}));
  REQUIRE(c6.claws.empty());
  REQUIRE(c6.modified_claws.empty());

  auto prism = oracle::scan_motifs_naive(named("prism"));
  REQUIRE(prism.claws.empty());
  REQUIRE(prism.modified_claws.size() == 6);
}

TEST_CASE("oracle size caps") {
  Graph k15 = named("complete", {{"n", 15}});
  REQUIRE_THROWS_AS(oracle::circumference(k15), SizeCapError);
  REQUIRE_THROWS_AS(oracle::brute_longest_path(k15), SizeCapError);
  REQUIRE_THROWS_AS(oracle::is_hamiltonian(k15), SizeCapError);
  REQUIRE_THROWS_AS(oracle::scan_motifs_naive(named("complete", {{"n", 17}})), SizeCapError);
  // Raised caps admit the same graphs.
  REQUIRE(oracle::is_hamiltonian(k15, 15).has_value());
}
