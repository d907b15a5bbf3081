#include <catch2/catch_amalgamated.hpp>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cyclesmith/errors.hpp"
#include "cyclesmith/generators.hpp"
#include "cyclesmith/graph.hpp"
#include "cyclesmith/graph6.hpp"
#include "cyclesmith/hypothesis.hpp"
#include "cyclesmith/longpath.hpp"
#include "cyclesmith/oracle.hpp"
#include "cyclesmith/path.hpp"
#include "support/corpus.hpp"

using namespace cyclesmith;

TEST_CASE("longest path on fixed graphs") {
  REQUIRE(longest_path(named("path", {{"n", 5}})) == Path{0, 1, 2, 3, 4});
  REQUIRE(longest_path(named("cycle", {{"n", 6}})).size() == 6);
  REQUIRE(longest_path(named("complete", {{"n", 4}})) == Path{0, 1, 2, 3});
  REQUIRE(longest_path(named("petersen")).size() == 10);
  REQUIRE(longest_path(named("star", {{"k", 3}})) == Path{1, 0, 2});
}

TEST_CASE("longest path matches the brute oracle including tie-break") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : testsupport::connected_corpus(n))
      REQUIRE(longest_path(g) == oracle::brute_longest_path(g));
  for (int i = 0; i < 30; ++i) {
    int n = 6 + i % 5;
    Graph g = random_two_connected(n, int(splitmix64(i) % 8), 4200 + i);
    REQUIRE(longest_path(g) == oracle::brute_longest_path(g));
  }
}

TEST_CASE("subset table and branch-and-bound agree") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : testsupport::connected_corpus(n)) {
      Path dp = longest_path(g);
      longpath_detail::BranchAndBound bb(g);
      REQUIRE(bb.max_length() == static_cast<int>(dp.size()));
      auto bp = bb.lex_path(static_cast<int>(dp.size()), -1);
      REQUIRE(bp.has_value());
      REQUIRE(*bp == dp);
    }
}

TEST_CASE("longest path ending at a vertex") {
  Graph p5 = named("path", {{"n", 5}});
  REQUIRE(!longest_path_ending_at(p5, 2).has_value());
  auto at4 = longest_path_ending_at(p5, 4);
  REQUIRE(at4.has_value());
  REQUIRE(*at4 == Path{0, 1, 2, 3, 4});
  auto at0 = longest_path_ending_at(p5, 0);
  REQUIRE(at0.has_value());
  REQUIRE(*at0 == Path{4, 3, 2, 1, 0});
  REQUIRE_THROWS_AS(longest_path_ending_at(p5, 9), std::out_of_range);

  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : testsupport::connected_corpus(n)) {
      int best = static_cast<int>(longest_path(g).size());
      for (Vertex v = 0; v < n; ++v) {
        auto p = longest_path_ending_at(g, v);
        if (p) {
          REQUIRE(static_cast<int>(p->size()) == best);
          REQUIRE(p->back() == v);
          REQUIRE(is_valid_path(g, *p));
        }
      }
    }
}

TEST_CASE("t index") {
  REQUIRE(t_of(named("path", {{"n", 4}}), Path{0, 1, 2, 3}) == 2);
  Graph c5 = named("cycle", {{"n", 5}});
  REQUIRE(t_of(c5, Path{0, 1, 2, 3, 4}) == 5);
  REQUIRE_THROWS_AS(t_of(c5, Path{0}), std::invalid_argument);
  REQUIRE_THROWS_AS(t_of(c5, Path{0, 2}), PreconditionError);
}

TEST_CASE("size cap") {
  Graph k20 = named("complete", {{"n", 20}});
  REQUIRE_THROWS_AS(longest_path(k20), SizeCapError);
  REQUIRE(longest_path(k20, 20).size() == 20);
}

TEST_CASE("improve leaves a qualified Hamilton path alone") {
  Graph p = named("petersen");
  Path hp = longest_path(p);
  REQUIRE(hp.size() == 10);
  auto r = lemma2_improve(p, hp, CycleTarget(6));
  auto* imp = std::get_if<Improved>(&r.outcome);
  REQUIRE(imp);
  REQUIRE(imp->path == hp);
  REQUIRE(r.trace.empty());
  REQUIRE(r.restarts == 0);
}

TEST_CASE("improve closes a cycle immediately on C_n with c = n") {
  Graph c6 = named("cycle", {{"n", 6}});
  auto r = lemma2_improve(c6, longest_path(c6), CycleTarget(6));
  auto* ham = std::get_if<HamiltonCycle>(&r.outcome);
  REQUIRE(ham);
  REQUIRE(is_valid_cycle(c6, ham->cycle));
  REQUIRE(ham->cycle.size() == 6);
  REQUIRE(r.trace.size() == 1);
  REQUIRE(r.trace[0].rule == StepRule::CycleClose);
}

TEST_CASE("improve preconditions") {
  Graph c6 = named("cycle", {{"n", 6}});
  REQUIRE_THROWS_AS(lemma2_improve(c6, Path{0, 2, 4}, CycleTarget(6)), PreconditionError);
  Graph p4 = named("path", {{"n", 4}});
  REQUIRE_THROWS_AS(lemma2_improve(p4, Path{0, 1, 2, 3}, CycleTarget(4)), PreconditionError);
}

TEST_CASE("step requires an unqualified first end") {
  Graph k4 = named("complete", {{"n", 4}});
  REQUIRE_THROWS_AS(lemma2_step(k4, Path{0, 1, 2, 3}, CycleTarget(4)), PreconditionError);
}

TEST_CASE("every step rule fires on a recorded instance") {
  struct Instance {
    const char* g6;
    int c;
    Vertex end;
    std::vector<const char*> rules;
    bool hamilton;
  };
  const std::vector<Instance> instances = {
      {"Bw", 5, 0, {"cycle-close"}, true},
      {"Dq{", 7, 3, {"far-chord-rotate"}, false},
      {"FsQ`w", 5, 3, {"far-claw-finish"}, false},
      {"Eqlo", 7, 3, {"pick-common-neighbor", "inner-splice-rotate", "cycle-close"}, true},
      {"FsZao", 9, 4, {"pick-common-neighbor", "inner-chord-rotate", "cycle-close"}, true},
      {"GsOvRk", 9, 4, {"pick-common-neighbor", "inner-claw-finish"}, false},
  };
  for (const Instance& in : instances) {
    CAPTURE(in.g6, in.c, in.end);
    Graph g = parse_graph6(in.g6);
    auto p = longest_path_ending_at(g, in.end);
    REQUIRE(p.has_value());
    REQUIRE(2 * g.degree(p->front()) < in.c);
    auto r = lemma2_improve(g, *p, CycleTarget(in.c));
    REQUIRE(r.restarts == 0);
    REQUIRE(r.trace.size() == in.rules.size());
    for (size_t i = 0; i < in.rules.size(); ++i)
      REQUIRE(std::string(step_rule_name(r.trace[i].rule)) == in.rules[i]);
    if (in.hamilton) {
      auto* ham = std::get_if<HamiltonCycle>(&r.outcome);
      REQUIRE(ham);
      REQUIRE(is_valid_cycle(g, ham->cycle));
      REQUIRE(static_cast<int>(ham->cycle.size()) == g.vertex_count());
    } else {
      auto* imp = std::get_if<Improved>(&r.outcome);
      REQUIRE(imp);
      REQUIRE(is_valid_path(g, imp->path));
      REQUIRE(imp->path.size() == p->size());
      REQUIRE(imp->path.back() == p->back());
      REQUIRE(2 * g.degree(imp->path.front()) >= in.c);
    }
  }
}

TEST_CASE("a closing chord on a non-maximal path triggers a restart") {
  Graph diamond = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  auto r = lemma2_improve(diamond, Path{0, 1, 2}, CycleTarget(5));
  REQUIRE(r.restarts == 1);
  REQUIRE(r.trace.size() == 2);
  REQUIRE(r.trace[0].rule == StepRule::LongerPathRestart);
  REQUIRE(r.trace[1].rule == StepRule::CycleClose);
  auto* ham = std::get_if<HamiltonCycle>(&r.outcome);
  REQUIRE(ham);
  REQUIRE(is_valid_cycle(diamond, ham->cycle));
  REQUIRE(ham->cycle.size() == 4);
}

TEST_CASE("improve postconditions across the small corpus") {
  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : testsupport::two_connected_corpus(n)) {
      Path base = longest_path(g);
      int circ = testsupport::circumference_cached(g);
      for (int c = 3; c <= n + 2; ++c) {
        if (!check_thm4(g, CycleTarget(c)).holds) continue;
        auto r = lemma2_improve(g, base, CycleTarget(c));
        REQUIRE(r.restarts == 0);
        if (auto* ham = std::get_if<HamiltonCycle>(&r.outcome)) {
          REQUIRE(is_valid_cycle(g, ham->cycle));
          REQUIRE(static_cast<int>(ham->cycle.size()) == n);
          REQUIRE(circ == n);
        } else {
          auto* imp = std::get_if<Improved>(&r.outcome);
          REQUIRE(imp);
          REQUIRE(imp->path.size() == base.size());
          REQUIRE(imp->path.back() == base.back());
          REQUIRE(2 * g.degree(imp->path.front()) >= c);
          REQUIRE(is_valid_path(g, imp->path));
        }
        for (const RotationStep& s : r.trace) {
          REQUIRE(s.t_after >= s.t_before);
          if (s.rule == StepRule::FarChordRotate || s.rule == StepRule::InnerChordRotate ||
              s.rule == StepRule::InnerSpliceRotate)
            REQUIRE(s.t_after > s.t_before);
          REQUIRE(is_valid_path(g, s.path_after));
        }
      }
    }
}
