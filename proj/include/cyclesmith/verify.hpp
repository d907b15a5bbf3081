#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "cyclesmith/cyclefinder.hpp"
#include "cyclesmith/errors.hpp"
#include "cyclesmith/graph.hpp"
#include "cyclesmith/graph6.hpp"
#include "cyclesmith/hypothesis.hpp"
#include "cyclesmith/longpath.hpp"
#include "cyclesmith/oracle.hpp"
#include "cyclesmith/path.hpp"

namespace cyclesmith {

struct VerifyOptions {
  int c_lo = 3;
  int c_hi = 3;
  int jobs = 1;
  int cap = kDefaultExactSearchCap;
  int oracle_cap = oracle::kOracleCap;
};

struct VerifyFailure {
  std::string graph6;
  int c = 0;
  std::string reason;
};

struct VerifySummary {
  int64_t graphs = 0;
  int64_t hypothesis_passes = 0;
  int64_t verified = 0;
  int64_t counterexamples = 0;
  std::vector<VerifyFailure> failures;
};

namespace verify_detail {

struct GraphOutcome {
  int64_t hypothesis_passes = 0;
  int64_t verified = 0;
  int64_t counterexamples = 0;
  std::vector<VerifyFailure> failures;
  std::string fatal;  // empty unless the graph aborted the run
  bool fatal_is_cap = false;
};

// One graph, every c in range. The oracle circumference is computed at most
// once per graph. Each engine answer is re-validated from scratch and then
// compared to the oracle before it counts as verified.
inline GraphOutcome check_one_graph(const Graph& g, const VerifyOptions& opt) {
  GraphOutcome out;
  if (!g.is_two_connected()) return out;
  std::string code = write_graph6(g);
  const int n = g.vertex_count();
  std::optional<int> circ;
  auto circumference_of_g = [&]() {
    if (!circ) {
      auto cyc = oracle::circumference(g, opt.oracle_cap);
      circ = cyc ? static_cast<int>(cyc->size()) : 0;
    }
    return *circ;
  };
  for (int c = opt.c_lo; c <= opt.c_hi; ++c) {
    HypothesisReport report = check_thm4(g, CycleTarget(c));
    if (!report.holds) {
      if (!report.violation || !violation_certified(g, *report.violation, c)) {
        ++out.counterexamples;
        out.failures.push_back({code, c, "violation failed certification"});
      }
      continue;
    }
    ++out.hypothesis_passes;
    FindResult r;
    try {
      r = find_long_cycle(g, CycleTarget(c), opt.cap);
    } catch (const CounterexampleError& e) {
      ++out.counterexamples;
      out.failures.push_back({code, c, e.what()});
      continue;
    } catch (const std::logic_error& e) {
      ++out.counterexamples;
      out.failures.push_back({code, c, std::string("engine invariant breach: ") + e.what()});
      continue;
    }
    if (auto* h = std::get_if<Hamilton>(&r.result)) {
      if (!is_valid_cycle(g, h->cycle) || static_cast<int>(h->cycle.size()) != n)
        out.failures.push_back({code, c, "claimed Hamilton cycle is not one"});
      else if (circumference_of_g() != n)
        out.failures.push_back({code, c, "oracle denies a spanning cycle"});
      else {
        ++out.verified;
        continue;
      }
      ++out.counterexamples;
    } else if (auto* lc = std::get_if<LongCycle>(&r.result)) {
      if (!is_valid_cycle(g, lc->cycle) ||
          static_cast<int>(lc->cycle.size()) != lc->achieved_length)
        out.failures.push_back({code, c, "claimed cycle is invalid"});
      else if (lc->achieved_length < std::min(n, c))
        out.failures.push_back({code, c, "cycle shorter than min(n, c)"});
      else if (circumference_of_g() < lc->achieved_length)
        out.failures.push_back({code, c, "cycle longer than the oracle circumference"});
      else {
        ++out.verified;
        continue;
      }
      ++out.counterexamples;
    } else if (std::holds_alternative<SizeCapExceeded>(r.result)) {
      out.fatal = "graph " + code + " exceeds the search cap " + std::to_string(opt.cap);
      out.fatal_is_cap = true;
      return out;
    } else {
      ++out.counterexamples;
      out.failures.push_back({code, c, "driver returned an impossible variant"});
    }
  }
  return out;
}

}  // namespace verify_detail

// Counts and failure rows are merged in input order, so any jobs value
// produces byte-identical output.
inline VerifySummary verify_corpus(const std::vector<Graph>& graphs, const VerifyOptions& opt) {
  if (opt.c_lo < 3 || opt.c_hi < opt.c_lo)
    throw std::invalid_argument("verify_corpus: need 3 <= c_lo <= c_hi");
  int jobs = std::max(1, opt.jobs);
  std::vector<verify_detail::GraphOutcome> slots(graphs.size());
  auto worker = [&](int w) {
    for (size_t i = w; i < graphs.size(); i += jobs)
      slots[i] = verify_detail::check_one_graph(graphs[i], opt);
  };
  if (jobs == 1 || graphs.size() <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  VerifySummary sum;
  sum.graphs = static_cast<int64_t>(graphs.size());
  for (auto& slot : slots) {
    if (!slot.fatal.empty()) {
      if (slot.fatal_is_cap) throw SizeCapError(slot.fatal);
      throw std::logic_error(slot.fatal);
    }
    sum.hypothesis_passes += slot.hypothesis_passes;
    sum.verified += slot.verified;
    sum.counterexamples += slot.counterexamples;
    for (auto& f : slot.failures) sum.failures.push_back(std::move(f));
  }
  return sum;
}

}  // namespace cyclesmith
