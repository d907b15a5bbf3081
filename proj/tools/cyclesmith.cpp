#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "cyclesmith/cyclefinder.hpp"
#include "cyclesmith/enumerate.hpp"
#include "cyclesmith/errors.hpp"
#include "cyclesmith/generators.hpp"
#include "cyclesmith/graph.hpp"
#include "cyclesmith/graph6.hpp"
#include "cyclesmith/hypothesis.hpp"
#include "cyclesmith/json_io.hpp"
#include "cyclesmith/longpath.hpp"
#include "cyclesmith/motif.hpp"
#include "cyclesmith/oracle.hpp"
#include "cyclesmith/verify.hpp"

namespace {

using namespace cyclesmith;

constexpr int kExitCounterexample = 2;
constexpr int kExitInput = 3;
constexpr int kExitCap = 4;

// Cap resolution: explicit flag, then CYCLESMITH_MAX_N, then the built-in
// default of the operation at hand.
int resolve_cap(int flag_value, int fallback) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("CYCLESMITH_MAX_N")) {
    std::string s(env);
    if (s.empty()) return fallback;
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (...) {
      pos = 0;
    }
    if (pos != s.size() || v <= 0)
      throw std::invalid_argument("CYCLESMITH_MAX_N must be a positive integer, got '" + s +
                                  "'");
    return v;
  }
  return fallback;
}

struct Input {
  std::ifstream file;
  std::istream* stream = nullptr;
};

void open_input(Input& in, const std::string& path) {
  if (path == "-") {
    in.stream = &std::cin;
    return;
  }
  in.file.open(path);
  if (!in.file) throw std::invalid_argument("cannot open input file '" + path + "'");
  in.stream = &in.file;
}

std::pair<int, int> parse_c_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("--c-range expects the form A..B, got '" + s + "'");
  auto parse_int = [&](const std::string& part) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(part, &pos);
    } catch (...) {
      pos = 0;
    }
    if (part.empty() || pos != part.size())
      throw std::invalid_argument("--c-range expects integers, got '" + s + "'");
    return v;
  };
  int lo = parse_int(s.substr(0, dots));
  int hi = parse_int(s.substr(dots + 2));
  if (lo < 3 || hi < lo)
    throw std::invalid_argument("--c-range needs 3 <= A <= B, got '" + s + "'");
  return {lo, hi};
}

int run_check(const std::string& input, const std::string& theorem_s, int c_flag, bool csv) {
  auto parsed = parse_theorem(theorem_s);
  if (!parsed) throw std::invalid_argument("check: unknown theorem '" + theorem_s + "'");
  Theorem thm = *parsed;
  std::optional<CycleTarget> c;
  if (thm != Theorem::shi) {
    if (c_flag < 0)
      throw std::invalid_argument("check: --c is required for theorem " + theorem_s);
    c = CycleTarget(c_flag);
  } else if (c_flag >= 0) {
    std::cerr << "check: --c is ignored for theorem shi\n";
  }
  Input in;
  open_input(in, input);
  Graph6Reader reader(*in.stream);
  while (auto g = reader.next()) {
    HypothesisReport rep = check_hypothesis(thm, *g, c);
    if (csv)
      std::cout << report_to_csv_row(write_graph6(*g), rep) << '\n';
    else
      std::cout << report_to_json(rep).dump() << '\n';
  }
  return 0;
}

int run_find(const std::string& input, int c_flag, bool trace, int max_n) {
  if (c_flag < 0) throw std::invalid_argument("find: --c is required");
  CycleTarget c(c_flag);
  int cap = resolve_cap(max_n, kDefaultExactSearchCap);
  Input in;
  open_input(in, input);
  Graph6Reader reader(*in.stream);
  bool cap_hit = false;
  while (auto g = reader.next()) {
    FindResult r = find_long_cycle(*g, c, cap);
    if (std::holds_alternative<SizeCapExceeded>(r.result)) cap_hit = true;
    std::cout << find_result_to_json(r, c, *g, trace).dump() << '\n';
  }
  return cap_hit ? kExitCap : 0;
}

int run_verify(const std::string& input, const std::string& c_range, int c_flag, int jobs,
               int max_n, const std::string& failures_path) {
  VerifyOptions opt;
  if (!c_range.empty() && c_flag >= 0)
    throw std::invalid_argument("verify: give either --c-range or --c, not both");
  if (!c_range.empty()) {
    auto [lo, hi] = parse_c_range(c_range);
    opt.c_lo = lo;
    opt.c_hi = hi;
  } else if (c_flag >= 0) {
    if (c_flag < 3) throw std::invalid_argument("verify: --c must be at least 3");
    opt.c_lo = opt.c_hi = c_flag;
  } else {
    throw std::invalid_argument("verify: --c-range A..B (or --c N) is required");
  }
  opt.jobs = jobs;
  opt.cap = resolve_cap(max_n, kDefaultExactSearchCap);
  opt.oracle_cap = std::max(opt.cap, oracle::kOracleCap);
  Input in;
  open_input(in, input);
  Graph6Reader reader(*in.stream);
  std::vector<Graph> graphs;
  while (auto g = reader.next()) graphs.push_back(std::move(*g));
  VerifySummary sum = verify_corpus(graphs, opt);
  std::cout << summary_to_json(sum).dump() << '\n';
  if (!sum.failures.empty()) {
    std::ofstream out(failures_path);
    if (!out) throw std::invalid_argument("cannot open failures file '" + failures_path + "'");
    for (const VerifyFailure& f : sum.failures) {
      out << f.graph6 << ' ' << f.c << ' ' << f.reason << '\n';
      std::cerr << "counterexample: " << f.graph6 << " c=" << f.c << ": " << f.reason << '\n';
    }
    std::cerr << "failures written to " << failures_path << '\n';
  }
  return sum.counterexamples > 0 ? kExitCounterexample : 0;
}

struct GenOptions {
  std::string family;
  std::map<std::string, int> params;
  bool random = false;
  bool all_two_connected = false;
  bool line = false;
  int n = -1;
  int extra = 0;
  uint64_t seed = 0;
  int count = 1;
  std::string out;
  std::string input = "-";
};

int run_gen(const GenOptions& o) {
  int modes = int(!o.family.empty()) + int(o.random) + int(o.all_two_connected) + int(o.line);
  if (modes != 1)
    throw std::invalid_argument(
        "gen: give exactly one of --family, --random, --all-two-connected, --line-graph");
  std::vector<std::string> lines;
  ordered_json manifest;
  if (!o.family.empty()) {
    auto params = o.params;
    if (o.n > 0 && !params.count("n")) params["n"] = o.n;
    lines.push_back(write_graph6(named(o.family, params)));
    manifest = ordered_json{{"generator", "named"}, {"family", o.family}, {"params", params}};
  } else if (o.random) {
    if (o.n < 3) throw std::invalid_argument("gen --random: --n must be at least 3");
    if (o.count < 1) throw std::invalid_argument("gen --random: --count must be at least 1");
    for (int i = 0; i < o.count; ++i)
      lines.push_back(
          write_graph6(random_two_connected(o.n, o.extra, splitmix64(o.seed + uint64_t(i)))));
    manifest = ordered_json{{"generator", "random_two_connected"},
                            {"n", o.n},
                            {"extra", o.extra},
                            {"seed", o.seed},
                            {"count", o.count},
                            {"seedDerivation", "splitmix64(seed + index)"},
                            {"rng", kRngIdentity}};
  } else if (o.all_two_connected) {
    if (o.n < 3) throw std::invalid_argument("gen --all-two-connected: --n must be at least 3");
    for (const Graph& g : enumerate_two_connected(o.n)) lines.push_back(write_graph6(g));
    manifest = ordered_json{{"generator", "all-two-connected"}, {"n", o.n}};
  } else {
    Input in;
    open_input(in, o.input);
    Graph6Reader reader(*in.stream);
    while (auto g = reader.next()) lines.push_back(write_graph6(line_graph(*g)));
    manifest = ordered_json{{"generator", "line_graph"}};
  }
  manifest["records"] = lines.size();
  if (o.out.empty()) {
    for (const auto& l : lines) std::cout << l << '\n';
  } else {
    std::ofstream out(o.out);
    if (!out) throw std::invalid_argument("cannot open output file '" + o.out + "'");
    for (const auto& l : lines) out << l << '\n';
    std::ofstream mf(o.out + ".manifest.json");
    if (!mf) throw std::invalid_argument("cannot write manifest next to '" + o.out + "'");
    mf << manifest.dump(2) << '\n';
  }
  return 0;
}

int run_oracle(const std::string& input, bool circ, bool lpath, bool ham, int max_n) {
  if (int(circ) + int(lpath) + int(ham) != 1)
    throw std::invalid_argument(
        "oracle: give exactly one of --circumference, --longest-path, --hamiltonian");
  int cap = resolve_cap(max_n, oracle::kOracleCap);
  Input in;
  open_input(in, input);
  Graph6Reader reader(*in.stream);
  while (auto g = reader.next()) {
    ordered_json j;
    if (circ) {
      auto cyc = oracle::circumference(*g, cap);
      if (cyc) {
        j["circumference"] = cyc->size();
        j["cycle"] = *cyc;
      } else {
        j["circumference"] = nullptr;
      }
    } else if (lpath) {
      Path p = oracle::brute_longest_path(*g, cap);
      j["length"] = p.size();
      j["path"] = p;
    } else {
      auto cyc = oracle::is_hamiltonian(*g, cap);
      j["hamiltonian"] = bool(cyc);
      if (cyc) j["cycle"] = *cyc;
    }
    std::cout << j.dump() << '\n';
  }
  return 0;
}

int run_motifs(const std::string& input, bool list) {
  Input in;
  open_input(in, input);
  Graph6Reader reader(*in.stream);
  while (auto g = reader.next()) {
    auto claws = enumerate_claws(*g);
    auto mods = enumerate_modified_claws(*g);
    ordered_json j;
    j["claws"] = claws.size();
    j["modifiedClaws"] = mods.size();
    if (list) {
      ordered_json cl = ordered_json::array();
      for (const auto& w : claws) cl.push_back(motif_to_json(w));
      ordered_json ml = ordered_json::array();
      for (const auto& w : mods) ml.push_back(motif_to_json(w));
      j["clawList"] = std::move(cl);
      j["modifiedClawList"] = std::move(ml);
    }
    std::cout << j.dump() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"machine verification of a long-cycle theorem on 2-connected graphs"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "evaluate a theorem hypothesis per input graph");
  std::string check_input = "-", check_theorem = "thm4";
  int check_c = -1;
  bool check_csv = false;
  check->add_option("input", check_input, "graph6 file, or - for stdin");
  check->add_option("--theorem", check_theorem, "fan|bcs|shi|thm4")
      ->check(CLI::IsMember({"fan", "bcs", "shi", "thm4"}));
  check->add_option("--c", check_c, "cycle length target (>= 3)");
  check->add_flag("--csv", check_csv, "CSV rows instead of JSON");

  auto* find = app.add_subcommand("find", "run the long-cycle driver per input graph");
  std::string find_input = "-";
  int find_c = -1, find_max_n = -1;
  bool find_trace = false;
  find->add_option("input", find_input, "graph6 file, or - for stdin");
  find->add_option("--c", find_c, "cycle length target (>= 3)");
  find->add_flag("--trace", find_trace, "embed rotation traces in the output");
  find->add_option("--max-n", find_max_n, "raise the exact-search size cap");

  auto* verify = app.add_subcommand("verify", "sweep a corpus and confirm every answer");
  std::string verify_input = "-", verify_crange, verify_failures = "cyclesmith_failures.txt";
  int verify_c = -1, verify_jobs = 1, verify_max_n = -1;
  verify->add_option("input", verify_input, "graph6 corpus file, or - for stdin");
  verify->add_option("--c-range", verify_crange, "inclusive target range A..B");
  verify->add_option("--c", verify_c, "single target, shorthand for N..N");
  verify->add_option("--jobs", verify_jobs, "worker threads");
  verify->add_option("--max-n", verify_max_n, "raise the exact-search size cap");
  verify->add_option("--failures", verify_failures, "failure record file");

  auto* gen = app.add_subcommand("gen", "emit graphs as graph6");
  GenOptions g;
  int gen_a = 0, gen_b = 0, gen_k = 0, gen_gon = 0;
  gen->add_option("input", g.input, "input graphs for --line-graph");
  gen->add_option("--family", g.family,
                  "complete|cycle|path|complete_bipartite|star|claw|modified_claw|petersen|prism");
  gen->add_option("--n", g.n, "vertex count parameter");
  auto* opt_a = gen->add_option("--a", gen_a, "left side of complete_bipartite");
  auto* opt_b = gen->add_option("--b", gen_b, "right side of complete_bipartite");
  auto* opt_k = gen->add_option("--k", gen_k, "leaf count of star");
  auto* opt_gon = gen->add_option("--gon", gen_gon, "cycle length of prism");
  gen->add_flag("--random", g.random, "cycle plus random chords");
  gen->add_option("--extra", g.extra, "chord count for --random");
  gen->add_option("--seed", g.seed, "RNG seed for --random");
  gen->add_option("--count", g.count, "number of graphs for --random");
  gen->add_flag("--all-two-connected", g.all_two_connected,
                "every 2-connected graph on --n vertices, one per isomorphism class");
  gen->add_flag("--line-graph", g.line, "emit the line graph of each input graph");
  gen->add_option("--out", g.out, "write to file plus .manifest.json sidecar");

  auto* orc = app.add_subcommand("oracle", "exhaustive reference answers");
  std::string orc_input = "-";
  bool orc_circ = false, orc_lpath = false, orc_ham = false;
  int orc_max_n = -1;
  orc->add_option("input", orc_input, "graph6 file, or - for stdin");
  orc->add_flag("--circumference", orc_circ, "longest cycle length");
  orc->add_flag("--longest-path", orc_lpath, "longest path by brute recursion");
  orc->add_flag("--hamiltonian", orc_ham, "Hamilton cycle search");
  orc->add_option("--max-n", orc_max_n, "raise the oracle size cap");

  auto* motifs = app.add_subcommand("motifs", "count claws and modified claws");
  std::string motifs_input = "-";
  bool motifs_list = false;
  motifs->add_option("input", motifs_input, "graph6 file, or - for stdin");
  motifs->add_flag("--list", motifs_list, "include full witness lists");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(check_input, check_theorem, check_c, check_csv);
    if (find->parsed()) return run_find(find_input, find_c, find_trace, find_max_n);
    if (verify->parsed())
      return run_verify(verify_input, verify_crange, verify_c, verify_jobs, verify_max_n,
                        verify_failures);
    if (gen->parsed()) {
      if (opt_a->count()) g.params["a"] = gen_a;
      if (opt_b->count()) g.params["b"] = gen_b;
      if (opt_k->count()) g.params["k"] = gen_k;
      if (opt_gon->count()) g.params["gon"] = gen_gon;
      return run_gen(g);
    }
    if (orc->parsed()) return run_oracle(orc_input, orc_circ, orc_lpath, orc_ham, orc_max_n);
    if (motifs->parsed()) return run_motifs(motifs_input, motifs_list);
  } catch (const Graph6Error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SizeCapError& e) {
    std::cerr << "size cap: " << e.what() << '\n';
    return kExitCap;
  } catch (const CounterexampleError& e) {
    std::cerr << "THEOREM COUNTEREXAMPLE: " << e.what() << '\n';
    return kExitCounterexample;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
