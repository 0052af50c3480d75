// Command line front end: instance generation, reduction export, solving,
// brute-force oracle queries, identity verification, and benchmarking.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vcut/connectivity.hpp"
#include "vcut/instance_io.hpp"
#include "vcut/oracle.hpp"
#include "vcut/random_instance.hpp"
#include "vcut/reduction.hpp"
#include "vcut/selfcheck.hpp"

namespace {

using namespace vcut;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Instance load_instance(const std::string& path) {
  if (path == "-") return parse_instance(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_instance(in);
}

int instance_order(const Instance& inst) {
  if (const auto* g = std::get_if<DirectedGraph>(&inst)) return g->vertex_count();
  return std::get<UndirectedGraph>(inst).vertex_count();
}

VertexId parse_vertex(const std::string& token, int n) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw UsageError("expected a vertex id, got `" + token + "`");
  }
  if (used != token.size()) throw UsageError("expected a vertex id, got `" + token + "`");
  if (v < 1 || v > n)
    fail(ErrorCode::VertexOutOfRange,
         "vertex " + std::to_string(v) + " out of range [1," + std::to_string(n) + "]");
  return static_cast<VertexId>(v - 1);
}

struct VariantSpec {
  VariantQuery query;
  std::string name;
};

VariantSpec parse_variant_tokens(std::vector<std::string> tokens, int n) {
  if (tokens.empty()) tokens = {"global"};
  VariantSpec spec;
  const std::string& kind = tokens[0];
  auto expect_args = [&](std::size_t count) {
    if (tokens.size() != count + 1)
      throw UsageError("variant `" + kind + "` takes " + std::to_string(count) +
                       " argument(s)");
  };
  if (kind == "global") {
    expect_args(0);
    spec.query.kind = VariantQuery::Kind::Global;
    spec.name = "global";
  } else if (kind == "pair") {
    expect_args(2);
    spec.query.kind = VariantQuery::Kind::Pair;
    spec.query.s = parse_vertex(tokens[1], n);
    spec.query.t = parse_vertex(tokens[2], n);
    spec.name = "pair " + tokens[1] + " " + tokens[2];
  } else if (kind == "source") {
    expect_args(1);
    spec.query.kind = VariantQuery::Kind::Source;
    spec.query.s = parse_vertex(tokens[1], n);
    spec.name = "source " + tokens[1];
  } else if (kind == "sink") {
    expect_args(1);
    spec.query.kind = VariantQuery::Kind::Sink;
    spec.query.t = parse_vertex(tokens[1], n);
    spec.name = "sink " + tokens[1];
  } else if (kind == "steiner") {
    if (tokens.size() < 2) throw UsageError("variant `steiner` needs a terminal list");
    std::string joined;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (i > 1) joined += ',';
      joined += tokens[i];
    }
    std::stringstream parts(joined);
    std::string item;
    while (std::getline(parts, item, ','))
      if (!item.empty()) spec.query.terminals.push_back(parse_vertex(item, n));
    if (spec.query.terminals.empty())
      throw UsageError("variant `steiner` needs a terminal list");
    spec.query.kind = VariantQuery::Kind::Steiner;
    spec.name = "steiner " + joined;
  } else if (kind == "all-pairs") {
    expect_args(0);
    spec.query.kind = VariantQuery::Kind::AllPairs;
    spec.name = "all-pairs";
  } else {
    throw UsageError("unknown variant `" + kind + "`");
  }
  return spec;
}

void print_set_line(const char* label, const VertexSet& s) {
  std::cout << label;
  for (VertexId v : s) std::cout << ' ' << v + 1;
  std::cout << '\n';
}

void print_time_line(double ms) {
  std::cout << "time_ms " << std::fixed << std::setprecision(3) << ms << '\n';
  std::cout.unsetf(std::ios::fixed);
}

void print_value_report(const std::string& variant, const std::string& via,
                        const CutValue& value, const std::optional<VertexCut>& cut,
                        bool witness, double ms) {
  std::cout << "variant " << variant << '\n';
  std::cout << "via " << via << '\n';
  std::cout << "value " << value.str() << '\n';
  if (witness && value.is_finite() && cut) {
    print_set_line("left", cut->left);
    print_set_line("separator", cut->separator);
    print_set_line("right", cut->right);
  }
  print_time_line(ms);
}

void print_matrix_report(const std::string& variant, const std::string& via,
                         const std::vector<std::vector<CutValue>>& matrix, double ms) {
  std::cout << "variant " << variant << '\n';
  std::cout << "via " << via << '\n';
  std::cout << "matrix " << matrix.size() << '\n';
  for (const auto& row : matrix) {
    for (std::size_t i = 0; i < row.size(); ++i)
      std::cout << (i ? " " : "") << row[i].str();
    std::cout << '\n';
  }
  print_time_line(ms);
}

// --- gen ---

struct GenArgs {
  std::string model = "gnp";
  int n = 1;
  double p = 0.5;
  std::int64_t wmax = 1;
  std::uint64_t seed = 1;
};

int run_gen(const GenArgs& args) {
  if (args.model != "gnp") throw UsageError("unknown model `" + args.model + "`");
  if (args.n < 1) throw UsageError("--n must be at least 1");
  if (args.p < 0.0 || args.p > 1.0) throw UsageError("--p must lie in [0,1]");
  if (args.wmax < 1) throw UsageError("--wmax must be at least 1");
  DirectedGraph g = random_digraph(
      {.n = args.n, .p = args.p, .max_weight = args.wmax, .seed = args.seed});
  print_instance(std::cout, g);
  return 0;
}

// --- reduce ---

int run_reduce(const std::string& input) {
  Instance inst = load_instance(input);
  const auto* g = std::get_if<DirectedGraph>(&inst);
  if (!g) throw UsageError("reduce expects a directed instance (`p dvc ...`)");
  ReducedGraph r = build_reduction(*g);
  print_instance(std::cout, r.graph());
  return 0;
}

// --- solve ---

struct SolveArgs {
  std::string input;
  std::vector<std::string> variant;
  std::string via;
  bool witness = false;
};

int run_solve(const SolveArgs& args) {
  Instance inst = load_instance(args.input);
  VariantSpec spec = parse_variant_tokens(args.variant, instance_order(inst));
  if (!args.via.empty() && args.via != "reduction" && args.via != "direct")
    throw UsageError("--via must be `reduction` or `direct`");

  if (const auto* g = std::get_if<DirectedGraph>(&inst)) {
    SolvePath path = args.via == "direct" ? SolvePath::Direct : SolvePath::Reduction;
    const char* via = path == SolvePath::Direct ? "direct" : "reduction";
    auto start = Clock::now();
    if (spec.query.kind == VariantQuery::Kind::AllPairs) {
      auto matrix = directed_all_pairs(*g, path);
      print_matrix_report(spec.name, via, matrix, ms_since(start));
    } else {
      Solution sol = solve_variant(*g, spec.query, path);
      print_value_report(spec.name, via, sol.value, sol.cut, args.witness, ms_since(start));
    }
    return 0;
  }

  if (args.via == "reduction")
    throw UsageError("the reduction path applies to directed instances");
  const auto& g = std::get<UndirectedGraph>(inst);
  auto start = Clock::now();
  if (spec.query.kind == VariantQuery::Kind::AllPairs) {
    auto matrix = undirected_all_pairs(g);
    print_matrix_report(spec.name, "direct", matrix, ms_since(start));
  } else {
    Solution sol = solve_variant(g, spec.query);
    print_value_report(spec.name, "direct", sol.value, sol.cut, args.witness,
                       ms_since(start));
  }
  return 0;
}

// --- oracle ---

struct OracleArgs {
  std::string input;
  std::vector<std::string> variant;
  bool witness = false;
  int max_n = 12;
};

int run_oracle(const OracleArgs& args) {
  Instance inst = load_instance(args.input);
  VariantSpec spec = parse_variant_tokens(args.variant, instance_order(inst));
  int shift = std::min(args.max_n, 40);
  OracleBudget budget{args.max_n,
                      std::max<std::int64_t>(std::int64_t(1) << 20, std::int64_t(1) << shift)};
  auto start = Clock::now();
  auto run = [&](const auto& g) {
    if (spec.query.kind == VariantQuery::Kind::AllPairs) {
      print_matrix_report(spec.name, "oracle", oracle_all_pairs(g, budget), ms_since(start));
    } else {
      OracleResult r = oracle_variant(g, spec.query, budget);
      print_value_report(spec.name, "oracle", r.value, r.cut, args.witness, ms_since(start));
    }
  };
  std::visit(run, inst);
  return 0;
}

// --- verify ---

struct VerifyArgs {
  int trials = 100;
  int max_n = 8;
  std::uint64_t seed = 1;
};

struct Tally {
  int pass = 0;
  int fail = 0;
  int skip = 0;
};

int run_verify(const VerifyArgs& args) {
  if (args.trials < 0) throw UsageError("--trials must be nonnegative");
  if (args.max_n < 1) throw UsageError("--max-n must be at least 1");
  constexpr int kOracleGlobalMax = 18;  // reduced graph enumerated up to 2n vertices
  constexpr int kOraclePairMax = 12;

  const std::vector<std::string> names = {
      "size-identity",     "neighborhood-identity", "global-equivalence",
      "global-shift",      "pair-equivalence",      "pairs-vs-oracle",
      "source-sink-steiner", "witness-roundtrip",   "flow-vs-oracle"};
  std::map<std::string, Tally> tallies;
  std::mt19937_64 meta(args.seed);
  std::optional<std::string> first_failure;
  std::string reproducer;
  bool budget_skips = false;

  for (int trial = 0; trial < args.trials; ++trial) {
    int n = 1 + static_cast<int>(meta() % static_cast<std::uint64_t>(args.max_n));
    double p = static_cast<double>(meta() % 11) / 10.0;
    std::int64_t wmax = std::vector<std::int64_t>{1, 2, 5, 10}[meta() % 4];
    std::uint64_t inst_seed = meta();
    DirectedGraph g = random_digraph({.n = n, .p = p, .max_weight = wmax, .seed = inst_seed});

    auto record = [&](const std::string& name, const selfcheck::CheckStatus& status) {
      Tally& t = tallies[name];
      switch (status.kind) {
        case selfcheck::CheckStatus::Pass:
          ++t.pass;
          break;
        case selfcheck::CheckStatus::Skip:
          ++t.skip;
          if (status.detail.find("budget") != std::string::npos) budget_skips = true;
          break;
        case selfcheck::CheckStatus::Fail:
          ++t.fail;
          if (!first_failure) {
            first_failure = name + ": " + status.detail;
            std::ostringstream os;
            os << "reproducer n=" << n << " p=" << p << " wmax=" << wmax
               << " seed=" << inst_seed;
            reproducer = os.str();
          }
          break;
      }
    };

    record("size-identity", selfcheck::check_size_identity(g));
    record("neighborhood-identity",
           selfcheck::check_neighborhood_identity(g, 200, inst_seed + 1));
    record("global-equivalence", selfcheck::check_global_equivalence(g));
    record("global-shift", selfcheck::check_global_oracle_shift(g, kOracleGlobalMax));
    record("pair-equivalence", selfcheck::check_pair_equivalence(g));
    record("pairs-vs-oracle", selfcheck::check_pairs_vs_oracle(g, kOraclePairMax));
    record("source-sink-steiner",
           selfcheck::check_source_sink_steiner(g, inst_seed + 2, kOraclePairMax));
    record("witness-roundtrip", selfcheck::check_witness_roundtrip(g, 25, inst_seed + 3));
    record("flow-vs-oracle", selfcheck::check_flow_vs_oracle(g, kOraclePairMax));
  }

  std::cout << "trials " << args.trials << '\n';
  for (const auto& name : names) {
    const Tally& t = tallies[name];
    std::cout << "check " << name << " pass " << t.pass << " fail " << t.fail << " skip "
              << t.skip << '\n';
  }
  if (budget_skips)
    std::cout << "note some oracle comparisons exceeded the enumeration budget and were "
                 "skipped; path-equivalence checks still ran\n";
  if (first_failure) {
    std::cout << "failure " << *first_failure << '\n';
    std::cout << reproducer << '\n';
    std::cout << "result FAIL\n";
    return 1;
  }
  std::cout << "result PASS\n";
  return 0;
}

// --- bench ---

struct BenchArgs {
  int n = 50;
  double p = 0.5;
  std::int64_t wmax = 1;
  std::uint64_t seed = 1;
  std::vector<std::string> variant;
  std::string via = "both";
};

int run_bench(const BenchArgs& args) {
  if (args.n < 1) throw UsageError("--n must be at least 1");
  if (args.p < 0.0 || args.p > 1.0) throw UsageError("--p must lie in [0,1]");
  if (args.via != "both" && args.via != "reduction" && args.via != "direct")
    throw UsageError("--via must be `reduction`, `direct` or `both`");
  DirectedGraph g = random_digraph(
      {.n = args.n, .p = args.p, .max_weight = args.wmax, .seed = args.seed});
  VariantSpec spec = parse_variant_tokens(args.variant, g.vertex_count());

  std::cout << "bench n " << args.n << " p " << std::fixed << std::setprecision(2) << args.p
            << " wmax " << args.wmax << " seed " << args.seed << " variant " << spec.name
            << '\n';
  std::cout.unsetf(std::ios::fixed);

  std::vector<SolvePath> paths;
  if (args.via != "direct") paths.push_back(SolvePath::Reduction);
  if (args.via != "reduction") paths.push_back(SolvePath::Direct);

  for (SolvePath path : paths) {
    double build_ms = 0.0;
    long reduced_edges = 0;
    if (path == SolvePath::Reduction) {
      auto t0 = Clock::now();
      ReducedGraph r = build_reduction(g);
      build_ms = ms_since(t0);
      reduced_edges = r.graph().edge_count();
    }
    flow_stats() = FlowStats{};
    auto t0 = Clock::now();
    std::ostringstream result;
    if (spec.query.kind == VariantQuery::Kind::AllPairs) {
      auto matrix = directed_all_pairs(g, path);
      std::int64_t queries = static_cast<std::int64_t>(g.vertex_count()) *
                             (g.vertex_count() - 1);
      std::int64_t finite = 0, infinite = 0, sum = 0;
      for (const auto& row : matrix)
        for (const CutValue& v : row)
          if (v.is_finite()) {
            ++finite;
            sum += v.value();
          } else {
            ++infinite;
          }
      infinite -= g.vertex_count();  // the diagonal is not a query
      result << "queries " << queries << " finite " << finite << " inf " << infinite
             << " sum " << sum;
    } else {
      Solution sol = solve_variant(g, spec.query, path);
      result << "value " << sol.value.str();
    }
    double total_ms = ms_since(t0);
    FlowStats stats = flow_stats();
    std::cout << "via " << (path == SolvePath::Reduction ? "reduction" : "direct") << ' '
              << result.str();
    if (path == SolvePath::Reduction) std::cout << " reduced_edges " << reduced_edges;
    std::cout << " build_ms " << std::fixed << std::setprecision(3) << build_ms
              << " flow_calls " << stats.calls << " flow_ms " << stats.millis
              << " total_ms " << total_ms << '\n';
    std::cout.unsetf(std::ios::fixed);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertex connectivity toolkit: directed cuts via an undirected reduction"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a random directed instance");
  gen->add_option("--model", gen_args.model, "random model (gnp)");
  gen->add_option("--n", gen_args.n, "vertex count")->required();
  gen->add_option("--p", gen_args.p, "arc probability");
  gen->add_option("--wmax", gen_args.wmax, "weights drawn uniformly from [1,wmax]");
  gen->add_option("--seed", gen_args.seed, "random seed");

  std::string reduce_input;
  auto* reduce = app.add_subcommand("reduce", "emit the undirected reduction of an instance");
  reduce->add_option("input", reduce_input, "instance file, or - for stdin")->required();

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve a vertex cut variant");
  solve->add_option("input", solve_args.input, "instance file, or - for stdin")->required();
  solve->add_option("--variant", solve_args.variant,
                    "global | pair S T | source S | sink T | steiner V1,V2,... | all-pairs")
      ->expected(-1);
  solve->add_option("--via", solve_args.via, "reduction | direct");
  solve->add_flag("--witness", solve_args.witness, "print the cut tri-partition");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "answer a variant by exhaustive enumeration");
  oracle->add_option("input", oracle_args.input, "instance file, or - for stdin")->required();
  oracle->add_option("--variant", oracle_args.variant,
                     "global | pair S T | source S | sink T | steiner V1,V2,... | all-pairs")
      ->expected(-1);
  oracle->add_flag("--witness", oracle_args.witness, "print the cut tri-partition");
  oracle->add_option("--max-n", oracle_args.max_n, "largest vertex count the oracle accepts");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "cross-check identities on random instances");
  verify->add_option("--trials", verify_args.trials, "number of random instances");
  verify->add_option("--max-n", verify_args.max_n, "largest instance size");
  verify->add_option("--seed", verify_args.seed, "random seed");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time both solver paths on one instance");
  bench->add_option("--n", bench_args.n, "vertex count")->required();
  bench->add_option("--p", bench_args.p, "arc probability");
  bench->add_option("--wmax", bench_args.wmax, "weights drawn uniformly from [1,wmax]");
  bench->add_option("--seed", bench_args.seed, "random seed");
  bench->add_option("--variant", bench_args.variant,
                    "global | pair S T | source S | sink T | steiner V1,V2,... | all-pairs")
      ->expected(-1);
  bench->add_option("--via", bench_args.via, "reduction | direct | both");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (reduce->parsed()) return run_reduce(reduce_input);
    if (solve->parsed()) return run_solve(solve_args);
    if (oracle->parsed()) return run_oracle(oracle_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
