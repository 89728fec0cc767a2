// Copyright 2026 The Hypermatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/index.hpp"
#include "hypermatch/io.hpp"
#include "hypermatch/matcher.hpp"
#include "hypermatch/oracle.hpp"
#include "hypermatch/planner.hpp"
#include "hypermatch/query_gen.hpp"
#include "hypermatch/report.hpp"
#include "hypermatch/runtime.hpp"

namespace fs = std::filesystem;
using namespace hypermatch;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitRefused = 4;

struct NamedQuery {
  std::string name;
  Hypergraph graph;
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<NamedQuery> load_queries(const std::string& query, const std::string& query_dir,
                                     io::LabelDictionary& labels) {
  std::vector<fs::path> paths;
  if (!query.empty()) paths.emplace_back(query);
  if (!query_dir.empty()) {
    std::vector<fs::path> found;
    for (const auto& entry : fs::directory_iterator(query_dir)) {
      if (entry.is_regular_file()) found.push_back(entry.path());
    }
    std::sort(found.begin(), found.end());
    paths.insert(paths.end(), found.begin(), found.end());
  }
  std::vector<NamedQuery> out;
  for (const auto& p : paths) out.push_back({p.filename().string(), io::read_hypergraph(p, labels)});
  return out;
}

std::string tuple_line(std::span<const EdgeId> tuple) {
  std::string line;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) line += ' ';
    line += std::to_string(tuple[i]);
  }
  return line;
}

// ---- stats ---------------------------------------------------------------

struct StatsArgs {
  std::string graph;
  std::string report = "text";
};

int cmd_stats(const StatsArgs& args) {
  io::LabelDictionary labels;
  const auto graph = io::read_hypergraph(args.graph, labels);
  const auto start = Clock::now();
  const IndexedHypergraph index(graph);
  const double build_ms = ms_since(start);
  const auto stats = graph.stats();
  const auto sizes = index.size_stats();
  if (args.report == "json") {
    nlohmann::json j{{"graph", args.graph},
                     {"stats", report::to_json(stats)},
                     {"build_ms", build_ms},
                     {"index", report::to_json(sizes)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "num_vertices " << stats.num_vertices << '\n'
              << "num_hyperedges " << stats.num_hyperedges << '\n'
              << "num_labels " << stats.num_labels << '\n'
              << "max_arity " << stats.max_arity << '\n'
              << "mean_arity " << std::setprecision(17) << stats.mean_arity << '\n'
              << "build_ms " << std::setprecision(6) << build_ms << '\n'
              << "num_partitions " << sizes.num_partitions << '\n'
              << "total_table_entries " << sizes.total_table_entries << '\n'
              << "total_posting_entries " << sizes.total_posting_entries << '\n';
  }
  return kExitOk;
}

// ---- gen-queries ---------------------------------------------------------

struct GenArgs {
  std::string graph;
  std::size_t edges = 3;
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 20;
  std::size_t count = 20;
  std::uint64_t seed = 0;
  std::string out_dir;
};

int cmd_gen_queries(const GenArgs& args) {
  io::LabelDictionary labels;
  const auto graph = io::read_hypergraph(args.graph, labels);
  QuerySettings settings;
  settings.num_edges = args.edges;
  settings.min_vertices = args.min_vertices;
  settings.max_vertices = args.max_vertices;
  settings.num_queries = args.count;
  settings.seed = args.seed;
  const auto queries = generate_queries(graph, settings);
  fs::create_directories(args.out_dir);
  for (std::size_t i = 0; i < queries.size(); ++i) {
    std::ostringstream name;
    name << "q" << std::setw(4) << std::setfill('0') << i << ".hg";
    io::save_hypergraph(fs::path(args.out_dir) / name.str(), queries[i], labels);
  }
  std::cerr << "wrote " << queries.size() << " queries to " << args.out_dir << '\n';
  return kExitOk;
}

// ---- run -----------------------------------------------------------------

struct RunArgs {
  std::string graph;
  std::string query;
  std::string query_dir;
  std::size_t threads = 1;
  std::string mode = "count";
  double timeout_secs = 3600.0;
  std::string report = "json";
  bool diagnostics = false;
};

std::chrono::milliseconds to_ms(double secs) {
  return std::chrono::milliseconds(static_cast<std::int64_t>(secs * 1e3));
}

int cmd_run(const RunArgs& args) {
  io::LabelDictionary labels;
  const auto graph = io::read_hypergraph(args.graph, labels);
  const auto queries = load_queries(args.query, args.query_dir, labels);
  const auto build_start = Clock::now();
  const IndexedHypergraph index(graph);
  const double build_ms = ms_since(build_start);

  const bool print = args.mode == "print";
  // Embeddings own stdout in print mode.
  std::ostream& report_out = print ? std::cerr : std::cout;
  bool any_timeout = false;
  nlohmann::json runs = nlohmann::json::array();

  for (const auto& q : queries) {
    const auto start = Clock::now();
    const QueryPlan plan = plan_query(q.graph, index);
    report::QueryRun run;
    if (args.threads == 1) {
      SequentialOptions options;
      options.deadline = Clock::now() + to_ms(args.timeout_secs);
      if (print) {
        options.sink = [](std::span<const EdgeId> t) { std::cout << tuple_line(t) << '\n'; };
      }
      const auto result = enumerate_sequential(plan, index, options);
      run = report::from_sequential(q.name, plan, result, ms_since(start));
    } else {
      EngineConfig config;
      config.workers = args.threads;
      config.sink_mode = print ? SinkMode::kEmit : SinkMode::kCount;
      config.timeout = to_ms(args.timeout_secs);
      const auto exec = execute_parallel(plan, index, config);
      if (print) {
        for (const auto& t : exec.embeddings) std::cout << tuple_line(t) << '\n';
      }
      run = report::from_execution(q.name, plan, exec, args.threads);
      run.elapsed_ms = ms_since(start);
    }
    any_timeout = any_timeout || run.timed_out;
    if (args.report == "json") {
      runs.push_back(report::to_json(run));
    } else {
      report_out << report::to_text(run, args.diagnostics) << '\n';
    }
  }

  if (args.report == "json") {
    nlohmann::json j{{"graph", args.graph},
                     {"build_ms", build_ms},
                     {"stats", report::to_json(graph.stats())},
                     {"index", report::to_json(index.size_stats())},
                     {"queries", runs}};
    report_out << j.dump(2) << '\n';
  } else {
    report_out << "build_ms=" << build_ms << '\n';
  }
  return any_timeout ? kExitTimeout : kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string graph;
  std::string query;
  std::string query_dir;
  std::string oracle = "both";
  std::size_t threads = 1;
  std::string counterexample_dir = ".";
};

oracle::EmbeddingSet engine_embeddings(const QueryPlan& plan, const IndexedHypergraph& index,
                                       std::size_t threads) {
  EngineConfig config;
  config.workers = threads;
  config.sink_mode = SinkMode::kEmit;
  const auto exec = execute_parallel(plan, index, config);
  oracle::EmbeddingSet out(exec.embeddings.begin(), exec.embeddings.end());
#ifdef HYPERMATCH_FAULT_INJECTION
  if (!out.empty()) out.erase(std::prev(out.end()));
#endif
  return out;
}

void dump_counterexample(const fs::path& path, const std::string& graph_path, const NamedQuery& q,
                         const io::LabelDictionary& labels, const std::string& oracle_name,
                         const oracle::EmbeddingSet& engine,
                         const oracle::EmbeddingSet& reference) {
  std::ofstream out(path);
  out << "c counterexample for " << q.name << " against " << oracle_name << '\n';
  out << "c data graph: " << graph_path << '\n';
  for (const auto& t : engine) {
    if (!reference.contains(t)) out << "c engine only: " << tuple_line(t) << '\n';
  }
  for (const auto& t : reference) {
    if (!engine.contains(t)) out << "c oracle only: " << tuple_line(t) << '\n';
  }
  out << io::write_hypergraph(q.graph, labels);
}

int cmd_verify(const VerifyArgs& args) {
  io::LabelDictionary labels;
  const auto graph = io::read_hypergraph(args.graph, labels);
  const auto queries = load_queries(args.query, args.query_dir, labels);
  const IndexedHypergraph index(graph);
  bool mismatch = false;
  bool refused = false;

  for (const auto& q : queries) {
    const auto engine = engine_embeddings(plan_query(q.graph, index), index, args.threads);
    std::vector<std::pair<std::string, oracle::EmbeddingSet>> references;
    if (args.oracle == "vertex" || args.oracle == "both") {
      references.emplace_back("vertex", oracle::enumerate_by_vertex(q.graph, graph));
    }
    if (args.oracle == "bruteforce" || args.oracle == "both") {
      try {
        references.emplace_back("bruteforce", oracle::brute_force_tiny(q.graph, graph));
      } catch (const oracle::OracleRefusal& err) {
        std::cout << q.name << ": bruteforce refused: " << err.what() << '\n';
        refused = true;
      }
    }
    for (const auto& [name, reference] : references) {
      if (engine == reference) {
        std::cout << q.name << ": " << name << " agrees (" << engine.size() << " embeddings)\n";
        continue;
      }
      mismatch = true;
      fs::create_directories(args.counterexample_dir);
      const fs::path path =
          fs::path(args.counterexample_dir) / (q.name + "." + name + ".counterexample");
      dump_counterexample(path, args.graph, q, labels, name, engine, reference);
      std::cout << q.name << ": " << name << " DISAGREES (engine " << engine.size() << ", oracle "
                << reference.size() << "); wrote " << path.string() << '\n';
    }
  }
  if (mismatch) return kExitMismatch;
  if (refused) return kExitRefused;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact subhypergraph matching"};
  app.require_subcommand(1);

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Print hypergraph and index statistics");
  stats_cmd->add_option("--graph", stats.graph, "Data hypergraph file")->required()->check(CLI::ExistingFile);
  stats_cmd->add_option("--report", stats.report)->check(CLI::IsMember({"json", "text"}));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-queries", "Sample connected queries by random walk");
  gen_cmd->add_option("--graph", gen.graph)->required()->check(CLI::ExistingFile);
  gen_cmd->add_option("--edges", gen.edges)->check(CLI::Range(1, 64));
  gen_cmd->add_option("--min-vertices", gen.min_vertices);
  gen_cmd->add_option("--max-vertices", gen.max_vertices);
  gen_cmd->add_option("--count", gen.count);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--out-dir", gen.out_dir)->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Enumerate embeddings");
  run_cmd->add_option("--graph", run.graph)->required()->check(CLI::ExistingFile);
  auto* run_q = run_cmd->add_option("--query", run.query)->check(CLI::ExistingFile);
  auto* run_qd = run_cmd->add_option("--query-dir", run.query_dir)->check(CLI::ExistingDirectory);
  run_cmd->add_option("--threads", run.threads)->check(CLI::PositiveNumber);
  run_cmd->add_option("--mode", run.mode)->check(CLI::IsMember({"count", "print"}));
  run_cmd->add_option("--timeout-secs", run.timeout_secs)->check(CLI::PositiveNumber);
  run_cmd->add_option("--report", run.report)->check(CLI::IsMember({"json", "text"}));
  run_cmd->add_flag("--diagnostics", run.diagnostics, "Show candidate/filtered/validated counters in text reports");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the engine against oracles");
  verify_cmd->add_option("--graph", verify.graph)->required()->check(CLI::ExistingFile);
  auto* ver_q = verify_cmd->add_option("--query", verify.query)->check(CLI::ExistingFile);
  auto* ver_qd =
      verify_cmd->add_option("--query-dir", verify.query_dir)->check(CLI::ExistingDirectory);
  verify_cmd->add_option("--oracle", verify.oracle)
      ->check(CLI::IsMember({"vertex", "bruteforce", "both"}));
  verify_cmd->add_option("--threads", verify.threads)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--counterexample-dir", verify.counterexample_dir);

  try {
    app.parse(argc, argv);
    if (run_cmd->parsed() && run_q->count() + run_qd->count() == 0) {
      throw CLI::RequiredError("--query or --query-dir");
    }
    if (verify_cmd->parsed() && ver_q->count() + ver_qd->count() == 0) {
      throw CLI::RequiredError("--query or --query-dir");
    }
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (stats_cmd->parsed()) return cmd_stats(stats);
    if (gen_cmd->parsed()) return cmd_gen_queries(gen);
    if (run_cmd->parsed()) return cmd_run(run);
    if (verify_cmd->parsed()) return cmd_verify(verify);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
