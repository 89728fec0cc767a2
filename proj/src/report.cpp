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

#include "hypermatch/report.hpp"

#include <sstream>

namespace hypermatch::report {

QueryRun from_execution(std::string query, const QueryPlan& plan, const ExecutionReport& exec,
                        std::size_t threads) {
  QueryRun run;
  run.query = std::move(query);
  run.count = exec.count;
  run.elapsed_ms = exec.elapsed_seconds * 1e3;
  run.order = plan.order;
  run.candidates = exec.counters.candidates;
  run.filtered = exec.counters.filtered;
  run.validated = exec.counters.validated;
  run.timed_out = exec.timed_out;
  run.threads = threads;
  run.peak_live_tasks = exec.peak_live_tasks;
  for (const auto& w : exec.workers) {
    run.workers.push_back({w.tasks_executed, w.scan_tasks, w.expand_tasks, w.sink_tasks, w.steals,
                           w.stolen_tasks, w.embeddings, w.busy_seconds * 1e3,
                           w.peak_deque_length});
  }
  return run;
}

QueryRun from_sequential(std::string query, const QueryPlan& plan,
                         const EnumerationResult& result, double elapsed_ms) {
  QueryRun run;
  run.query = std::move(query);
  run.count = result.count;
  run.elapsed_ms = elapsed_ms;
  run.order = plan.order;
  run.candidates = result.counters.candidates;
  run.filtered = result.counters.filtered;
  run.validated = result.counters.validated;
  run.timed_out = result.timed_out;
  run.threads = 1;
  return run;
}

nlohmann::json to_json(const QueryRun& run) {
  nlohmann::json workers = nlohmann::json::array();
  for (const auto& w : run.workers) {
    workers.push_back({{"tasks", w.tasks},
                       {"scan_tasks", w.scan_tasks},
                       {"expand_tasks", w.expand_tasks},
                       {"sink_tasks", w.sink_tasks},
                       {"steals", w.steals},
                       {"stolen_tasks", w.stolen_tasks},
                       {"embeddings", w.embeddings},
                       {"busy_ms", w.busy_ms},
                       {"peak_deque_length", w.peak_deque_length}});
  }
  return {{"query", run.query},
          {"count", run.count},
          {"elapsed_ms", run.elapsed_ms},
          {"order", run.order},
          {"candidates", run.candidates},
          {"filtered", run.filtered},
          {"validated", run.validated},
          {"timed_out", run.timed_out},
          {"threads", run.threads},
          {"workers", workers},
          {"peak_live_tasks", run.peak_live_tasks}};
}

QueryRun query_run_from_json(const nlohmann::json& j) {
  QueryRun run;
  run.query = j.at("query").get<std::string>();
  run.count = j.at("count").get<std::uint64_t>();
  run.elapsed_ms = j.at("elapsed_ms").get<double>();
  run.order = j.at("order").get<std::vector<EdgeId>>();
  run.candidates = j.at("candidates").get<std::uint64_t>();
  run.filtered = j.at("filtered").get<std::uint64_t>();
  run.validated = j.at("validated").get<std::uint64_t>();
  run.timed_out = j.at("timed_out").get<bool>();
  run.threads = j.at("threads").get<std::size_t>();
  run.peak_live_tasks = j.at("peak_live_tasks").get<std::uint64_t>();
  for (const auto& w : j.at("workers")) {
    run.workers.push_back({w.at("tasks").get<std::uint64_t>(),
                           w.at("scan_tasks").get<std::uint64_t>(),
                           w.at("expand_tasks").get<std::uint64_t>(),
                           w.at("sink_tasks").get<std::uint64_t>(),
                           w.at("steals").get<std::uint64_t>(),
                           w.at("stolen_tasks").get<std::uint64_t>(),
                           w.at("embeddings").get<std::uint64_t>(),
                           w.at("busy_ms").get<double>(),
                           w.at("peak_deque_length").get<std::uint64_t>()});
  }
  return run;
}

nlohmann::json to_json(const HypergraphStats& s) {
  return {{"num_vertices", s.num_vertices},
          {"num_hyperedges", s.num_hyperedges},
          {"num_labels", s.num_labels},
          {"max_arity", s.max_arity},
          {"mean_arity", s.mean_arity}};
}

nlohmann::json to_json(const IndexSizeStats& s) {
  return {{"num_partitions", s.num_partitions},
          {"total_table_entries", s.total_table_entries},
          {"total_posting_entries", s.total_posting_entries}};
}

std::string to_text(const QueryRun& run, bool diagnostics) {
  std::ostringstream out;
  out << run.query << ": count=" << run.count << " elapsed_ms=" << run.elapsed_ms;
  if (diagnostics) {
    out << " candidates=" << run.candidates << " filtered=" << run.filtered
        << " validated=" << run.validated;
  }
  out << " order=[";
  for (std::size_t i = 0; i < run.order.size(); ++i) out << (i ? "," : "") << run.order[i];
  out << ']';
  if (run.timed_out) out << " TIMED OUT";
  if (run.threads > 1) {
    out << " threads=" << run.threads << " peak_live_tasks=" << run.peak_live_tasks;
    for (std::size_t i = 0; i < run.workers.size(); ++i) {
      const auto& w = run.workers[i];
      out << "\n  worker " << i << ": tasks=" << w.tasks << " expand=" << w.expand_tasks
          << " steals=" << w.steals << " busy_ms=" << w.busy_ms;
    }
  }
  return out.str();
}

}  // namespace hypermatch::report
