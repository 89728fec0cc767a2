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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/index.hpp"
#include "hypermatch/matcher.hpp"
#include "hypermatch/planner.hpp"
#include "hypermatch/runtime.hpp"

namespace hypermatch::report {

struct WorkerSummary {
  std::uint64_t tasks = 0;
  std::uint64_t scan_tasks = 0;
  std::uint64_t expand_tasks = 0;
  std::uint64_t sink_tasks = 0;
  std::uint64_t steals = 0;
  std::uint64_t stolen_tasks = 0;
  std::uint64_t embeddings = 0;
  double busy_ms = 0.0;
  std::uint64_t peak_deque_length = 0;

  friend bool operator==(const WorkerSummary&, const WorkerSummary&) = default;
};

/// One query's result as written to JSON reports.
struct QueryRun {
  std::string query;
  std::uint64_t count = 0;
  double elapsed_ms = 0.0;
  std::vector<EdgeId> order;
  std::uint64_t candidates = 0;
  std::uint64_t filtered = 0;
  std::uint64_t validated = 0;
  bool timed_out = false;
  std::size_t threads = 1;
  std::vector<WorkerSummary> workers;
  std::uint64_t peak_live_tasks = 0;

  friend bool operator==(const QueryRun&, const QueryRun&) = default;
};

QueryRun from_execution(std::string query, const QueryPlan& plan, const ExecutionReport& exec,
                        std::size_t threads);
QueryRun from_sequential(std::string query, const QueryPlan& plan,
                         const EnumerationResult& result, double elapsed_ms);

nlohmann::json to_json(const QueryRun& run);
QueryRun query_run_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HypergraphStats& stats);
nlohmann::json to_json(const IndexSizeStats& stats);

/// One line per query; the counters are included when `diagnostics` is set.
std::string to_text(const QueryRun& run, bool diagnostics = true);

}  // namespace hypermatch::report
