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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypermatch/embedding.hpp"
#include "hypermatch/index.hpp"
#include "hypermatch/matcher.hpp"
#include "hypermatch/planner.hpp"

namespace hypermatch {

enum class TaskKind : std::uint8_t { kScan, kExpand, kSink };

/// Minimal schedulable unit. Scan tasks cover the slice [begin, end) of the
/// first step's partition; expand and sink tasks carry their embedding by
/// value. Expand tasks match step `embedding.size()` next.
struct Task {
  TaskKind kind = TaskKind::kScan;
  std::size_t begin = 0;
  std::size_t end = 0;
  PartialEmbedding embedding;
};

enum class SinkMode { kCount, kEmit };

struct EngineConfig {
  std::size_t workers = 1;
  SinkMode sink_mode = SinkMode::kCount;
  /// Tracks global peak live tasks and per-worker peak deque length.
  bool instrument = true;
  bool work_stealing = true;
  /// Seeds every scan slice on worker 0 instead of one per worker.
  bool skewed_seed = false;
  /// Records every executed task per worker (diagnostics and tests only).
  bool record_trace = false;
  std::optional<std::chrono::milliseconds> timeout;
  std::uint64_t seed = 0x5eed;
};

struct WorkerStats {
  std::uint64_t tasks_executed = 0;
  std::uint64_t scan_tasks = 0;
  std::uint64_t expand_tasks = 0;
  std::uint64_t sink_tasks = 0;
  std::uint64_t steals = 0;
  std::uint64_t stolen_tasks = 0;
  std::uint64_t embeddings = 0;
  double busy_seconds = 0.0;
  std::size_t peak_deque_length = 0;
};

struct TraceEntry {
  TaskKind kind;
  std::vector<EdgeId> matched;
};

struct ExecutionReport {
  std::uint64_t count = 0;
  double elapsed_seconds = 0.0;
  std::vector<WorkerStats> workers;
  std::uint64_t peak_live_tasks = 0;
  MatchCounters counters;
  bool timed_out = false;
  /// Times the pending-task counter dropped to zero.
  std::uint64_t quiescence_events = 0;
  /// Pending tasks and non-empty deques observed after the pool stopped.
  std::uint64_t residual_pending = 0;
  std::size_t residual_queued = 0;
  /// Full embeddings in query hyperedge order (SinkMode::kEmit only).
  std::vector<std::vector<EdgeId>> embeddings;
  /// Per-worker execution order (EngineConfig::record_trace only).
  std::vector<std::vector<TraceEntry>> traces;
};

/// Runs the plan on a pool of `config.workers` threads with per-worker LIFO
/// deques and randomized steal-half balancing. Results equal
/// enumerate_sequential for every worker count.
ExecutionReport execute_parallel(const QueryPlan& plan, const IndexedHypergraph& data,
                                 const EngineConfig& config);

}  // namespace hypermatch
