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

#include "hypermatch/runtime.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <random>
#include <stdexcept>
#include <thread>

#include "hypermatch/work_stealing_deque.hpp"

namespace hypermatch {

namespace {

using Clock = std::chrono::steady_clock;
using TaskPtr = std::unique_ptr<Task>;

struct alignas(64) Worker {
  WorkStealingDeque<Task> deque;
  WorkerStats stats;
  MatchCounters counters;
  std::vector<std::vector<EdgeId>> emitted;
  std::vector<TraceEntry> trace;
};

class Pool {
 public:
  Pool(const Matcher& matcher, const EngineConfig& config)
      : matcher_(matcher), config_(config), workers_(config.workers) {
    for (std::size_t i = 0; i < config.workers; ++i) workers_[i] = std::make_unique<Worker>();
    if (config.timeout) deadline_ = Clock::now() + *config.timeout;
  }

  void seed() {
    const auto first = matcher_.first_candidates();
    const std::size_t n = first.size();
    const std::size_t p = workers_.size();
    std::vector<TaskPtr> slices;
    for (std::size_t i = 0; i < p; ++i) {
      const std::size_t begin = i * n / p;
      const std::size_t end = (i + 1) * n / p;
      if (begin == end) continue;
      auto task = std::make_unique<Task>();
      task->kind = TaskKind::kScan;
      task->begin = begin;
      task->end = end;
      slices.push_back(std::move(task));
    }
    pending_.store(slices.size(), std::memory_order_relaxed);
    peak_live_.store(slices.size(), std::memory_order_relaxed);
    if (config_.skewed_seed) {
      // Slice 0 ends up at the head.
      for (auto it = slices.rbegin(); it != slices.rend(); ++it) {
        push(*workers_[0], std::move(*it));
      }
    } else {
      for (std::size_t i = 0; i < slices.size(); ++i) push(*workers_[i], std::move(slices[i]));
    }
  }

  void run() {
    std::vector<std::jthread> threads;
    threads.reserve(workers_.size());
    for (std::size_t i = 0; i < workers_.size(); ++i) {
      threads.emplace_back([this, i] { work(i); });
    }
  }

  ExecutionReport report() const {
    ExecutionReport r;
    r.peak_live_tasks = peak_live_.load();
    r.timed_out = cancelled_.load();
    r.quiescence_events = quiescence_events_.load();
    r.residual_pending = pending_.load();
    for (const auto& w : workers_) {
      r.workers.push_back(w->stats);
      r.count += w->stats.embeddings;
      r.counters += w->counters;
      r.residual_queued += w->deque.size();
      r.embeddings.insert(r.embeddings.end(), w->emitted.begin(), w->emitted.end());
      if (config_.record_trace) r.traces.push_back(w->trace);
    }
    return r;
  }

 private:
  void push(Worker& w, TaskPtr task) {
    w.deque.push(std::move(task));
    if (config_.instrument) {
      w.stats.peak_deque_length = std::max(w.stats.peak_deque_length, w.deque.size());
    }
  }

  void spawn(Worker& w, std::vector<TaskPtr>& children) {
    if (children.empty()) return;
    const std::uint64_t live =
        pending_.fetch_add(children.size(), std::memory_order_acq_rel) + children.size();
    if (config_.instrument) {
      std::uint64_t peak = peak_live_.load(std::memory_order_relaxed);
      while (live > peak &&
             !peak_live_.compare_exchange_weak(peak, live, std::memory_order_relaxed)) {
      }
    }
    // Reverse push keeps the first candidate at the head: depth-first order.
    for (auto it = children.rbegin(); it != children.rend(); ++it) push(w, std::move(*it));
    children.clear();
  }

  void finish_one() {
    if (pending_.fetch_sub(1, std::memory_order_acq_rel) == 1) {
      quiescence_events_.fetch_add(1, std::memory_order_relaxed);
    }
  }

  TaskPtr child(PartialEmbedding&& m) const {
    auto task = std::make_unique<Task>();
    task->kind = m.size() == matcher_.num_steps() ? TaskKind::kSink : TaskKind::kExpand;
    task->embedding = std::move(m);
    return task;
  }

  void execute(Worker& w, Task& task, MatchScratch& scratch, std::vector<EdgeId>& candidates,
               std::vector<TaskPtr>& children) {
    ++w.stats.tasks_executed;
    if (config_.record_trace) {
      auto matched = task.embedding.matched();
      w.trace.push_back({task.kind, {matched.begin(), matched.end()}});
    }
    switch (task.kind) {
      case TaskKind::kScan: {
        ++w.stats.scan_tasks;
        const auto first = matcher_.first_candidates();
        for (std::size_t i = task.begin; i < task.end; ++i) {
          ++w.counters.candidates;
          ++w.counters.filtered;
          ++w.counters.validated;
          children.push_back(child(matcher_.extend(PartialEmbedding{}, first[i])));
        }
        break;
      }
      case TaskKind::kExpand: {
        ++w.stats.expand_tasks;
        const std::size_t step = task.embedding.size();
        matcher_.generate_candidates(step, task.embedding, candidates, scratch);
        w.counters.candidates += candidates.size();
        for (EdgeId c : candidates) {
          PartialEmbedding next = matcher_.extend(task.embedding, c);
          if (matcher_.is_valid_embedding(step, next, scratch, &w.counters)) {
            children.push_back(child(std::move(next)));
          }
        }
        break;
      }
      case TaskKind::kSink: {
        ++w.stats.sink_tasks;
        ++w.stats.embeddings;
        if (config_.sink_mode == SinkMode::kEmit) {
          w.emitted.push_back(matcher_.align(task.embedding));
        }
        break;
      }
    }
    spawn(w, children);
    finish_one();
  }

  bool try_steal(std::size_t self, Worker& w, std::mt19937_64& rng,
                 std::vector<TaskPtr>& batch) {
    const std::size_t p = workers_.size();
    std::vector<std::size_t> victims;
    for (int attempt = 0; attempt < 2 * static_cast<int>(p); ++attempt) {
      victims.clear();
      for (std::size_t j = 0; j < p; ++j) {
        if (j != self && !workers_[j]->deque.empty()) victims.push_back(j);
      }
      if (victims.empty()) return false;
      std::uniform_int_distribution<std::size_t> pick(0, victims.size() - 1);
      Worker& victim = *workers_[victims[pick(rng)]];
      if (victim.deque.steal_half(batch) == 0) continue;
      ++w.stats.steals;
      w.stats.stolen_tasks += batch.size();
      // Oldest stolen task goes deepest so relative order is preserved.
      for (auto& task : batch) push(w, std::move(task));
      batch.clear();
      return true;
    }
    return false;
  }

  void work(std::size_t self) {
    Worker& w = *workers_[self];
    std::mt19937_64 rng(config_.seed + self);
    MatchScratch scratch;
    std::vector<EdgeId> candidates;
    std::vector<TaskPtr> children;
    std::vector<TaskPtr> batch;
    std::uint64_t ticks = 0;
    std::optional<Clock::time_point> burst_start;

    while (true) {
      if (TaskPtr task = w.deque.pop()) {
        if (!burst_start) burst_start = Clock::now();
        if (deadline_ && (++ticks & 0xff) == 0 && Clock::now() >= *deadline_) {
          cancelled_.store(true, std::memory_order_relaxed);
        }
        if (cancelled_.load(std::memory_order_relaxed)) {
          finish_one();
        } else {
          execute(w, *task, scratch, candidates, children);
        }
        continue;
      }
      if (burst_start) {
        w.stats.busy_seconds += std::chrono::duration<double>(Clock::now() - *burst_start).count();
        burst_start.reset();
      }
      if (pending_.load(std::memory_order_acquire) == 0) break;
      if (config_.work_stealing && try_steal(self, w, rng, batch)) continue;
      std::this_thread::yield();
    }
  }

  const Matcher& matcher_;
  const EngineConfig& config_;
  std::vector<std::unique_ptr<Worker>> workers_;
  std::optional<Clock::time_point> deadline_;
  alignas(64) std::atomic<std::uint64_t> pending_{0};
  alignas(64) std::atomic<std::uint64_t> peak_live_{0};
  std::atomic<std::uint64_t> quiescence_events_{0};
  std::atomic<bool> cancelled_{false};
};

}  // namespace

ExecutionReport execute_parallel(const QueryPlan& plan, const IndexedHypergraph& data,
                                 const EngineConfig& config) {
  if (config.workers == 0) throw std::invalid_argument("worker count must be at least 1");
  const auto start = Clock::now();
  Matcher matcher(plan, data);
  ExecutionReport report;
  if (!matcher.feasible() || plan.size() == 0) {
    report.workers.resize(config.workers);
    if (config.record_trace) report.traces.resize(config.workers);
  } else {
    Pool pool(matcher, config);
    pool.seed();
    pool.run();
    report = pool.report();
  }
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace hypermatch
