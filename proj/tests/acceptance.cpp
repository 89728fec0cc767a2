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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fixtures.hpp"
#include "hypermatch/index.hpp"
#include "hypermatch/matcher.hpp"
#include "hypermatch/oracle.hpp"
#include "hypermatch/planner.hpp"
#include "hypermatch/report.hpp"
#include "hypermatch/runtime.hpp"

namespace hm = hypermatch;
using hm::EdgeId;
using hm::VertexId;
using Clock = std::chrono::steady_clock;
using EmbeddingSet = std::set<std::vector<EdgeId>>;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  // Failed only because the host lacks the hardware the criterion needs.
  bool environment_limited = false;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

// Memory-bound bookkeeping shared by every parallel run in this binary.
struct MemoryLedger {
  std::size_t runs = 0;
  std::size_t violations = 0;
  double worst_ratio = 0.0;
  std::string worst;

  void record(const hm::ExecutionReport& r, std::size_t p, const hm::QueryPlan& plan,
              const hm::IndexedHypergraph& idx, const std::string& label) {
    const std::uint64_t bound = p * plan.size() * idx.max_partition_size();
    ++runs;
    if (r.peak_live_tasks > bound) ++violations;
    const double ratio = bound ? static_cast<double>(r.peak_live_tasks) / bound : 0.0;
    if (ratio >= worst_ratio) {
      worst_ratio = ratio;
      worst = label + " peak=" + std::to_string(r.peak_live_tasks) +
              " bound=" + std::to_string(bound);
    }
  }
};

MemoryLedger g_memory;

hm::ExecutionReport run_parallel(const hm::QueryPlan& plan, const hm::IndexedHypergraph& idx,
                                 hm::EngineConfig config, const std::string& label) {
  config.instrument = true;
  auto r = hm::execute_parallel(plan, idx, config);
  g_memory.record(r, config.workers, plan, idx, label);
  return r;
}

EmbeddingSet sequential_set(const hm::QueryPlan& plan, const hm::IndexedHypergraph& idx,
                            hm::EnumerationResult* result = nullptr) {
  EmbeddingSet out;
  hm::SequentialOptions options;
  options.sink = [&](std::span<const EdgeId> t) { out.emplace(t.begin(), t.end()); };
  auto r = hm::enumerate_sequential(plan, idx, options);
  if (result) *result = r;
  return out;
}

hm::EngineConfig emit_config(std::size_t p) {
  hm::EngineConfig c;
  c.workers = p;
  c.sink_mode = hm::SinkMode::kEmit;
  return c;
}

std::vector<EdgeId> to_vec(std::span<const EdgeId> s) { return {s.begin(), s.end()}; }

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  const hm::IndexedHypergraph idx(hm::testing::f1_data());
  using hm::testing::kA;
  using hm::testing::kB;
  using hm::testing::kC;
  using Posting = std::map<VertexId, std::vector<EdgeId>>;
  struct Expected {
    hm::HyperedgeSignature signature;
    std::vector<EdgeId> edges;
    Posting postings;
  };
  // Layout table, with e1..e6 written as 0..5.
  const std::vector<Expected> table{
      {hm::HyperedgeSignature::from_labels({kA, kB}), {0, 1}, {{2, {0}}, {4, {0, 1}}, {6, {1}}}},
      {hm::HyperedgeSignature::from_labels({kA, kA, kC}),
       {2, 3},
       {{0, {2}}, {1, {2}}, {2, {2}}, {3, {3}}, {5, {3}}, {6, {3}}}},
      {hm::HyperedgeSignature::from_labels({kA, kA, kB, kC}),
       {4, 5},
       {{0, {4}}, {1, {4}}, {2, {5}}, {3, {5}}, {4, {4, 5}}, {5, {5}}, {6, {4}}}}};
  o.require(idx.partitions().size() == table.size(), "partition count");
  for (std::size_t i = 0; i < std::min(table.size(), idx.partitions().size()); ++i) {
    const auto& p = idx.partitions()[i];
    Posting got;
    for (VertexId v : p.indexed_vertices()) got[v] = to_vec(p.posting(v));
    o.require(p.signature() == table[i].signature, "signature of partition " + std::to_string(i));
    o.require(to_vec(p.edges()) == table[i].edges, "edges of partition " + std::to_string(i));
    o.require(got == table[i].postings, "postings of partition " + std::to_string(i));
  }

  const auto expected_vec = hm::testing::f1_embeddings();
  const EmbeddingSet expected(expected_vec.begin(), expected_vec.end());
  const auto plan = hm::plan_query(hm::testing::f1_query(), idx);
  o.require(sequential_set(plan, idx) == expected, "sequential embeddings");
  for (std::size_t p : {1, 2, 4, 8}) {
    const auto r = run_parallel(plan, idx, emit_config(p), "F1 p=" + std::to_string(p));
    const EmbeddingSet got(r.embeddings.begin(), r.embeddings.end());
    o.require(r.count == 2 && r.embeddings.size() == 2 && got == expected,
              "parallel embeddings at p=" + std::to_string(p));
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail << "3 partitions and 16 posting lists verbatim; {(e1,e3,e5),(e2,e4,e6)} at "
                "p=seq,1,2,4,8 in "
             << elapsed << " s";
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const hm::IndexedHypergraph idx(hm::testing::f1_data());
  const auto plan = hm::compile_plan(hm::testing::f1_query(), {0, 1, 2});
  const hm::Matcher matcher(plan, idx);
  const auto m = matcher.extend(matcher.extend(hm::PartialEmbedding{}, 0), 2);
  const auto s = plan.steps[2].signature;
  // Independent evaluation of he(v0,s) ∩ he(v1,s) ∩ he(v4,s) from raw incidence.
  const auto& g = idx.graph();
  std::vector<EdgeId> acc;
  bool first = true;
  for (VertexId v : {0u, 1u, 4u}) {
    std::vector<EdgeId> he;
    for (EdgeId e : g.incident(v)) {
      if (g.signature(e) == s) he.push_back(e);
    }
    if (first) {
      acc = he;
      first = false;
    } else {
      std::vector<EdgeId> next;
      std::ranges::set_intersection(acc, he, std::back_inserter(next));
      acc = next;
    }
  }
  const auto c = matcher.generate_candidates(2, m).candidates;
  o.require(acc == std::vector<EdgeId>{4}, "independent intersection is not {e5}");
  o.require(c == std::vector<EdgeId>{4}, "engine candidates are not {e5}");
  if (o.pass) o.detail << "step-3 candidates for m=(e1,e3) are {e5}";
  return o;
}

Outcome criterion3() {
  Outcome o;
  using hm::testing::kA;
  using hm::testing::kC;
  const auto q =
      hm::Hypergraph::canonicalize({kA, kA, kC, kA, kA}, {{0, 1, 2}, {3, 4, 2}, {0, 3, 4}});
  const auto h =
      hm::Hypergraph::canonicalize({kA, kA, kC, kA, kA}, {{0, 1, 2}, {3, 4, 2}, {0, 1, 3}});
  const hm::IndexedHypergraph idx(h);
  const auto plan = hm::compile_plan(q, {0, 1, 2});
  const hm::Matcher matcher(plan, idx);
  hm::PartialEmbedding m;
  for (EdgeId e : {0u, 1u, 2u}) m = matcher.extend(m, e);
  const auto mask = [](std::initializer_list<int> s) {
    hm::StepMask r = 0;
    for (int i : s) r |= hm::StepMask{1} << i;
    return r;
  };
  const std::vector<hm::VertexProfile> query_side{
      {kA, mask({0, 2})}, {kA, mask({1, 2})}, {kA, mask({1, 2})}};
  std::vector<hm::VertexProfile> data_side;
  for (VertexId v : h.edge(2)) data_side.push_back({h.label(v), m.steps_of(v)});
  std::ranges::sort(data_side);
  o.require(plan.steps[2].profile == query_side, "query profiles differ from the example");
  o.require(data_side == std::vector<hm::VertexProfile>{{kA, mask({0, 2})}, {kA, mask({0, 2})},
                                                        {kA, mask({1, 2})}},
            "data profiles differ from the example");
  o.require(m.num_vertices() == plan.steps[2].prefix_vertex_count,
            "vertex-count check should pass so the profiles decide");
  o.require(!matcher.is_valid_embedding(2, m), "is_valid_embedding accepted the instance");
  o.require(!hm::oracle::brute_force_tiny(q, h).contains(std::vector<EdgeId>{0, 1, 2}),
            "brute force disagrees with the rejection");
  if (o.pass) o.detail << "profile multisets differ; candidate rejected";
  return o;
}

struct SweepStats {
  std::size_t instances = 0;
  std::size_t disagreements = 0;
  std::size_t posting_mismatches = 0;
  std::size_t chain_violations = 0;
  std::size_t filtered_mismatches = 0;
  std::uint64_t embeddings = 0;
  std::uint64_t candidates = 0;
  std::uint64_t filtered = 0;
  std::string first_failure;
  double seconds = 0.0;
};

// Recomputes the vertex-count survivors by replaying the search through the
// public step API.
std::uint64_t replay_filtered(const hm::Matcher& matcher) {
  std::uint64_t filtered = 0;
  std::function<void(const hm::PartialEmbedding&)> dfs = [&](const hm::PartialEmbedding& m) {
    const std::size_t step = m.size();
    if (step == matcher.num_steps()) return;
    for (EdgeId c : matcher.generate_candidates(step, m).candidates) {
      auto next = matcher.extend(m, c);
      if (next.num_vertices() != matcher.plan().steps[step].prefix_vertex_count) continue;
      ++filtered;
      if (matcher.is_valid_embedding(step, next)) dfs(next);
    }
  };
  for (const auto& m : matcher.scan_first()) {
    ++filtered;
    dfs(m);
  }
  return filtered;
}

SweepStats run_sweep() {
  SweepStats s;
  const auto start = Clock::now();
  for (std::uint64_t seed = 0; s.instances < 1000; ++seed) {
    auto inst = hm::testing::random_instance(seed);
    if (!inst) continue;
    ++s.instances;
    const hm::IndexedHypergraph idx(inst->data);

    std::size_t arity_sum = 0;
    for (EdgeId e = 0; e < inst->data.num_edges(); ++e) arity_sum += inst->data.arity(e);
    if (idx.size_stats().total_posting_entries != arity_sum) ++s.posting_mismatches;

    const auto plan = hm::plan_query(inst->query, idx);
    hm::EnumerationResult seq;
    const auto engine = sequential_set(plan, idx, &seq);
    const auto par = run_parallel(plan, idx, emit_config(3), "sweep seed " + std::to_string(seed));
    const EmbeddingSet par_set(par.embeddings.begin(), par.embeddings.end());

    hm::oracle::VertexMatchOptions off;
    off.use_ihs = false;
    const auto by_vertex = hm::oracle::enumerate_by_vertex(inst->query, inst->data);
    const auto by_vertex_raw = hm::oracle::enumerate_by_vertex(inst->query, inst->data, off);
    const auto brute = hm::oracle::brute_force_tiny(inst->query, inst->data);
    const bool agree = engine == brute && par_set == brute && par.count == brute.size() &&
                       by_vertex == brute && by_vertex_raw == brute &&
                       seq.count == brute.size();
    if (!agree) {
      ++s.disagreements;
      if (s.first_failure.empty()) s.first_failure = "seed " + std::to_string(seed);
    }

    const auto report = hm::report::from_sequential("sweep", plan, seq, 0.0);
    const auto preport = hm::report::from_execution("sweep", plan, par, 3);
    for (const auto* r : {&report, &preport}) {
      if (!(r->candidates >= r->filtered && r->filtered >= r->count)) ++s.chain_violations;
    }
    if (replay_filtered(hm::Matcher(plan, idx)) != report.filtered ||
        preport.filtered != report.filtered) {
      ++s.filtered_mismatches;
    }
    s.embeddings += report.count;
    s.candidates += report.candidates;
    s.filtered += report.filtered;
  }
  s.seconds = seconds_since(start);
  return s;
}

Outcome criterion4(const SweepStats& s) {
  Outcome o;
  o.require(s.instances == 1000, "instance count");
  o.require(s.disagreements == 0,
            std::to_string(s.disagreements) + " disagreements, first at " + s.first_failure);
  o.require(s.seconds < 300.0, "runtime " + std::to_string(s.seconds) + " s");
  if (o.pass) {
    o.detail << s.instances << " instances, 0 disagreements across engine (seq and p=3), "
             << "by-vertex with and without IHS, brute force; " << s.embeddings
             << " embeddings total; " << s.seconds << " s";
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const hm::IndexedHypergraph idx(hm::testing::f1_copies(200));
  const auto plan = hm::plan_query(hm::testing::f1_query(), idx);
  const auto reference = hm::oracle::enumerate_by_vertex(hm::testing::f1_query(), idx.graph());
  const auto seq = hm::enumerate_sequential(plan, idx).count;
  o.require(seq == reference.size(), "sequential count " + std::to_string(seq) +
                                         " vs oracle " + std::to_string(reference.size()));
  std::set<std::uint64_t> counts;
  for (std::size_t p : {1, 2, 4, 8}) {
    for (int rep = 0; rep < 5; ++rep) {
      hm::EngineConfig config;
      config.workers = p;
      const auto r = run_parallel(plan, idx, config, "copies p=" + std::to_string(p));
      counts.insert(r.count);
    }
  }
  o.require(counts.size() == 1 && *counts.begin() == reference.size(),
            "counts vary across p or runs");
  if (o.pass) {
    o.detail << "200 disjoint F1 copies: count " << reference.size()
             << " for p=1,2,4,8 x 5 runs (oracle agrees)";
  }
  return o;
}

// Clique blocks queried with a path: each block of size k contributes
// k!/(k-L-1)! aligned tuples for a path of L edges.
struct ScaleInstance {
  std::size_t blocks;
  std::size_t block_size;
  std::size_t path_edges;

  std::uint64_t expected() const {
    std::uint64_t per_block = 1;
    for (std::size_t i = 0; i <= path_edges; ++i) per_block *= block_size - i;
    return per_block * blocks;
  }
};

constexpr ScaleInstance kScale{24, 13, 4};

Outcome criterion6(const hm::IndexedHypergraph& idx, const hm::QueryPlan& plan) {
  Outcome o;
  hm::EngineConfig one;
  one.workers = 1;
  const auto r1 = run_parallel(plan, idx, one, "scalability p=1");
  hm::EngineConfig four;
  four.workers = 4;
  const auto r4 = run_parallel(plan, idx, four, "scalability p=4");
  const unsigned cores = std::thread::hardware_concurrency();
  const double speedup = r1.elapsed_seconds / r4.elapsed_seconds;
  o.require(r1.count == kScale.expected() && r4.count == kScale.expected(),
            "count mismatch with closed form " + std::to_string(kScale.expected()));
  o.require(r1.count >= 1000000, "fewer than 1e6 embeddings");
  o.require(r1.elapsed_seconds >= 1.0, "single-worker runtime under 1 s");
  const bool counts_ok = o.pass;
  o.require(cores >= 4, "machine has " + std::to_string(cores) + " hardware threads (needs >= 4)");
  o.require(speedup >= 2.5, "speedup " + std::to_string(speedup) + "x < 2.5x");
  o.environment_limited = counts_ok && !o.pass && cores < 4;
  o.detail << " [embeddings=" << r1.count << " t1=" << r1.elapsed_seconds
           << " s t4=" << r4.elapsed_seconds << " s speedup=" << speedup << "x cores=" << cores
           << "]";
  return o;
}

Outcome criterion8(const hm::IndexedHypergraph& idx, const hm::QueryPlan& plan) {
  Outcome o;
  hm::EngineConfig config;
  config.workers = 4;
  config.skewed_seed = true;
  const auto r = run_parallel(plan, idx, config, "scalability p=4 skewed");
  std::uint64_t steals = 0;
  std::ostringstream per_worker;
  for (std::size_t i = 0; i < r.workers.size(); ++i) {
    const auto& w = r.workers[i];
    steals += w.steals;
    o.require(w.expand_tasks >= 1, "worker " + std::to_string(i) + " executed no expand task");
    per_worker << (i ? "," : "") << w.expand_tasks;
  }
  o.require(steals >= 1, "no successful steal");
  o.require(r.count == kScale.expected(), "count mismatch");
  if (o.pass) {
    o.detail << "skewed seed, p=4: expand tasks per worker [" << per_worker.str() << "], "
             << steals << " steals";
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  o.require(g_memory.violations == 0,
            std::to_string(g_memory.violations) + " runs exceeded the bound");
  o.detail << (o.pass ? "" : "; ") << g_memory.runs << " instrumented runs, worst "
           << g_memory.worst_ratio << " of bound (" << g_memory.worst << ")";
  return o;
}

Outcome criterion9(const SweepStats& s) {
  Outcome o;
  const hm::IndexedHypergraph idx(hm::testing::f1_data());
  const auto stats = idx.size_stats();
  o.require(stats.total_posting_entries == 18, "F1 total postings != 18");
  o.require(stats.num_partitions == 3 && stats.total_table_entries == 6, "F1 size stats");
  o.require(s.posting_mismatches == 0,
            std::to_string(s.posting_mismatches) + " random instances mismatch");
  if (o.pass) {
    o.detail << "F1 (3,6,18); sum of arities matches on all " << s.instances
             << " random instances";
  }
  return o;
}

Outcome criterion10(const SweepStats& s) {
  Outcome o;
  o.require(s.chain_violations == 0,
            std::to_string(s.chain_violations) + " reports break candidates>=filtered>=embeddings");
  o.require(s.filtered_mismatches == 0,
            std::to_string(s.filtered_mismatches) + " reports disagree with replayed vertex-count survivors");
  if (o.pass) {
    o.detail << "chain holds on " << 2 * s.instances << " reports; totals candidates="
             << s.candidates << " filtered=" << s.filtered << " embeddings=" << s.embeddings;
  }
  return o;
}

struct Tally {
  bool all = true;
  bool hard_failure = false;
};

void print(int id, const char* name, const Outcome& o, Tally& t) {
  std::printf("[%s] criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id, name,
              o.detail.str().c_str());
  std::fflush(stdout);
  t.all = t.all && o.pass;
  t.hard_failure = t.hard_failure || (!o.pass && !o.environment_limited);
}

// ctest maps this exit code to "skipped" rather than "passed".
constexpr int kEnvironmentLimited = 77;

}  // namespace

int main() {
  Tally all;
  print(1, "fixture exactness", criterion1(), all);
  print(2, "candidate-generation trace", criterion2(), all);
  print(3, "validation trace", criterion3(), all);
  const SweepStats sweep = run_sweep();
  print(4, "oracle equivalence sweep", criterion4(sweep), all);
  print(5, "determinism and p-invariance", criterion5(), all);

  const hm::IndexedHypergraph scale_idx(
      hm::testing::clique_blocks(kScale.blocks, kScale.block_size));
  const auto scale_plan = hm::plan_query(hm::testing::path_query(kScale.path_edges), scale_idx);
  print(6, "scalability", criterion6(scale_idx, scale_plan), all);
  const Outcome c8 = criterion8(scale_idx, scale_plan);
  print(7, "memory bound", criterion7(), all);
  print(8, "work stealing", c8, all);
  print(9, "index accounting", criterion9(sweep), all);
  print(10, "diagnostics plumbing", criterion10(sweep), all);
  if (all.all) {
    std::printf("ALL CRITERIA PASS\n");
    return 0;
  }
  if (!all.hard_failure) {
    std::printf("SOME CRITERIA FAIL (host hardware only; reported as skipped)\n");
    return kEnvironmentLimited;
  }
  std::printf("SOME CRITERIA FAIL\n");
  return 1;
}
