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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hypermatch/embedding.hpp"
#include "hypermatch/index.hpp"
#include "hypermatch/planner.hpp"

namespace hypermatch {

/// Filtering funnel: every candidate hyperedge produced (first-step scans
/// included), those surviving the vertex-count check, and those surviving
/// the profile check.
struct MatchCounters {
  std::uint64_t candidates = 0;
  std::uint64_t filtered = 0;
  std::uint64_t validated = 0;

  MatchCounters& operator+=(const MatchCounters& o) {
    candidates += o.candidates;
    filtered += o.filtered;
    validated += o.validated;
    return *this;
  }
};

struct CandidateSet {
  std::vector<EdgeId> candidates;
  /// |V_n_incdt|: covered data vertices that the candidate must avoid.
  std::size_t non_incident_vertices = 0;
  /// |V_incdt| for each (adjacent step, shared query vertex) pair, in plan order.
  std::vector<std::size_t> incident_vertex_counts;
};

/// Reusable buffers for the allocation-free hot path; one per thread.
struct MatchScratch {
  std::vector<EdgeId> acc;
  std::vector<EdgeId> unite;
  std::vector<EdgeId> tmp;
  std::vector<VertexProfile> profiles;
};

/// The match-by-hyperedge primitives bound to one plan and one index. Both
/// are borrowed and must outlive the matcher. All members are const and
/// thread-safe.
class Matcher {
 public:
  Matcher(const QueryPlan& plan, const IndexedHypergraph& data);

  const QueryPlan& plan() const { return plan_; }
  const IndexedHypergraph& data() const { return data_; }
  std::size_t num_steps() const { return plan_.size(); }

  /// False when some query signature has no data partition: zero results.
  bool feasible() const { return feasible_; }

  /// Data hyperedges matching the first step (its whole partition).
  std::span<const EdgeId> first_candidates() const;

  /// One single-step embedding per first-step candidate.
  std::vector<PartialEmbedding> scan_first() const;

  /// Candidates for `step` (0-based, >= 1) given an embedding of the
  /// preceding steps. Hyperedges already in `m` are excluded.
  CandidateSet generate_candidates(std::size_t step, const PartialEmbedding& m) const;
  void generate_candidates(std::size_t step, const PartialEmbedding& m,
                           std::vector<EdgeId>& out, MatchScratch& scratch) const;

  /// Validates an embedding whose last hyperedge was matched at `step`:
  /// vertex-count check, then multiset equality of vertex profiles.
  bool is_valid_embedding(std::size_t step, const PartialEmbedding& m) const;
  bool is_valid_embedding(std::size_t step, const PartialEmbedding& m,
                          MatchScratch& scratch, MatchCounters* counters) const;

  PartialEmbedding extend(const PartialEmbedding& m, EdgeId edge) const;

  /// Reorders a full embedding from matching order to query hyperedge order.
  std::vector<EdgeId> align(const PartialEmbedding& m) const;
  void align(const PartialEmbedding& m, std::vector<EdgeId>& out) const;

 private:
  const QueryPlan& plan_;
  const IndexedHypergraph& data_;
  std::vector<const Partition*> partitions_;
  bool feasible_ = true;
};

/// Receives a full embedding aligned to the query's hyperedge order.
using EmbeddingSink = std::function<void(std::span<const EdgeId>)>;

struct SequentialOptions {
  EmbeddingSink sink;
  /// Called for every valid partial or full embedding, in depth-first
  /// preorder.
  std::function<void(const PartialEmbedding&)> on_visit;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct EnumerationResult {
  std::uint64_t count = 0;
  MatchCounters counters;
  bool timed_out = false;
};

/// Depth-first enumeration of all embeddings.
EnumerationResult enumerate_sequential(const QueryPlan& plan, const IndexedHypergraph& data,
                                       const SequentialOptions& options = {});

}  // namespace hypermatch
