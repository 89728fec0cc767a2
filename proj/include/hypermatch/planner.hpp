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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/index.hpp"

namespace hypermatch {

/// Set of matching-order positions, bit k = step k (0-based).
using StepMask = std::uint64_t;

inline constexpr std::size_t kMaxQueryEdges = 64;

class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Query hyperedge ids in the order they are matched.
using MatchingOrder = std::vector<EdgeId>;

/// Builds the order greedily: the minimum-cardinality hyperedge first, then
/// repeatedly the connected hyperedge minimizing Card(e) / |covered ∩ e|.
/// Ties go to the smaller query hyperedge id. Throws PlanError for a
/// disconnected query.
MatchingOrder compute_matching_order(const Hypergraph& query, const IndexedHypergraph& data);

/// True iff `order` is a permutation of the query's hyperedges whose every
/// prefix is connected.
bool is_connected_order(const Hypergraph& query, const MatchingOrder& order);

struct SharedVertex {
  VertexId query_vertex;
  LabelId label;
  /// Number of earlier steps whose hyperedge contains the vertex.
  std::uint32_t prior_degree;
};

struct AdjacentStep {
  std::size_t step;
  std::vector<SharedVertex> shared;
};

/// Vertex profile: a label plus the set of matched steps whose hyperedge
/// contains the vertex. Used for query-side templates and data-side profiles.
struct VertexProfile {
  LabelId label;
  StepMask steps;

  friend auto operator<=>(const VertexProfile&, const VertexProfile&) = default;
};

struct PlanStep {
  EdgeId query_edge;
  HyperedgeSignature signature;
  std::vector<AdjacentStep> adjacent;
  /// Earlier steps sharing no vertex with this one.
  StepMask non_adjacent = 0;
  /// One template per vertex of the step's hyperedge, sorted.
  std::vector<VertexProfile> profile;
  /// |V(q')| after this step is matched.
  std::size_t prefix_vertex_count = 0;
};

struct QueryPlan {
  MatchingOrder order;
  std::vector<PlanStep> steps;
  std::size_t num_query_vertices = 0;

  std::size_t size() const { return steps.size(); }
};

/// Precomputes per-step adjacency, degrees, and profile templates. Throws
/// PlanError when `order` is not a connected permutation or the query has
/// more than kMaxQueryEdges hyperedges.
QueryPlan compile_plan(const Hypergraph& query, const MatchingOrder& order);

/// compute_matching_order followed by compile_plan.
QueryPlan plan_query(const Hypergraph& query, const IndexedHypergraph& data);

}  // namespace hypermatch
