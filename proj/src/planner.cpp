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

#include "hypermatch/planner.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace hypermatch {

MatchingOrder compute_matching_order(const Hypergraph& query, const IndexedHypergraph& data) {
  if (!query.is_connected()) {
    throw PlanError("query hypergraph is not connected");
  }
  const std::size_t m = query.num_edges();
  std::vector<std::size_t> card(m);
  for (EdgeId e = 0; e < m; ++e) card[e] = data.cardinality(query.signature(e));

  MatchingOrder order;
  std::vector<bool> chosen(m, false);
  std::vector<bool> covered(query.num_vertices(), false);

  EdgeId first = 0;
  for (EdgeId e = 1; e < m; ++e) {
    if (card[e] < card[first]) first = e;
  }
  auto take = [&](EdgeId e) {
    order.push_back(e);
    chosen[e] = true;
    for (VertexId u : query.edge(e)) covered[u] = true;
  };
  take(first);

  while (order.size() < m) {
    bool found = false;
    EdgeId best = 0;
    std::size_t best_card = 0, best_shared = 1;
    for (EdgeId e = 0; e < m; ++e) {
      if (chosen[e]) continue;
      std::size_t shared = 0;
      for (VertexId u : query.edge(e)) shared += covered[u] ? 1 : 0;
      if (shared == 0) continue;
      // card[e] / shared < best_card / best_shared, cross-multiplied.
      if (!found || card[e] * best_shared < best_card * shared) {
        found = true;
        best = e;
        best_card = card[e];
        best_shared = shared;
      }
    }
    if (!found) throw PlanError("query hypergraph is not connected");
    take(best);
  }
  return order;
}

bool is_connected_order(const Hypergraph& query, const MatchingOrder& order) {
  if (order.size() != query.num_edges()) return false;
  std::vector<bool> used(query.num_edges(), false);
  std::vector<bool> covered(query.num_vertices(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    EdgeId e = order[i];
    if (e >= query.num_edges() || used[e]) return false;
    used[e] = true;
    bool touches = false;
    for (VertexId u : query.edge(e)) touches = touches || covered[u];
    if (i > 0 && !touches) return false;
    for (VertexId u : query.edge(e)) covered[u] = true;
  }
  return true;
}

QueryPlan compile_plan(const Hypergraph& query, const MatchingOrder& order) {
  if (query.num_edges() > kMaxQueryEdges) {
    throw PlanError("query has " + std::to_string(query.num_edges()) +
                    " hyperedges; at most " + std::to_string(kMaxQueryEdges) + " supported");
  }
  if (!is_connected_order(query, order)) {
    throw PlanError("matching order is not a connected permutation of the query hyperedges");
  }

  QueryPlan plan;
  plan.order = order;
  plan.num_query_vertices = query.num_vertices();

  // Steps containing each query vertex, filled as the prefix grows.
  std::vector<StepMask> membership(query.num_vertices(), 0);
  std::size_t covered = 0;

  for (std::size_t i = 0; i < order.size(); ++i) {
    const EdgeId qe = order[i];
    const auto vertices = query.edge(qe);
    PlanStep step;
    step.query_edge = qe;
    step.signature = query.signature(qe);

    for (std::size_t j = 0; j < i; ++j) {
      AdjacentStep adj{j, {}};
      for (VertexId u : vertices) {
        if (membership[u] & (StepMask{1} << j)) {
          adj.shared.push_back(
              {u, query.label(u), static_cast<std::uint32_t>(std::popcount(membership[u]))});
        }
      }
      if (adj.shared.empty()) {
        step.non_adjacent |= StepMask{1} << j;
      } else {
        step.adjacent.push_back(std::move(adj));
      }
    }

    for (VertexId u : vertices) {
      if (membership[u] == 0) ++covered;
      membership[u] |= StepMask{1} << i;
      step.profile.push_back({query.label(u), membership[u]});
    }
    std::sort(step.profile.begin(), step.profile.end());
    step.prefix_vertex_count = covered;
    plan.steps.push_back(std::move(step));
  }
  return plan;
}

QueryPlan plan_query(const Hypergraph& query, const IndexedHypergraph& data) {
  return compile_plan(query, compute_matching_order(query, data));
}

}  // namespace hypermatch
