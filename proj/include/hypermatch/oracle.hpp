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
#include <set>
#include <stdexcept>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch::oracle {

/// Aligned hyperedge tuples: element i is the data hyperedge matched to
/// query hyperedge i.
using EmbeddingSet = std::set<std::vector<EdgeId>>;

class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class HyperedgeLabelRule {
  /// Every incident query hyperedge needs a data hyperedge of equal signature.
  kPerEdge,
  /// Some pair of incident hyperedges of equal arity has equal label counts.
  kSinglePair,
};

struct IhsOptions {
  HyperedgeLabelRule label_rule = HyperedgeLabelRule::kPerEdge;
};

/// Data vertices passing the incident-hyperedge-structure filter for query
/// vertex `u`: label and degree, adjacent-vertex count, per-arity incidence
/// containment, and hyperedge label counts. Ascending.
std::vector<VertexId> ihs_filter(VertexId u, const Hypergraph& query, const Hypergraph& data,
                                 const IhsOptions& options = {});

struct VertexMatchOptions {
  bool use_ihs = true;
  IhsOptions ihs;
};

/// Match-by-vertex backtracking. Assigning f(u)=v checks every query
/// hyperedge containing u whose vertices are now all mapped. Vertex
/// mappings are collapsed to aligned hyperedge tuples.
EmbeddingSet enumerate_by_vertex(const Hypergraph& query, const Hypergraph& data,
                                 const VertexMatchOptions& options = {});

/// Query vertex order used by enumerate_by_vertex: BFS from the vertex with
/// the fewest candidates (ties to the smaller id), neighbours ascending.
std::vector<VertexId> vertex_matching_order(const Hypergraph& query,
                                            const std::vector<std::vector<VertexId>>& candidates);

inline constexpr std::size_t kBruteForceMaxQueryVertices = 10;

/// Tries every injective label-preserving vertex map. Throws OracleRefusal
/// when the query has more than kBruteForceMaxQueryVertices vertices.
EmbeddingSet brute_force_tiny(const Hypergraph& query, const Hypergraph& data);

}  // namespace hypermatch::oracle
