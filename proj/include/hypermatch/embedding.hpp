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
#include <span>
#include <utility>
#include <vector>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/planner.hpp"

namespace hypermatch {

/// Matched data hyperedges aligned with the matching order, plus the
/// incidence of the induced data subhypergraph: for every covered data
/// vertex, the mask of steps whose matched hyperedge contains it.
///
/// Self-contained value; safe to hand to another thread.
class PartialEmbedding {
 public:
  using IncidenceEntry = std::pair<VertexId, StepMask>;

  PartialEmbedding() = default;

  std::span<const EdgeId> matched() const { return matched_; }
  std::size_t size() const { return matched_.size(); }
  bool empty() const { return matched_.empty(); }
  bool contains(EdgeId e) const;

  /// Steps of v in this embedding, 0 when v is not covered.
  StepMask steps_of(VertexId v) const;

  /// |V(H_m)|.
  std::size_t num_vertices() const { return incidence_.size(); }
  /// Sorted by vertex id.
  std::span<const IncidenceEntry> incidence() const { return incidence_; }

  /// Copy with `edge` (whose sorted vertices are `vertices`) appended as the
  /// next step. Throws HypergraphError if `edge` is already matched.
  PartialEmbedding extended(EdgeId edge, std::span<const VertexId> vertices) const;

  friend bool operator==(const PartialEmbedding&, const PartialEmbedding&) = default;

 private:
  std::vector<EdgeId> matched_;
  std::vector<IncidenceEntry> incidence_;
};

}  // namespace hypermatch
