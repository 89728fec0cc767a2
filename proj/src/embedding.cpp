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

#include "hypermatch/embedding.hpp"

#include <algorithm>
#include <string>

namespace hypermatch {

bool PartialEmbedding::contains(EdgeId e) const {
  return std::find(matched_.begin(), matched_.end(), e) != matched_.end();
}

StepMask PartialEmbedding::steps_of(VertexId v) const {
  auto it = std::lower_bound(incidence_.begin(), incidence_.end(), v,
                             [](const IncidenceEntry& entry, VertexId x) { return entry.first < x; });
  return (it != incidence_.end() && it->first == v) ? it->second : 0;
}

PartialEmbedding PartialEmbedding::extended(EdgeId edge, std::span<const VertexId> vertices) const {
  if (contains(edge)) {
    throw HypergraphError("hyperedge " + std::to_string(edge) + " is already matched");
  }
  if (matched_.size() >= kMaxQueryEdges) {
    throw HypergraphError("embedding cannot exceed " + std::to_string(kMaxQueryEdges) + " steps");
  }
  const StepMask bit = StepMask{1} << matched_.size();

  PartialEmbedding out;
  out.matched_ = matched_;
  out.matched_.push_back(edge);

  out.incidence_.reserve(incidence_.size() + vertices.size());
  auto it = incidence_.begin();
  for (VertexId v : vertices) {
    while (it != incidence_.end() && it->first < v) out.incidence_.push_back(*it++);
    if (it != incidence_.end() && it->first == v) {
      out.incidence_.emplace_back(v, it->second | bit);
      ++it;
    } else {
      out.incidence_.emplace_back(v, bit);
    }
  }
  out.incidence_.insert(out.incidence_.end(), it, incidence_.end());
  return out;
}

}  // namespace hypermatch
