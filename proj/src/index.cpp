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

#include "hypermatch/index.hpp"

#include <algorithm>

namespace hypermatch {

Partition::Partition(HyperedgeSignature signature, std::vector<EdgeId> edges,
                     const Hypergraph& graph)
    : signature_(std::move(signature)), edges_(std::move(edges)) {
  // Count, then scatter. Edges are visited in ascending id order so every
  // posting list comes out sorted.
  std::vector<VertexId> order;
  std::unordered_map<VertexId, std::size_t> counts;
  for (EdgeId e : edges_) {
    for (VertexId v : graph.edge(e)) {
      if (counts[v]++ == 0) order.push_back(v);
    }
  }
  std::sort(order.begin(), order.end());
  std::size_t offset = 0;
  ranges_.reserve(order.size());
  for (VertexId v : order) {
    ranges_.emplace(v, Range{offset, 0});
    offset += counts[v];
  }
  postings_.resize(offset);
  for (EdgeId e : edges_) {
    for (VertexId v : graph.edge(e)) {
      Range& r = ranges_.at(v);
      postings_[r.offset + r.length++] = e;
    }
  }
}

std::span<const EdgeId> Partition::posting(VertexId v) const {
  auto it = ranges_.find(v);
  if (it == ranges_.end()) return {};
  return std::span<const EdgeId>(postings_).subspan(it->second.offset, it->second.length);
}

std::vector<VertexId> Partition::indexed_vertices() const {
  std::vector<VertexId> out;
  out.reserve(ranges_.size());
  for (const auto& [v, range] : ranges_) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

IndexedHypergraph::IndexedHypergraph(Hypergraph graph) : graph_(std::move(graph)) {
  std::vector<HyperedgeSignature> signatures;
  std::vector<std::vector<EdgeId>> tables;
  for (EdgeId e = 0; e < graph_.num_edges(); ++e) {
    HyperedgeSignature sig = graph_.signature(e);
    auto [it, inserted] = by_signature_.try_emplace(sig, tables.size());
    if (inserted) {
      signatures.push_back(std::move(sig));
      tables.emplace_back();
    }
    tables[it->second].push_back(e);
  }
  partitions_.reserve(tables.size());
  for (std::size_t i = 0; i < tables.size(); ++i) {
    partitions_.emplace_back(std::move(signatures[i]), std::move(tables[i]), graph_);
  }
}

const Partition* IndexedHypergraph::find(const HyperedgeSignature& signature) const {
  auto it = by_signature_.find(signature);
  return it == by_signature_.end() ? nullptr : &partitions_[it->second];
}

std::size_t IndexedHypergraph::cardinality(const HyperedgeSignature& signature) const {
  const Partition* p = find(signature);
  return p ? p->size() : 0;
}

std::span<const EdgeId> IndexedHypergraph::incident_in_partition(
    VertexId v, const HyperedgeSignature& signature) const {
  const Partition* p = find(signature);
  return p ? p->posting(v) : std::span<const EdgeId>{};
}

std::size_t IndexedHypergraph::max_partition_size() const {
  std::size_t m = 0;
  for (const auto& p : partitions_) m = std::max(m, p.size());
  return m;
}

IndexSizeStats IndexedHypergraph::size_stats() const {
  IndexSizeStats s;
  s.num_partitions = partitions_.size();
  for (const auto& p : partitions_) {
    s.total_table_entries += p.size();
    s.total_posting_entries += p.total_postings();
  }
  return s;
}

}  // namespace hypermatch
