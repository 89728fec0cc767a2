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
#include <unordered_map>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

/// One hyperedge table: all data hyperedges sharing a signature, plus an
/// inverted index from vertex to the ascending ids of its incident table
/// hyperedges.
class Partition {
 public:
  Partition(HyperedgeSignature signature, std::vector<EdgeId> edges, const Hypergraph& graph);

  const HyperedgeSignature& signature() const { return signature_; }
  std::span<const EdgeId> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  /// he(v, signature()); empty when v touches no edge of this table.
  std::span<const EdgeId> posting(VertexId v) const;

  /// Vertices that have a posting list, ascending.
  std::vector<VertexId> indexed_vertices() const;
  std::size_t total_postings() const { return postings_.size(); }

 private:
  struct Range {
    std::size_t offset;
    std::size_t length;
  };

  HyperedgeSignature signature_;
  std::vector<EdgeId> edges_;
  std::unordered_map<VertexId, Range> ranges_;
  std::vector<EdgeId> postings_;
};

struct IndexSizeStats {
  std::size_t num_partitions = 0;
  std::size_t total_table_entries = 0;
  std::size_t total_posting_entries = 0;
};

/// The data hypergraph stored as signature-keyed partitions. Immutable after
/// construction.
class IndexedHypergraph {
 public:
  explicit IndexedHypergraph(Hypergraph graph);

  const Hypergraph& graph() const { return graph_; }

  /// Partitions in order of first appearance (by smallest hyperedge id).
  std::span<const Partition> partitions() const { return partitions_; }

  /// nullptr when no data hyperedge has this signature.
  const Partition* find(const HyperedgeSignature& signature) const;

  /// Card: number of data hyperedges with this signature, 0 if absent.
  std::size_t cardinality(const HyperedgeSignature& signature) const;

  std::span<const EdgeId> incident_in_partition(VertexId v,
                                                const HyperedgeSignature& signature) const;

  std::size_t max_partition_size() const;
  IndexSizeStats size_stats() const;

 private:
  Hypergraph graph_;
  std::vector<Partition> partitions_;
  std::unordered_map<HyperedgeSignature, std::size_t> by_signature_;
};

}  // namespace hypermatch
