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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypermatch {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using LabelId = std::uint32_t;

class HypergraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical multiset of vertex labels of a hyperedge, stored as
/// (label, multiplicity) pairs sorted by label.
class HyperedgeSignature {
 public:
  using Entry = std::pair<LabelId, std::uint32_t>;

  HyperedgeSignature() = default;

  /// Builds the signature from an arbitrary (unsorted, repeated) label list.
  static HyperedgeSignature from_labels(std::vector<LabelId> labels);

  std::span<const Entry> entries() const { return entries_; }
  std::uint32_t total() const;
  std::size_t hash() const { return hash_; }

  friend bool operator==(const HyperedgeSignature& a, const HyperedgeSignature& b) {
    return a.hash_ == b.hash_ && a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const HyperedgeSignature& a,
                                          const HyperedgeSignature& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<Entry> entries_;
  std::size_t hash_ = 0;
};

struct HypergraphStats {
  std::size_t num_vertices = 0;
  std::size_t num_hyperedges = 0;
  std::size_t num_labels = 0;
  std::size_t max_arity = 0;
  double mean_arity = 0.0;
};

/// Immutable, simple, vertex-labelled hypergraph.
///
/// Hyperedge vertex lists are sorted and duplicate-free, no two hyperedges
/// share a vertex set, and the vertex -> incident hyperedge lists are sorted
/// ascending by hyperedge id. Vertices of degree zero are permitted.
class Hypergraph {
 public:
  /// Deduplicates and sorts each raw edge, collapses repeated hyperedges
  /// (first occurrence wins), and assigns dense ids in surviving input order.
  /// `labels[v]` is the label of vertex v; the vertex count is labels.size().
  static Hypergraph canonicalize(std::vector<LabelId> labels,
                                 const std::vector<std::vector<VertexId>>& raw_edges);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edge_offsets_.size() - 1; }

  LabelId label(VertexId v) const;
  std::span<const LabelId> labels() const { return labels_; }

  std::span<const VertexId> edge(EdgeId e) const;
  std::size_t arity(EdgeId e) const { return edge(e).size(); }
  HyperedgeSignature signature(EdgeId e) const;

  /// he(v), ascending.
  std::span<const EdgeId> incident(VertexId v) const;
  std::size_t degree(VertexId v) const { return incident(v).size(); }
  /// he^a(v).
  std::vector<EdgeId> incident_with_arity(VertexId v, std::size_t arity) const;
  /// adj(u): vertices sharing at least one hyperedge with u, excluding u.
  std::vector<VertexId> adjacent_vertices(VertexId u) const;
  /// adj(e): hyperedges other than e sharing at least one vertex with e.
  std::vector<EdgeId> adjacent_edges(EdgeId e) const;

  /// Id of the hyperedge with exactly this sorted vertex set, if any.
  std::optional<EdgeId> find_edge(std::span<const VertexId> sorted_vertices) const;

  HypergraphStats stats() const;

  /// True iff every vertex is covered and the hyperedge adjacency graph is
  /// connected.
  bool is_connected() const;

  /// Raw edge lists, suitable for feeding back into canonicalize().
  std::vector<std::vector<VertexId>> edge_lists() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.labels_ == b.labels_ && a.edge_offsets_ == b.edge_offsets_ &&
           a.edge_vertices_ == b.edge_vertices_;
  }

 private:
  void check_vertex(VertexId v) const;
  void check_edge(EdgeId e) const;
  void build_incidence();

  std::vector<LabelId> labels_;
  std::vector<std::size_t> edge_offsets_{0};
  std::vector<VertexId> edge_vertices_;
  std::vector<std::size_t> incidence_offsets_;
  std::vector<EdgeId> incidence_edges_;
};

}  // namespace hypermatch

template <>
struct std::hash<hypermatch::HyperedgeSignature> {
  std::size_t operator()(const hypermatch::HyperedgeSignature& s) const noexcept {
    return s.hash();
  }
};
