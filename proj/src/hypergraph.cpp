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

#include "hypermatch/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace hypermatch {

HyperedgeSignature HyperedgeSignature::from_labels(std::vector<LabelId> labels) {
  std::sort(labels.begin(), labels.end());
  HyperedgeSignature sig;
  for (LabelId l : labels) {
    if (!sig.entries_.empty() && sig.entries_.back().first == l) {
      ++sig.entries_.back().second;
    } else {
      sig.entries_.emplace_back(l, 1);
    }
  }
  // FNV-1a over the (label, count) pairs.
  std::size_t h = 1469598103934665603ULL;
  for (const auto& [label, count] : sig.entries_) {
    h = (h ^ label) * 1099511628211ULL;
    h = (h ^ count) * 1099511628211ULL;
  }
  sig.hash_ = h;
  return sig;
}

std::uint32_t HyperedgeSignature::total() const {
  std::uint32_t n = 0;
  for (const auto& entry : entries_) n += entry.second;
  return n;
}

Hypergraph Hypergraph::canonicalize(std::vector<LabelId> labels,
                                    const std::vector<std::vector<VertexId>>& raw_edges) {
  Hypergraph g;
  g.labels_ = std::move(labels);
  const std::size_t n = g.labels_.size();

  std::set<std::vector<VertexId>> seen;
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    std::vector<VertexId> edge = raw_edges[i];
    for (VertexId v : edge) {
      if (v >= n) {
        throw HypergraphError("hyperedge " + std::to_string(i) + " references vertex " +
                              std::to_string(v) + " which has no label");
      }
    }
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    if (edge.empty()) {
      throw HypergraphError("hyperedge " + std::to_string(i) + " is empty");
    }
    if (!seen.insert(edge).second) continue;
    g.edge_vertices_.insert(g.edge_vertices_.end(), edge.begin(), edge.end());
    g.edge_offsets_.push_back(g.edge_vertices_.size());
  }
  if (g.num_edges() == 0) {
    throw HypergraphError("hypergraph has no hyperedges");
  }
  g.build_incidence();
  return g;
}

void Hypergraph::build_incidence() {
  const std::size_t n = labels_.size();
  incidence_offsets_.assign(n + 1, 0);
  for (VertexId v : edge_vertices_) ++incidence_offsets_[v + 1];
  std::partial_sum(incidence_offsets_.begin(), incidence_offsets_.end(),
                   incidence_offsets_.begin());
  incidence_edges_.resize(edge_vertices_.size());
  std::vector<std::size_t> cursor(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
  for (EdgeId e = 0; e < num_edges(); ++e) {
    for (VertexId v : edge(e)) incidence_edges_[cursor[v]++] = e;
  }
}

void Hypergraph::check_vertex(VertexId v) const {
  if (v >= labels_.size()) {
    throw HypergraphError("vertex id " + std::to_string(v) + " out of range");
  }
}

void Hypergraph::check_edge(EdgeId e) const {
  if (e >= num_edges()) {
    throw HypergraphError("hyperedge id " + std::to_string(e) + " out of range");
  }
}

LabelId Hypergraph::label(VertexId v) const {
  check_vertex(v);
  return labels_[v];
}

std::span<const VertexId> Hypergraph::edge(EdgeId e) const {
  check_edge(e);
  return std::span<const VertexId>(edge_vertices_).subspan(
      edge_offsets_[e], edge_offsets_[e + 1] - edge_offsets_[e]);
}

HyperedgeSignature Hypergraph::signature(EdgeId e) const {
  std::vector<LabelId> ls;
  for (VertexId v : edge(e)) ls.push_back(labels_[v]);
  return HyperedgeSignature::from_labels(std::move(ls));
}

std::span<const EdgeId> Hypergraph::incident(VertexId v) const {
  check_vertex(v);
  return std::span<const EdgeId>(incidence_edges_)
      .subspan(incidence_offsets_[v], incidence_offsets_[v + 1] - incidence_offsets_[v]);
}

std::vector<EdgeId> Hypergraph::incident_with_arity(VertexId v, std::size_t arity) const {
  std::vector<EdgeId> out;
  for (EdgeId e : incident(v)) {
    if (this->arity(e) == arity) out.push_back(e);
  }
  return out;
}

std::vector<VertexId> Hypergraph::adjacent_vertices(VertexId u) const {
  std::vector<VertexId> out;
  for (EdgeId e : incident(u)) {
    for (VertexId w : edge(e)) {
      if (w != u) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeId> Hypergraph::adjacent_edges(EdgeId e) const {
  std::vector<EdgeId> out;
  for (VertexId v : edge(e)) {
    for (EdgeId f : incident(v)) {
      if (f != e) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<EdgeId> Hypergraph::find_edge(std::span<const VertexId> sorted_vertices) const {
  if (sorted_vertices.empty() || sorted_vertices.front() >= labels_.size()) return std::nullopt;
  for (EdgeId e : incident(sorted_vertices.front())) {
    auto vs = edge(e);
    if (std::equal(vs.begin(), vs.end(), sorted_vertices.begin(), sorted_vertices.end())) {
      return e;
    }
  }
  return std::nullopt;
}

HypergraphStats Hypergraph::stats() const {
  HypergraphStats s;
  s.num_vertices = num_vertices();
  s.num_hyperedges = num_edges();
  std::vector<LabelId> distinct(labels_);
  std::sort(distinct.begin(), distinct.end());
  s.num_labels = static_cast<std::size_t>(
      std::unique(distinct.begin(), distinct.end()) - distinct.begin());
  std::size_t total = 0;
  for (EdgeId e = 0; e < num_edges(); ++e) {
    s.max_arity = std::max(s.max_arity, arity(e));
    total += arity(e);
  }
  s.mean_arity = static_cast<double>(total) / static_cast<double>(num_edges());
  return s;
}

bool Hypergraph::is_connected() const {
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (degree(v) == 0) return false;
  }
  std::vector<bool> edge_seen(num_edges(), false);
  std::vector<bool> vertex_seen(num_vertices(), false);
  std::vector<EdgeId> stack{0};
  edge_seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    EdgeId e = stack.back();
    stack.pop_back();
    for (VertexId v : edge(e)) {
      if (vertex_seen[v]) continue;
      vertex_seen[v] = true;
      for (EdgeId f : incident(v)) {
        if (!edge_seen[f]) {
          edge_seen[f] = true;
          ++reached;
          stack.push_back(f);
        }
      }
    }
  }
  return reached == num_edges();
}

std::vector<std::vector<VertexId>> Hypergraph::edge_lists() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) {
    auto vs = edge(e);
    out.emplace_back(vs.begin(), vs.end());
  }
  return out;
}

}  // namespace hypermatch
