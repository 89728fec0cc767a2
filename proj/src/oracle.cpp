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

#include "hypermatch/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>

namespace hypermatch::oracle {

namespace {

std::map<std::size_t, std::size_t> arity_histogram(const Hypergraph& g, VertexId v) {
  std::map<std::size_t, std::size_t> h;
  for (EdgeId e : g.incident(v)) ++h[g.arity(e)];
  return h;
}

bool hyperedge_labels_ok(VertexId u, const Hypergraph& query, VertexId v, const Hypergraph& data,
                         HyperedgeLabelRule rule) {
  std::vector<HyperedgeSignature> data_sigs;
  for (EdgeId e : data.incident(v)) data_sigs.push_back(data.signature(e));
  auto has = [&](const HyperedgeSignature& s) {
    return std::find(data_sigs.begin(), data_sigs.end(), s) != data_sigs.end();
  };
  const auto query_edges = query.incident(u);
  if (rule == HyperedgeLabelRule::kPerEdge) {
    return std::all_of(query_edges.begin(), query_edges.end(),
                       [&](EdgeId e) { return has(query.signature(e)); });
  }
  if (query_edges.empty()) return true;
  return std::any_of(query_edges.begin(), query_edges.end(),
                     [&](EdgeId e) { return has(query.signature(e)); });
}

}  // namespace

std::vector<VertexId> ihs_filter(VertexId u, const Hypergraph& query, const Hypergraph& data,
                                 const IhsOptions& options) {
  const LabelId label = query.label(u);
  const std::size_t degree = query.degree(u);
  const std::size_t adjacent = query.adjacent_vertices(u).size();
  const auto arities = arity_histogram(query, u);

  std::vector<VertexId> out;
  for (VertexId v = 0; v < data.num_vertices(); ++v) {
    if (data.label(v) != label || data.degree(v) < degree) continue;
    if (data.adjacent_vertices(v).size() < adjacent) continue;
    const auto data_arities = arity_histogram(data, v);
    bool contained = true;
    for (const auto& [arity, count] : arities) {
      auto it = data_arities.find(arity);
      if (it == data_arities.end() || it->second < count) {
        contained = false;
        break;
      }
    }
    if (!contained) continue;
    if (!hyperedge_labels_ok(u, query, v, data, options.label_rule)) continue;
    out.push_back(v);
  }
  return out;
}

std::vector<VertexId> vertex_matching_order(const Hypergraph& query,
                                            const std::vector<std::vector<VertexId>>& candidates) {
  const std::size_t n = query.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<VertexId> order;
  while (order.size() < n) {
    VertexId start = 0;
    bool found = false;
    for (VertexId u = 0; u < n; ++u) {
      if (seen[u]) continue;
      if (!found || candidates[u].size() < candidates[start].size()) {
        start = u;
        found = true;
      }
    }
    std::deque<VertexId> frontier{start};
    seen[start] = true;
    while (!frontier.empty()) {
      VertexId u = frontier.front();
      frontier.pop_front();
      order.push_back(u);
      for (VertexId w : query.adjacent_vertices(u)) {
        if (!seen[w]) {
          seen[w] = true;
          frontier.push_back(w);
        }
      }
    }
  }
  return order;
}

namespace {

class VertexBacktracker {
 public:
  VertexBacktracker(const Hypergraph& query, const Hypergraph& data,
                    std::vector<std::vector<VertexId>> candidates)
      : query_(query), data_(data), candidates_(std::move(candidates)),
        order_(vertex_matching_order(query, candidates_)),
        mapping_(query.num_vertices(), 0), used_(data.num_vertices(), false),
        completes_at_(query.num_vertices()), anchor_(query.num_vertices()),
        allowed_(query.num_vertices(), std::vector<bool>(data.num_vertices(), false)),
        data_adjacency_(data.num_vertices()) {
    std::vector<std::size_t> position(query.num_vertices());
    for (std::size_t k = 0; k < order_.size(); ++k) position[order_[k]] = k;
    for (VertexId u = 0; u < query.num_vertices(); ++u) {
      for (VertexId v : candidates_[u]) allowed_[u][v] = true;
    }
    // A query vertex with an earlier-matched neighbour w can only map to a
    // data neighbour of f(w).
    for (std::size_t k = 0; k < order_.size(); ++k) {
      for (VertexId w : query.adjacent_vertices(order_[k])) {
        if (position[w] < k) {
          anchor_[k] = w;
          break;
        }
      }
    }
    for (VertexId v = 0; v < data.num_vertices(); ++v) {
      data_adjacency_[v] = data.adjacent_vertices(v);
    }
    for (EdgeId e = 0; e < query.num_edges(); ++e) {
      std::size_t last = 0;
      for (VertexId u : query.edge(e)) last = std::max(last, position[u]);
      completes_at_[last].push_back(e);
    }
  }

  EmbeddingSet run() {
    recurse(0);
    return std::move(found_);
  }

 private:
  std::optional<EdgeId> image(EdgeId qe) const {
    std::vector<VertexId> img;
    for (VertexId u : query_.edge(qe)) img.push_back(mapping_[u]);
    std::sort(img.begin(), img.end());
    return data_.find_edge(img);
  }

  void recurse(std::size_t k) {
    if (k == order_.size()) {
      std::vector<EdgeId> tuple;
      for (EdgeId e = 0; e < query_.num_edges(); ++e) tuple.push_back(*image(e));
      found_.insert(std::move(tuple));
      return;
    }
    const VertexId u = order_[k];
    const std::vector<VertexId>& pool =
        anchor_[k] ? data_adjacency_[mapping_[*anchor_[k]]] : candidates_[u];
    for (VertexId v : pool) {
      if (used_[v] || !allowed_[u][v]) continue;
      mapping_[u] = v;
      bool ok = true;
      for (EdgeId e : completes_at_[k]) {
        if (!image(e)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used_[v] = true;
      recurse(k + 1);
      used_[v] = false;
    }
  }

  const Hypergraph& query_;
  const Hypergraph& data_;
  std::vector<std::vector<VertexId>> candidates_;
  std::vector<VertexId> order_;
  std::vector<VertexId> mapping_;
  std::vector<bool> used_;
  std::vector<std::vector<EdgeId>> completes_at_;
  std::vector<std::optional<VertexId>> anchor_;
  std::vector<std::vector<bool>> allowed_;
  std::vector<std::vector<VertexId>> data_adjacency_;
  EmbeddingSet found_;
};

}  // namespace

EmbeddingSet enumerate_by_vertex(const Hypergraph& query, const Hypergraph& data,
                                 const VertexMatchOptions& options) {
  std::vector<std::vector<VertexId>> candidates(query.num_vertices());
  for (VertexId u = 0; u < query.num_vertices(); ++u) {
    if (options.use_ihs) {
      candidates[u] = ihs_filter(u, query, data, options.ihs);
    } else {
      for (VertexId v = 0; v < data.num_vertices(); ++v) {
        if (data.label(v) == query.label(u)) candidates[u].push_back(v);
      }
    }
  }
  return VertexBacktracker(query, data, std::move(candidates)).run();
}

namespace {

// closing[u]: query edges whose largest vertex is u. A partial map is cut as
// soon as one of them has no image; the leaf still checks every edge.
void brute_force(const Hypergraph& query, const Hypergraph& data,
                 const std::vector<std::vector<EdgeId>>& closing, VertexId u,
                 std::vector<VertexId>& mapping, std::vector<bool>& used,
                 std::vector<VertexId>& image, EmbeddingSet& out) {
  auto image_of = [&](EdgeId e) {
    image.clear();
    for (VertexId w : query.edge(e)) image.push_back(mapping[w]);
    std::sort(image.begin(), image.end());
    return data.find_edge(image);
  };
  if (u == query.num_vertices()) {
    std::vector<EdgeId> tuple;
    for (EdgeId e = 0; e < query.num_edges(); ++e) {
      auto found = image_of(e);
      if (!found) return;
      tuple.push_back(*found);
    }
    out.insert(std::move(tuple));
    return;
  }
  for (VertexId v = 0; v < data.num_vertices(); ++v) {
    if (used[v] || data.label(v) != query.label(u)) continue;
    mapping[u] = v;
    if (std::ranges::all_of(closing[u], [&](EdgeId e) { return image_of(e).has_value(); })) {
      used[v] = true;
      brute_force(query, data, closing, u + 1, mapping, used, image, out);
      used[v] = false;
    }
  }
}

}  // namespace

EmbeddingSet brute_force_tiny(const Hypergraph& query, const Hypergraph& data) {
  if (query.num_vertices() > kBruteForceMaxQueryVertices) {
    throw OracleRefusal("brute force refuses queries with " +
                        std::to_string(query.num_vertices()) + " vertices (limit " +
                        std::to_string(kBruteForceMaxQueryVertices) + ")");
  }
  EmbeddingSet out;
  std::vector<VertexId> mapping(query.num_vertices(), 0);
  std::vector<bool> used(data.num_vertices(), false);
  std::vector<std::vector<EdgeId>> closing(query.num_vertices());
  for (EdgeId e = 0; e < query.num_edges(); ++e) closing[query.edge(e).back()].push_back(e);
  std::vector<VertexId> image;
  brute_force(query, data, closing, 0, mapping, used, image, out);
  return out;
}

}  // namespace hypermatch::oracle
