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

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/query_gen.hpp"

namespace hypermatch::testing {

inline constexpr LabelId kA = 0;
inline constexpr LabelId kB = 1;
inline constexpr LabelId kC = 2;

// Data edges e1..e6 get ids 0..5.
inline Hypergraph f1_data() {
  return Hypergraph::canonicalize({kA, kC, kA, kC, kB, kA, kA},
                                  {{2, 4}, {4, 6}, {0, 1, 2}, {3, 5, 6}, {0, 1, 4, 6}, {2, 3, 4, 5}});
}

// Query edges eq1..eq3 get ids 0..2.
inline Hypergraph f1_query() {
  return Hypergraph::canonicalize({kA, kC, kA, kA, kB}, {{2, 4}, {0, 1, 2}, {0, 1, 3, 4}});
}

inline std::vector<std::vector<EdgeId>> f1_embeddings() { return {{0, 2, 4}, {1, 3, 5}}; }

// `copies` vertex-disjoint replicas of F1's data edges.
inline Hypergraph f1_copies(std::size_t copies) {
  const Hypergraph base = f1_data();
  std::vector<LabelId> labels;
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t c = 0; c < copies; ++c) {
    const auto offset = static_cast<VertexId>(c * base.num_vertices());
    for (VertexId v = 0; v < base.num_vertices(); ++v) labels.push_back(base.label(v));
    for (EdgeId e = 0; e < base.num_edges(); ++e) {
      std::vector<VertexId> edge;
      for (VertexId v : base.edge(e)) edge.push_back(v + offset);
      edges.push_back(std::move(edge));
    }
  }
  return Hypergraph::canonicalize(std::move(labels), edges);
}

struct SmallInstance {
  Hypergraph data;
  Hypergraph query;
  std::uint64_t seed;
};

// Random data hypergraph with at most `max_vertices` vertices, at most
// `max_edges` edges of arity 1..4 and at most `max_labels` labels, plus a
// random-walk query of 2..4 edges with at most 10 vertices.
inline std::optional<SmallInstance> random_instance(std::uint64_t seed,
                                                    std::size_t max_vertices = 12,
                                                    std::size_t max_edges = 10,
                                                    std::size_t max_labels = 3) {
  std::mt19937_64 rng(seed);
  const std::size_t n = 3 + uniform_below(rng, max_vertices - 2);
  const std::size_t m = 2 + uniform_below(rng, max_edges - 1);
  const std::size_t num_labels = 1 + uniform_below(rng, max_labels);
  std::vector<LabelId> labels(n);
  for (auto& l : labels) l = static_cast<LabelId>(uniform_below(rng, num_labels));
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t arity = 1 + uniform_below(rng, std::min<std::size_t>(4, n));
    std::vector<VertexId> pool(n);
    for (std::size_t v = 0; v < n; ++v) pool[v] = static_cast<VertexId>(v);
    std::vector<VertexId> edge;
    for (std::size_t k = 0; k < arity; ++k) {
      const std::size_t j = k + uniform_below(rng, n - k);
      std::swap(pool[k], pool[j]);
      edge.push_back(pool[k]);
    }
    edges.push_back(std::move(edge));
  }
  Hypergraph data = Hypergraph::canonicalize(std::move(labels), edges);

  QuerySettings settings;
  settings.num_edges = 2 + uniform_below(rng, 3);
  settings.min_vertices = 1;
  settings.max_vertices = 10;
  settings.num_queries = 1;
  settings.seed = rng();
  if (settings.num_edges > data.num_edges()) return std::nullopt;
  try {
    auto queries = generate_queries(data, settings);
    return SmallInstance{std::move(data), std::move(queries.front()), seed};
  } catch (const QueryGenerationError&) {
    return std::nullopt;
  }
}

// Dense-ish instance for parallel runs: `blocks` disjoint blocks, each a
// complete 2-uniform hypergraph (clique) on `block_size` vertices labelled
// with one label, queried with a path of `path_edges` edges. Every injective
// path lands inside one block.
inline Hypergraph clique_blocks(std::size_t blocks, std::size_t block_size) {
  std::vector<LabelId> labels(blocks * block_size, kA);
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto base = static_cast<VertexId>(b * block_size);
    for (VertexId i = 0; i < block_size; ++i) {
      for (VertexId j = i + 1; j < block_size; ++j) edges.push_back({base + i, base + j});
    }
  }
  return Hypergraph::canonicalize(std::move(labels), edges);
}

inline Hypergraph path_query(std::size_t path_edges) {
  std::vector<LabelId> labels(path_edges + 1, kA);
  std::vector<std::vector<VertexId>> edges;
  for (VertexId i = 0; i < path_edges; ++i) edges.push_back({i, i + 1});
  return Hypergraph::canonicalize(std::move(labels), edges);
}

}  // namespace hypermatch::testing
