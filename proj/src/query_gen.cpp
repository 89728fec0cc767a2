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

#include "hypermatch/query_gen.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

namespace hypermatch {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

namespace {

std::string describe(const QuerySettings& s) {
  return "|E|=" + std::to_string(s.num_edges) + ", |V| in [" + std::to_string(s.min_vertices) +
         ", " + std::to_string(s.max_vertices) + "], seed=" + std::to_string(s.seed);
}

std::optional<std::vector<EdgeId>> walk(const Hypergraph& data, std::size_t num_edges,
                                        std::mt19937_64& rng) {
  std::vector<EdgeId> collected{static_cast<EdgeId>(uniform_below(rng, data.num_edges()))};
  std::vector<bool> taken(data.num_edges(), false);
  taken[collected[0]] = true;
  std::vector<EdgeId> frontier;
  while (collected.size() < num_edges) {
    frontier.clear();
    for (EdgeId e : collected) {
      for (EdgeId f : data.adjacent_edges(e)) {
        if (!taken[f]) frontier.push_back(f);
      }
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    if (frontier.empty()) return std::nullopt;
    const EdgeId next = frontier[uniform_below(rng, frontier.size())];
    taken[next] = true;
    collected.push_back(next);
  }
  return collected;
}

}  // namespace

std::vector<Hypergraph> generate_queries(const Hypergraph& data, const QuerySettings& settings) {
  if (settings.num_edges == 0) throw QueryGenerationError("query must have at least one hyperedge");
  if (settings.min_vertices > settings.max_vertices) {
    throw QueryGenerationError("min_vertices exceeds max_vertices (" + describe(settings) + ")");
  }
  if (data.num_edges() < settings.num_edges) {
    throw QueryGenerationError("data hypergraph has fewer hyperedges than requested (" +
                               describe(settings) + ")");
  }

  std::mt19937_64 rng(settings.seed);
  std::vector<Hypergraph> queries;
  for (std::size_t q = 0; q < settings.num_queries; ++q) {
    bool accepted = false;
    for (std::size_t attempt = 0; attempt < kWalkAttemptsPerQuery && !accepted; ++attempt) {
      auto edges = walk(data, settings.num_edges, rng);
      if (!edges) continue;
      std::unordered_map<VertexId, VertexId> relabel;
      std::vector<LabelId> labels;
      std::vector<std::vector<VertexId>> raw;
      for (EdgeId e : *edges) {
        std::vector<VertexId> qe;
        for (VertexId v : data.edge(e)) {
          auto [it, inserted] = relabel.try_emplace(v, static_cast<VertexId>(labels.size()));
          if (inserted) labels.push_back(data.label(v));
          qe.push_back(it->second);
        }
        raw.push_back(std::move(qe));
      }
      if (labels.size() < settings.min_vertices || labels.size() > settings.max_vertices) continue;
      queries.push_back(Hypergraph::canonicalize(std::move(labels), raw));
      accepted = true;
    }
    if (!accepted) {
      throw QueryGenerationError("random walk budget exhausted for query " + std::to_string(q) +
                                 " (" + describe(settings) + ")");
    }
  }
  return queries;
}

}  // namespace hypermatch
