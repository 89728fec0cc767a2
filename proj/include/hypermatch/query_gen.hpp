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
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

struct QuerySettings {
  std::size_t num_edges = 3;
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 20;
  std::uint64_t seed = 0;
  std::size_t num_queries = 20;
};

class QueryGenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kWalkAttemptsPerQuery = 1000;

/// Uniform integer in [0, bound) from a 64-bit generator by rejection
/// sampling on the top of the range. Fixed across standard libraries, unlike
/// std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Samples connected query subhypergraphs by random walks.
///
/// Each walk draws a start hyperedge uniformly, then repeatedly draws one
/// hyperedge uniformly from the ascending list of not-yet-collected
/// hyperedges adjacent to the collected set, until `num_edges` are
/// collected. A walk is kept iff its vertex count lies in
/// [min_vertices, max_vertices]. Query vertices are numbered by first
/// appearance (walk order, then ascending data id within an edge) and keep
/// their data labels. Randomness comes from std::mt19937_64(seed) through
/// uniform_below only.
std::vector<Hypergraph> generate_queries(const Hypergraph& data, const QuerySettings& settings);

}  // namespace hypermatch
