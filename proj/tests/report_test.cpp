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

#include "hypermatch/report.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace hypermatch {
namespace {

TEST(Report, JsonRoundTripIsLossless) {
  const IndexedHypergraph idx(testing::f1_copies(30));
  const auto plan = plan_query(testing::f1_query(), idx);
  EngineConfig config;
  config.workers = 3;
  const auto exec = execute_parallel(plan, idx, config);
  const auto run = report::from_execution("q.hg", plan, exec, 3);
  EXPECT_EQ(run.count, exec.count);
  EXPECT_EQ(run.workers.size(), 3u);
  const auto text = report::to_json(run).dump();
  EXPECT_EQ(report::query_run_from_json(nlohmann::json::parse(text)), run);
}

TEST(Report, FixedFieldNames) {
  const IndexedHypergraph idx(testing::f1_data());
  const auto plan = plan_query(testing::f1_query(), idx);
  const auto result = enumerate_sequential(plan, idx);
  const auto j = report::to_json(report::from_sequential("f1", plan, result, 0.5));
  for (const char* key :
       {"count", "elapsed_ms", "order", "candidates", "filtered", "workers", "peak_live_tasks"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j.at("count").get<std::uint64_t>(), 2u);
  EXPECT_EQ(j.at("order").get<std::vector<EdgeId>>(), (std::vector<EdgeId>{0, 1, 2}));
  EXPECT_GE(j.at("candidates").get<std::uint64_t>(), j.at("filtered").get<std::uint64_t>());
}

TEST(Report, StatsFields) {
  const auto j = report::to_json(testing::f1_data().stats());
  EXPECT_EQ(j.at("num_vertices"), 7);
  EXPECT_EQ(j.at("num_hyperedges"), 6);
  EXPECT_EQ(j.at("num_labels"), 3);
  EXPECT_EQ(j.at("max_arity"), 4);
  EXPECT_DOUBLE_EQ(j.at("mean_arity").get<double>(), 3.0);
}

}  // namespace
}  // namespace hypermatch
