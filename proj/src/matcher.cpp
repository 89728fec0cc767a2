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

#include "hypermatch/matcher.hpp"

#include <algorithm>
#include <bit>

#include "hypermatch/set_ops.hpp"

namespace hypermatch {

Matcher::Matcher(const QueryPlan& plan, const IndexedHypergraph& data)
    : plan_(plan), data_(data) {
  partitions_.reserve(plan_.size());
  for (const auto& step : plan_.steps) {
    const Partition* p = data_.find(step.signature);
    partitions_.push_back(p);
    feasible_ = feasible_ && p != nullptr;
  }
}

std::span<const EdgeId> Matcher::first_candidates() const {
  if (!feasible_ || partitions_.empty()) return {};
  return partitions_.front()->edges();
}

std::vector<PartialEmbedding> Matcher::scan_first() const {
  std::vector<PartialEmbedding> out;
  for (EdgeId e : first_candidates()) out.push_back(extend(PartialEmbedding{}, e));
  return out;
}

CandidateSet Matcher::generate_candidates(std::size_t step, const PartialEmbedding& m) const {
  CandidateSet result;
  const PlanStep& ps = plan_.steps.at(step);
  for (const auto& [v, steps] : m.incidence()) {
    if (steps & ps.non_adjacent) ++result.non_incident_vertices;
  }
  const Hypergraph& g = data_.graph();
  for (const AdjacentStep& adj : ps.adjacent) {
    for (const SharedVertex& sv : adj.shared) {
      std::size_t n = 0;
      for (VertexId v : g.edge(m.matched()[adj.step])) {
        const StepMask steps = m.steps_of(v);
        if ((steps & ps.non_adjacent) == 0 && g.label(v) == sv.label &&
            static_cast<std::uint32_t>(std::popcount(steps)) == sv.prior_degree) {
          ++n;
        }
      }
      result.incident_vertex_counts.push_back(n);
    }
  }
  MatchScratch scratch;
  generate_candidates(step, m, result.candidates, scratch);
  return result;
}

void Matcher::generate_candidates(std::size_t step, const PartialEmbedding& m,
                                  std::vector<EdgeId>& out, MatchScratch& scratch) const {
  out.clear();
  const PlanStep& ps = plan_.steps.at(step);
  const Partition* partition = partitions_[step];
  if (partition == nullptr || m.size() != step) return;

  const Hypergraph& g = data_.graph();
  bool first = true;
  for (const AdjacentStep& adj : ps.adjacent) {
    const auto matched_vertices = g.edge(m.matched()[adj.step]);
    for (const SharedVertex& sv : adj.shared) {
      // Union of he(v, S(e_q)) over the admissible data vertices V_incdt.
      std::span<const EdgeId> single;
      bool have_single = false;
      bool any = false;
      for (VertexId v : matched_vertices) {
        const StepMask steps = m.steps_of(v);
        if ((steps & ps.non_adjacent) != 0 || g.label(v) != sv.label ||
            static_cast<std::uint32_t>(std::popcount(steps)) != sv.prior_degree) {
          continue;
        }
        const auto posting = partition->posting(v);
        if (!any) {
          single = posting;
          have_single = true;
          any = true;
        } else {
          if (have_single) {
            scratch.unite.assign(single.begin(), single.end());
            have_single = false;
          }
          setops::unite<EdgeId>(scratch.unite, posting, scratch.tmp);
          scratch.unite.swap(scratch.tmp);
        }
      }
      if (!any) return;
      const std::span<const EdgeId> contribution =
          have_single ? single : std::span<const EdgeId>(scratch.unite);
      if (first) {
        out.assign(contribution.begin(), contribution.end());
        first = false;
      } else {
        setops::intersect_into<EdgeId>(out, contribution, scratch.tmp);
      }
      if (out.empty()) return;
    }
  }
  std::erase_if(out, [&](EdgeId e) { return m.contains(e); });
}

bool Matcher::is_valid_embedding(std::size_t step, const PartialEmbedding& m) const {
  MatchScratch scratch;
  return is_valid_embedding(step, m, scratch, nullptr);
}

bool Matcher::is_valid_embedding(std::size_t step, const PartialEmbedding& m,
                                 MatchScratch& scratch, MatchCounters* counters) const {
  const PlanStep& ps = plan_.steps.at(step);
  if (m.size() != step + 1) return false;
  if (m.num_vertices() != ps.prefix_vertex_count) return false;
  if (counters) ++counters->filtered;

  const Hypergraph& g = data_.graph();
  const auto last = g.edge(m.matched()[step]);
  if (last.size() != ps.profile.size()) return false;
  auto& profiles = scratch.profiles;
  profiles.clear();
  for (VertexId v : last) profiles.push_back({g.label(v), m.steps_of(v)});
  std::sort(profiles.begin(), profiles.end());
  if (!std::equal(profiles.begin(), profiles.end(), ps.profile.begin(), ps.profile.end())) {
    return false;
  }
  if (counters) ++counters->validated;
  return true;
}

PartialEmbedding Matcher::extend(const PartialEmbedding& m, EdgeId edge) const {
  return m.extended(edge, data_.graph().edge(edge));
}

std::vector<EdgeId> Matcher::align(const PartialEmbedding& m) const {
  std::vector<EdgeId> out;
  align(m, out);
  return out;
}

void Matcher::align(const PartialEmbedding& m, std::vector<EdgeId>& out) const {
  out.assign(plan_.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) out[plan_.order[i]] = m.matched()[i];
}

namespace {

class DepthFirst {
 public:
  DepthFirst(const Matcher& matcher, const SequentialOptions& options, EnumerationResult& result)
      : matcher_(matcher), options_(options), result_(result),
        candidates_(matcher.num_steps()) {}

  void run() {
    for (EdgeId e : matcher_.first_candidates()) {
      ++result_.counters.candidates;
      ++result_.counters.filtered;
      ++result_.counters.validated;
      if (!descend(matcher_.extend(PartialEmbedding{}, e))) return;
    }
  }

 private:
  // Returns false once the deadline has passed.
  bool descend(const PartialEmbedding& m) {
    if (options_.deadline && (++ticks_ & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() >= *options_.deadline) {
      result_.timed_out = true;
      return false;
    }
    if (options_.on_visit) options_.on_visit(m);
    const std::size_t step = m.size();
    if (step == matcher_.num_steps()) {
      ++result_.count;
      if (options_.sink) {
        matcher_.align(m, aligned_);
        options_.sink(aligned_);
      }
      return true;
    }
    auto& cands = candidates_[step];
    matcher_.generate_candidates(step, m, cands, scratch_);
    result_.counters.candidates += cands.size();
    for (EdgeId c : cands) {
      PartialEmbedding next = matcher_.extend(m, c);
      if (!matcher_.is_valid_embedding(step, next, scratch_, &result_.counters)) continue;
      if (!descend(next)) return false;
    }
    return true;
  }

  const Matcher& matcher_;
  const SequentialOptions& options_;
  EnumerationResult& result_;
  std::vector<std::vector<EdgeId>> candidates_;
  MatchScratch scratch_;
  std::vector<EdgeId> aligned_;
  std::uint64_t ticks_ = 0;
};

}  // namespace

EnumerationResult enumerate_sequential(const QueryPlan& plan, const IndexedHypergraph& data,
                                       const SequentialOptions& options) {
  EnumerationResult result;
  Matcher matcher(plan, data);
  if (!matcher.feasible()) return result;
  DepthFirst(matcher, options, result).run();
  return result;
}

}  // namespace hypermatch
