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

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <span>
#include <vector>

namespace hypermatch::setops {

/// Sorted-merge intersection of two ascending, duplicate-free ranges.
template <typename T>
void intersect_merge(std::span<const T> a, std::span<const T> b, std::vector<T>& out) {
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
}

/// Exponential-search intersection; `small` is probed against `large`.
template <typename T>
void intersect_gallop(std::span<const T> small, std::span<const T> large, std::vector<T>& out) {
  out.clear();
  std::size_t lo = 0;
  for (const T& x : small) {
    if (lo >= large.size()) break;
    std::size_t bound = 1;
    while (lo + bound < large.size() && large[lo + bound] < x) bound <<= 1;
    const std::size_t from = lo + bound / 2;
    const std::size_t to = std::min(lo + bound + 1, large.size());
    auto it = std::lower_bound(large.begin() + static_cast<std::ptrdiff_t>(from),
                               large.begin() + static_cast<std::ptrdiff_t>(to), x);
    lo = static_cast<std::size_t>(it - large.begin());
    if (it != large.end() && *it == x) {
      out.push_back(x);
      ++lo;
    }
  }
}

/// Picks galloping when the inputs are badly unbalanced.
template <typename T>
void intersect(std::span<const T> a, std::span<const T> b, std::vector<T>& out) {
  if (a.size() > b.size()) std::swap(a, b);
  if (a.size() * 16 < b.size()) {
    intersect_gallop(a, b, out);
  } else {
    intersect_merge(a, b, out);
  }
}

/// In-place intersection of `acc` with `other`.
template <typename T>
void intersect_into(std::vector<T>& acc, std::span<const T> other, std::vector<T>& scratch) {
  intersect<T>(acc, other, scratch);
  acc.swap(scratch);
}

template <typename T>
void unite(std::span<const T> a, std::span<const T> b, std::vector<T>& out) {
  out.clear();
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

}  // namespace hypermatch::setops
