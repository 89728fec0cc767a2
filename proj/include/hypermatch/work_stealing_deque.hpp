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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace hypermatch {

/// Chase-Lev work-stealing deque holding uniquely owned T.
///
/// The owning thread pushes and pops at the head (`bottom_`); any other
/// thread may steal from the tail (`top_`). Owner operations never wait on
/// thieves: the only point of contention is a CAS on `top_` when the deque
/// holds a single element.
template <typename T>
class WorkStealingDeque {
 public:
  explicit WorkStealingDeque(std::size_t initial_capacity = 256) {
    std::size_t cap = 1;
    while (cap < initial_capacity) cap <<= 1;
    auto ring = std::make_unique<Ring>(cap);
    ring_.store(ring.get(), std::memory_order_relaxed);
    rings_.push_back(std::move(ring));
  }

  WorkStealingDeque(const WorkStealingDeque&) = delete;
  WorkStealingDeque& operator=(const WorkStealingDeque&) = delete;

  ~WorkStealingDeque() {
    while (pop()) {
    }
  }

  /// Owner only.
  void push(std::unique_ptr<T> item) {
    const std::int64_t b = bottom_.load(std::memory_order_relaxed);
    const std::int64_t t = top_.load(std::memory_order_acquire);
    Ring* ring = ring_.load(std::memory_order_relaxed);
    if (b - t > static_cast<std::int64_t>(ring->capacity) - 1) ring = grow(ring, t, b);
    ring->put(b, item.release());
    std::atomic_thread_fence(std::memory_order_release);
    bottom_.store(b + 1, std::memory_order_relaxed);
  }

  /// Owner only. Most recently pushed item, or null.
  std::unique_ptr<T> pop() {
    const std::int64_t b = bottom_.load(std::memory_order_relaxed) - 1;
    Ring* ring = ring_.load(std::memory_order_relaxed);
    bottom_.store(b, std::memory_order_relaxed);
    std::atomic_thread_fence(std::memory_order_seq_cst);
    std::int64_t t = top_.load(std::memory_order_relaxed);
    if (t > b) {
      bottom_.store(b + 1, std::memory_order_relaxed);
      return nullptr;
    }
    T* item = ring->get(b);
    if (t == b) {
      // Last element: race against thieves for it.
      if (!top_.compare_exchange_strong(t, t + 1, std::memory_order_seq_cst,
                                        std::memory_order_relaxed)) {
        item = nullptr;
      }
      bottom_.store(b + 1, std::memory_order_relaxed);
    }
    return std::unique_ptr<T>(item);
  }

  /// Any thread. Oldest item, or null when empty or when another thread won
  /// the race for it.
  std::unique_ptr<T> steal() {
    std::int64_t t = top_.load(std::memory_order_acquire);
    std::atomic_thread_fence(std::memory_order_seq_cst);
    const std::int64_t b = bottom_.load(std::memory_order_acquire);
    if (t >= b) return nullptr;
    Ring* ring = ring_.load(std::memory_order_acquire);
    T* item = ring->get(t);
    if (!top_.compare_exchange_strong(t, t + 1, std::memory_order_seq_cst,
                                      std::memory_order_relaxed)) {
      return nullptr;
    }
    return std::unique_ptr<T>(item);
  }

  /// Any thread. Takes ceil(n/2) items from the tail, n being the length
  /// observed at the start, oldest first. Each item is taken by its own
  /// linearizable steal; the batch stops early on contention and may come
  /// back empty.
  std::size_t steal_half(std::vector<std::unique_ptr<T>>& out) {
    const std::int64_t n = static_cast<std::int64_t>(size());
    std::size_t taken = 0;
    for (std::int64_t k = 0; k < (n + 1) / 2; ++k) {
      auto item = steal();
      if (!item) break;
      out.push_back(std::move(item));
      ++taken;
    }
    return taken;
  }

  /// Approximate when read concurrently; exact for the owner at rest.
  std::size_t size() const {
    const std::int64_t b = bottom_.load(std::memory_order_relaxed);
    const std::int64_t t = top_.load(std::memory_order_relaxed);
    return b > t ? static_cast<std::size_t>(b - t) : 0;
  }
  bool empty() const { return size() == 0; }

 private:
  struct Ring {
    explicit Ring(std::size_t cap)
        : capacity(cap), mask(cap - 1), slots(std::make_unique<std::atomic<T*>[]>(cap)) {}
    T* get(std::int64_t i) const {
      return slots[static_cast<std::size_t>(i) & mask].load(std::memory_order_relaxed);
    }
    void put(std::int64_t i, T* item) {
      slots[static_cast<std::size_t>(i) & mask].store(item, std::memory_order_relaxed);
    }
    std::size_t capacity;
    std::size_t mask;
    std::unique_ptr<std::atomic<T*>[]> slots;
  };

  Ring* grow(Ring* old, std::int64_t t, std::int64_t b) {
    auto bigger = std::make_unique<Ring>(old->capacity * 2);
    for (std::int64_t i = t; i < b; ++i) bigger->put(i, old->get(i));
    Ring* raw = bigger.get();
    // Retired rings stay alive: a concurrent thief may still be reading one.
    rings_.push_back(std::move(bigger));
    ring_.store(raw, std::memory_order_release);
    return raw;
  }

  alignas(64) std::atomic<std::int64_t> top_{0};
  alignas(64) std::atomic<std::int64_t> bottom_{0};
  alignas(64) std::atomic<Ring*> ring_{nullptr};
  std::vector<std::unique_ptr<Ring>> rings_;
};

}  // namespace hypermatch
