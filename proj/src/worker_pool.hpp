// Copyright 2026 The hyperslice Authors
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

#ifndef HYPERSLICE_SRC_WORKER_POOL_HPP_
#define HYPERSLICE_SRC_WORKER_POOL_HPP_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "hyperslice/reduced.hpp"

namespace hyperslice::detail {

using Clock = std::chrono::steady_clock;

// A finished restart's best state.
struct Candidate {
  std::vector<ReducedHyperplane> planes;
  std::int64_t covered = 0;       // |phi|
  std::int64_t multiplicity = 0;  // edges of Q_n
  bool reached_target = false;
};

// Keeps the maximum over all workers. Strictly better candidates replace the
// incumbent, so among equals the first submitted stays.
class Collector {
 public:
  // Which count decides first; the other breaks ties.
  enum class Order { kReducedFirst, kSlicedFirst };

  explicit Collector(Order order = Order::kReducedFirst) : order_(order) {}

  void submit(Candidate candidate) {
    std::lock_guard lock(mutex_);
    if (!best_ || better(candidate, *best_)) best_ = std::move(candidate);
  }
  std::optional<Candidate> best() const {
    std::lock_guard lock(mutex_);
    return best_;
  }
  bool better(const Candidate& a, const Candidate& b) const {
    if (a.reached_target != b.reached_target) return a.reached_target;
    if (order_ == Order::kSlicedFirst && a.multiplicity != b.multiplicity) {
      return a.multiplicity > b.multiplicity;
    }
    if (a.covered != b.covered) return a.covered > b.covered;
    return a.multiplicity > b.multiplicity;
  }

 private:
  Order order_;
  mutable std::mutex mutex_;
  std::optional<Candidate> best_;
};

// Shared stop signal: the deadline passed or some worker hit the target.
class StopToken {
 public:
  explicit StopToken(Clock::time_point deadline) : deadline_(deadline) {}
  bool should_stop() {
    if (stop_.load(std::memory_order_relaxed)) return true;
    if (Clock::now() >= deadline_) {
      stop_.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
  void request_stop() { stop_.store(true, std::memory_order_relaxed); }

 private:
  Clock::time_point deadline_;
  std::atomic<bool> stop_{false};
};

struct WorkerStats {
  std::int64_t iterations = 0;
  std::int64_t restarts = 0;
};

// Runs fn(worker_id) on `workers` threads (inline when there is one) and sums
// the returned stats.
template <typename Fn>
WorkerStats run_workers(int workers, Fn&& fn) {
  if (workers <= 1) return fn(0);
  std::vector<WorkerStats> stats(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          stats[w] = fn(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  WorkerStats total;
  for (const auto& s : stats) {
    total.iterations += s.iterations;
    total.restarts += s.restarts;
  }
  return total;
}

}  // namespace hyperslice::detail

#endif  // HYPERSLICE_SRC_WORKER_POOL_HPP_
