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

#ifndef HYPERSLICE_TABU_HPP_
#define HYPERSLICE_TABU_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperslice/core.hpp"
#include "hyperslice/incidence.hpp"
#include "hyperslice/reduced.hpp"
#include "hyperslice/search.hpp"

namespace hyperslice {

// 128-bit digest of the k x |E| plane/edge incidence bit matrix.
struct IncidenceHash {
  std::array<std::uint64_t, 2> digest{};

  std::string to_hex() const;
  friend bool operator==(const IncidenceHash&, const IncidenceHash&) = default;
};

struct IncidenceHashHasher {
  std::size_t operator()(const IncidenceHash& h) const noexcept {
    return static_cast<std::size_t>(h.digest[0] ^ (h.digest[1] * 0x9E3779B97F4A7C15ull));
  }
};

// MurmurHash3 x64/128 over 64-bit words, seed 0. Words are consumed as
// integers, so the digest does not depend on byte order.
IncidenceHash hash_words(std::span<const std::uint64_t> words);

// Rows are planes in order, each padded with zero bits to whole 64-bit words;
// bit e of a row is reduced edge e in grid order.
IncidenceHash incidence_hash(const SliceState& state);
IncidenceHash incidence_hash(std::span<const ReducedHyperplane> planes, const ReducedGrid& grid);
// Throws InvalidInput if the planes do not satisfy the grid's composition.
IncidenceHash incidence_hash(const PlaneSet& planes, const ReducedGrid& grid);

struct TabuConfig : SharedConfig {
  using SharedConfig::SharedConfig;

  // A run ends once this many states have been seen since its last
  // improvement.
  std::int64_t stagnation_limit = 20000;
  // Unexplored states kept; beyond this the lowest ranked are dropped.
  std::int64_t frontier_capacity = 100000;
  // First state of each worker's first run instead of a random one. Must have
  // k planes within the bound, with config.bias and the frozen value if set.
  std::optional<std::vector<ReducedHyperplane>> start;

  void validate() const;
};

class TabuObserver {
 public:
  virtual ~TabuObserver() = default;
  virtual void on_restart(int /*worker*/, std::span<const ReducedHyperplane> /*start*/) {}
  // A frontier state is popped and its neighborhood enumerated.
  virtual void on_expand(int /*worker*/, const IncidenceHash& /*hash*/,
                         std::int64_t /*sliced*/, std::int64_t /*reduced_sliced*/) {}
  // A fresh neighbor entered the frontier.
  virtual void on_insert(int /*worker*/, std::int64_t /*sliced*/,
                         std::int64_t /*reduced_sliced*/) {}
  // The run best changed.
  virtual void on_improve(int /*worker*/, std::int64_t /*sliced*/,
                          std::int64_t /*reduced_sliced*/) {}
  virtual void on_run_end(int /*worker*/, std::int64_t /*seen*/) {}
};

// Best-first search over single-coefficient moves with a seen set of
// incidence hashes. States rank by edges of Q_n sliced, then by reduced edges
// sliced; the frontier pops the highest rank, oldest first. A run ends when
// stagnation_limit states have been seen without a new run best, or the
// frontier is empty. Runs restart from random_valid_planeset until the time
// limit, max_restarts, or the target. `iterations` counts expansions.
SearchResult run_tabu(const TabuConfig& config, const ReducedGrid& grid,
                      TabuObserver* observer = nullptr);

}  // namespace hyperslice

#endif  // HYPERSLICE_TABU_HPP_
