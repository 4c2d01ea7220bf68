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

#ifndef HYPERSLICE_SEARCH_HPP_
#define HYPERSLICE_SEARCH_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hyperslice/composition.hpp"
#include "hyperslice/core.hpp"
#include "hyperslice/reduced.hpp"

namespace hyperslice {

using Rng = std::mt19937_64;
using Seconds = std::chrono::duration<double>;

// Fields common to the hill-climbing and tabu searches: the space of plane
// sets searched and the run budget.
struct SharedConfig {
  SharedConfig(int k, Composition composition)
      : n(composition.dimension()), k(k), composition(std::move(composition)) {}

  int n;
  int k;
  Composition composition;
  // Reduced coefficients stay in [-coeff_bound, coeff_bound].
  std::int64_t coeff_bound = 40;
  // Largest per-coordinate change of a single move.
  std::int64_t neighbor_delta = 3;
  // When set, block 0's reduced coefficient is pinned to this value and never
  // moved.
  std::optional<std::int64_t> frozen_value;
  // Fixed offset of every generated plane.
  Bias bias = Bias::half();

  std::uint64_t seed = 0;
  Seconds time_limit{60.0};
  // Worker w draws from an engine seeded with seed ^ w.
  int workers = 1;
  // Restarts per worker; unset means restart until the time limit.
  std::optional<std::int64_t> max_restarts;
  // Stop as soon as this many edges of Q_n are sliced. Unset means all of them.
  std::optional<std::int64_t> target_sliced;

  // Throws InvalidInput / DegenerateConfig.
  void validate() const;
  // Reduced coordinates a move may change.
  std::vector<int> free_coordinates() const;
};

enum class FitnessMode {
  // Each reduced edge counts its weight.
  kPlain,
  // Each reduced edge counts weight x multiplicity.
  kWeighted,
};

struct FitnessOptions {
  FitnessMode mode = FitnessMode::kPlain;
  bool variance_penalty = true;
};

struct SearchConfig : SharedConfig {
  using SharedConfig::SharedConfig;

  // Zero selects the default: 50 |E| iterations without a strict gain in
  // reduced coverage end a restart.
  std::int64_t max_iterations = 0;
  // Zero selects the default of 2 |E|.
  std::int64_t weight_period = 0;
  std::int32_t weight_limit = 32;
  FitnessOptions fitness;

  void validate() const;
  std::int64_t resolved_max_iterations(const ReducedGrid& grid) const {
    return max_iterations > 0 ? max_iterations : 50 * grid.edge_count();
  }
  std::int64_t resolved_weight_period(const ReducedGrid& grid) const {
    return weight_period > 0 ? weight_period : 2 * grid.edge_count();
  }
};

// Integer weight per reduced edge, each kept in [1, limit].
class WeightMap {
 public:
  WeightMap(std::int64_t edges, std::int32_t limit);

  std::span<const std::int32_t> weights() const { return weights_; }
  std::int32_t operator[](std::int64_t edge) const { return weights_[edge]; }
  std::int32_t limit() const { return limit_; }
  // Raise by one, capped at the limit. Returns true if the weight changed.
  bool bump(std::int64_t edge);
  void reset();

 private:
  std::vector<std::int32_t> weights_;
  std::int32_t limit_;
};

// psi(H, w): sum of w(e) (times mu(e) in weighted mode) over phi(H), minus the
// population variance of the per-plane reduced counts |phi(H_i)|. Evaluated
// from scratch; the search engine tracks the same quantity incrementally.
double fitness_psi(std::span<const ReducedHyperplane> planes,
                   std::span<const std::int32_t> weights, const ReducedGrid& grid,
                   const FitnessOptions& options = {});
double fitness_psi(const PlaneSet& planes, std::span<const std::int32_t> weights,
                   const ReducedGrid& grid, const FitnessOptions& options = {});

// k planes, free reduced coefficients uniform in [-C, C], block 0 pinned when
// frozen, every bias at config.bias.
std::vector<ReducedHyperplane> random_valid_planeset(const SharedConfig& config, Rng& rng);

// Copy in which one uniformly chosen plane has one or two (equally likely)
// distinct free coordinates moved by a uniform nonzero step in [-d, d]. Steps
// leaving [-C, C] are redrawn.
std::vector<ReducedHyperplane> random_neighbor(std::span<const ReducedHyperplane> planes,
                                               const SharedConfig& config, Rng& rng);

// Outcome of a search, best plane set first.
struct SearchResult {
  std::vector<ReducedHyperplane> best;
  PlaneSet best_planes{1};
  std::int64_t reduced_sliced = 0;
  std::int64_t reduced_total = 0;
  std::int64_t sliced = 0;  // edges of Q_n
  std::int64_t total = 0;
  std::int64_t iterations = 0;
  std::int64_t restarts = 0;
  double wall_seconds = 0.0;
  bool reached_target = false;
};

// Hooks into the inner loop. Called from worker threads when workers > 1.
class SearchObserver {
 public:
  virtual ~SearchObserver() = default;
  virtual void on_restart(int /*worker*/, std::span<const ReducedHyperplane> /*start*/) {}
  // psi of the current and accepted states under the weights in effect.
  virtual void on_accept(int /*worker*/, double /*psi_before*/, double /*psi_after*/,
                         std::span<const ReducedHyperplane> /*accepted*/,
                         const WeightMap& /*weights*/) {}
  virtual void on_weights(int /*worker*/, const WeightMap& /*weights*/) {}
};

// Adaptive edge-weighted hill climbing with restarts. A neighbor is accepted
// when psi does not drop. A strict psi gain resets the weight timer and a
// strict gain in |phi| resets the iteration timer. Every weight_period
// iterations without psi gain, all currently unsliced edges gain weight. The
// best is the highest |phi| seen, ties going to the larger Q_n count, then to
// the earliest found; a state reaching target_sliced wins outright.
SearchResult run_search(const SearchConfig& config, const ReducedGrid& grid,
                        SearchObserver* observer = nullptr);

}  // namespace hyperslice

#endif  // HYPERSLICE_SEARCH_HPP_
