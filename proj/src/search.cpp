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

#include "hyperslice/search.hpp"

#include <algorithm>

#include "hyperslice/error.hpp"
#include "hyperslice/incidence.hpp"
#include "worker_pool.hpp"

namespace hyperslice {
namespace {

using Wide = __int128;

struct Move {
  int plane = 0;
  IntVector coefficients;
};

std::int64_t draw_step(const SharedConfig& config, std::int64_t current, Rng& rng) {
  const std::int64_t d = config.neighbor_delta;
  std::uniform_int_distribution<std::int64_t> pick(1, 2 * d);
  for (int attempt = 0; attempt < 256; ++attempt) {
    const std::int64_t u = pick(rng);
    const std::int64_t step = u <= d ? u - d - 1 : u - d;
    if (std::abs(current + step) <= config.coeff_bound) return step;
  }
  throw DegenerateConfig("no step in [-" + std::to_string(d) + ", " + std::to_string(d) +
                         "] keeps coefficient " + std::to_string(current) + " within [-" +
                         std::to_string(config.coeff_bound) + ", " +
                         std::to_string(config.coeff_bound) + "]");
}

Move propose_move(const IntRowMatrix& coefficients, const SharedConfig& config,
                  const std::vector<int>& free, Rng& rng) {
  if (coefficients.rows() == 0 || free.empty()) {
    throw DegenerateConfig("no plane or no free coordinate to move");
  }
  Move move;
  move.plane = std::uniform_int_distribution<int>(0, static_cast<int>(coefficients.rows()) - 1)(rng);
  move.coefficients = coefficients.row(move.plane).transpose();
  const int free_count = static_cast<int>(free.size());
  const int changes =
      free_count >= 2 ? std::uniform_int_distribution<int>(1, 2)(rng) : 1;
  const int first = std::uniform_int_distribution<int>(0, free_count - 1)(rng);
  int picked[2] = {free[first], -1};
  if (changes == 2) {
    int second = std::uniform_int_distribution<int>(0, free_count - 2)(rng);
    if (second >= first) ++second;
    picked[1] = free[second];
  }
  for (int c = 0; c < changes; ++c) {
    const int j = picked[c];
    move.coefficients[j] += draw_step(config, move.coefficients[j], rng);
  }
  return move;
}

Wide scaled_psi(std::int64_t value_sum, std::int64_t sum_counts, Wide sum_squares, int k,
                bool variance_penalty) {
  const Wide kk = static_cast<Wide>(k) * k;
  Wide out = kk * value_sum;
  if (variance_penalty) out -= static_cast<Wide>(k) * sum_squares - static_cast<Wide>(sum_counts) * sum_counts;
  return out;
}

double to_psi(Wide scaled, int k) {
  return static_cast<double>(scaled) / (static_cast<double>(k) * k);
}

// One worker's restart loop.
class HillClimber {
 public:
  HillClimber(const SearchConfig& config, const ReducedGrid& grid, int worker,
              detail::Collector& collector, detail::StopToken& stop,
              SearchObserver* observer)
      : config_(config),
        grid_(grid),
        worker_(worker),
        collector_(collector),
        stop_(stop),
        observer_(observer),
        rng_(config.seed ^ static_cast<std::uint64_t>(worker)),
        free_(config.free_coordinates()),
        weights_(grid.edge_count(), config.weight_limit),
        values_(grid.edge_count()),
        target_(config.target_sliced.value_or(grid.total_multiplicity())),
        max_iterations_(config.resolved_max_iterations(grid)),
        weight_period_(config.resolved_weight_period(grid)) {}

  detail::WorkerStats run() {
    detail::WorkerStats stats;
    while (!stop_.should_stop()) {
      if (config_.max_restarts && stats.restarts >= *config_.max_restarts) break;
      ++stats.restarts;
      if (climb(stats)) {
        stop_.request_stop();
        break;
      }
    }
    return stats;
  }

 private:
  std::int64_t edge_value(std::int64_t e) const {
    return config_.fitness.mode == FitnessMode::kWeighted
               ? weights_[e] * grid_.edge(e).multiplicity
               : weights_[e];
  }

  // Returns true if the target was reached.
  bool climb(detail::WorkerStats& stats) {
    const int k = config_.k;
    const bool penalty = config_.fitness.variance_penalty;
    const auto start = random_valid_planeset(config_, rng_);
    SliceState state(grid_, start);
    weights_.reset();
    for (std::int64_t e = 0; e < grid_.edge_count(); ++e) values_[e] = edge_value(e);
    if (observer_) observer_->on_restart(worker_, start);

    std::int64_t value_sum = 0;
    for (std::int64_t e = 0; e < grid_.edge_count(); ++e) {
      if (state.is_covered(e)) value_sum += values_[e];
    }
    std::int64_t sum_counts = 0;
    Wide sum_squares = 0;
    for (const auto c : state.plane_counts()) {
      sum_counts += c;
      sum_squares += static_cast<Wide>(c) * c;
    }
    Wide psi = scaled_psi(value_sum, sum_counts, sum_squares, k, penalty);

    detail::Candidate best{start, state.covered(), state.covered_multiplicity(),
                           state.covered_multiplicity() >= target_};
    Proposal proposal;
    std::int64_t t = 0;
    std::int64_t tw = 0;
    while (t < max_iterations_ && !best.reached_target) {
      if ((stats.iterations & 255) == 0 && stop_.should_stop()) break;
      ++stats.iterations;

      const Move move = propose_move(state.coefficients(), config_, free_, rng_);
      state.propose(move.plane, move.coefficients, proposal);
      const CoverDelta d = state.delta(proposal, values_);
      const std::int64_t old_count = state.plane_sliced(move.plane);
      const std::int64_t new_sum_counts = sum_counts - old_count + proposal.count;
      const Wide new_sum_squares = sum_squares - static_cast<Wide>(old_count) * old_count +
                                   static_cast<Wide>(proposal.count) * proposal.count;
      const Wide new_psi =
          scaled_psi(value_sum + d.value, new_sum_counts, new_sum_squares, k, penalty);

      if (new_psi >= psi) {
        if (new_psi > psi) tw = 0;
        if (d.covered > 0) t = 0;
        state.commit(proposal);
        if (observer_) {
          observer_->on_accept(worker_, to_psi(psi, k), to_psi(new_psi, k), state.planes(),
                               weights_);
        }
        psi = new_psi;
        value_sum += d.value;
        sum_counts = new_sum_counts;
        sum_squares = new_sum_squares;
        const bool reached = state.covered_multiplicity() >= target_;
        if (reached || state.covered() > best.covered ||
            (state.covered() == best.covered &&
             state.covered_multiplicity() > best.multiplicity)) {
          best = {state.planes(), state.covered(), state.covered_multiplicity(), reached};
        }
      }

      if (tw > weight_period_) {
        // Only unsliced edges move, so value_sum (and psi) are unchanged.
        for (std::int64_t e = 0; e < grid_.edge_count(); ++e) {
          if (!state.is_covered(e) && weights_.bump(e)) values_[e] = edge_value(e);
        }
        tw = 0;
        if (observer_) observer_->on_weights(worker_, weights_);
      }
      ++tw;
      ++t;
    }
    const bool reached = best.reached_target;
    collector_.submit(std::move(best));
    return reached;
  }

  const SearchConfig& config_;
  const ReducedGrid& grid_;
  int worker_;
  detail::Collector& collector_;
  detail::StopToken& stop_;
  SearchObserver* observer_;
  Rng rng_;
  std::vector<int> free_;
  WeightMap weights_;
  std::vector<std::int64_t> values_;
  std::int64_t target_;
  std::int64_t max_iterations_;
  std::int64_t weight_period_;
};

}  // namespace

void SharedConfig::validate() const {
  if (k < 0) throw InvalidInput("k must be nonnegative");
  if (n != composition.dimension()) {
    throw InvalidInput("composition " + composition.to_string() + " sums to " +
                       std::to_string(composition.dimension()) + ", not n = " +
                       std::to_string(n));
  }
  if (time_limit.count() <= 0) throw InvalidInput("time limit must be positive");
  if (workers < 1) throw InvalidInput("need at least one worker");
  if (coeff_bound < 0) throw InvalidInput("coefficient bound must be nonnegative");
  if (neighbor_delta < 1) throw InvalidInput("neighbor delta must be at least 1");
  if (max_restarts && *max_restarts < 0) throw InvalidInput("max restarts must be nonnegative");
  if (frozen_value && std::abs(*frozen_value) > coeff_bound) {
    throw InvalidInput("frozen value " + std::to_string(*frozen_value) +
                       " is outside the coefficient bound");
  }
  if (k > 0) {
    if (coeff_bound == 0) throw DegenerateConfig("coefficient bound 0 leaves no moves");
    if (neighbor_delta > 2 * coeff_bound) {
      throw DegenerateConfig("neighbor delta exceeds twice the coefficient bound");
    }
    if (free_coordinates().empty()) {
      throw DegenerateConfig("every reduced coordinate is frozen; nothing to search");
    }
  }
}

std::vector<int> SharedConfig::free_coordinates() const {
  std::vector<int> out;
  for (int j = frozen_value ? 1 : 0; j < composition.size(); ++j) out.push_back(j);
  return out;
}

void SearchConfig::validate() const {
  SharedConfig::validate();
  if (weight_limit < 1) throw InvalidInput("weight limit must be at least 1");
  if (max_iterations < 0 || weight_period < 0) {
    throw InvalidInput("iteration counts must be nonnegative");
  }
}

WeightMap::WeightMap(std::int64_t edges, std::int32_t limit)
    : weights_(static_cast<std::size_t>(edges), 1), limit_(limit) {
  if (limit < 1) throw InvalidInput("weight limit must be at least 1");
}

bool WeightMap::bump(std::int64_t edge) {
  if (weights_[edge] >= limit_) return false;
  ++weights_[edge];
  return true;
}

void WeightMap::reset() { std::fill(weights_.begin(), weights_.end(), 1); }

double fitness_psi(std::span<const ReducedHyperplane> planes,
                   std::span<const std::int32_t> weights, const ReducedGrid& grid,
                   const FitnessOptions& options) {
  if (static_cast<std::int64_t>(weights.size()) != grid.edge_count()) {
    throw InvalidInput("weight map size does not match the grid");
  }
  if (planes.empty()) return 0.0;
  const auto coverage = sliced_reduced_edges(planes, grid);
  std::int64_t value_sum = 0;
  for (const auto e : coverage.edges) {
    value_sum += options.mode == FitnessMode::kWeighted
                     ? weights[e] * grid.edge(e).multiplicity
                     : weights[e];
  }
  std::int64_t sum_counts = 0;
  Wide sum_squares = 0;
  for (const auto& edges : coverage.per_plane) {
    const auto c = static_cast<std::int64_t>(edges.size());
    sum_counts += c;
    sum_squares += static_cast<Wide>(c) * c;
  }
  const int k = static_cast<int>(planes.size());
  return to_psi(scaled_psi(value_sum, sum_counts, sum_squares, k, options.variance_penalty),
                k);
}

double fitness_psi(const PlaneSet& planes, std::span<const std::int32_t> weights,
                   const ReducedGrid& grid, const FitnessOptions& options) {
  return fitness_psi(reduce_planes(planes, grid.composition()), weights, grid, options);
}

std::vector<ReducedHyperplane> random_valid_planeset(const SharedConfig& config, Rng& rng) {
  if (config.coeff_bound < 0) throw InvalidInput("coefficient bound must be nonnegative");
  std::uniform_int_distribution<std::int64_t> coeff(-config.coeff_bound, config.coeff_bound);
  std::vector<ReducedHyperplane> out;
  out.reserve(config.k);
  for (int p = 0; p < config.k; ++p) {
    ReducedHyperplane plane;
    plane.coefficients.resize(config.composition.size());
    for (int j = 0; j < config.composition.size(); ++j) {
      plane.coefficients[j] = (j == 0 && config.frozen_value) ? *config.frozen_value : coeff(rng);
    }
    plane.bias = config.bias;
    out.push_back(std::move(plane));
  }
  return out;
}

std::vector<ReducedHyperplane> random_neighbor(std::span<const ReducedHyperplane> planes,
                                               const SharedConfig& config, Rng& rng) {
  IntRowMatrix coefficients(planes.size(), config.composition.size());
  for (std::size_t p = 0; p < planes.size(); ++p) {
    if (planes[p].size() != config.composition.size()) {
      throw InvalidInput("plane does not match the configured composition");
    }
    coefficients.row(p) = planes[p].coefficients.transpose();
  }
  const Move move = propose_move(coefficients, config, config.free_coordinates(), rng);
  std::vector<ReducedHyperplane> out(planes.begin(), planes.end());
  out[move.plane].coefficients = move.coefficients;
  return out;
}

SearchResult run_search(const SearchConfig& config, const ReducedGrid& grid,
                        SearchObserver* observer) {
  config.validate();
  if (grid.composition() != config.composition) {
    throw InvalidInput("grid was built for composition " + grid.composition().to_string() +
                       ", config names " + config.composition.to_string());
  }
  const auto started = detail::Clock::now();
  SearchResult result;
  result.reduced_total = grid.edge_count();
  result.total = grid.total_multiplicity();
  const std::int64_t target = config.target_sliced.value_or(result.total);
  if (config.k == 0) {
    result.best_planes = PlaneSet(config.n, {}, config.composition);
    result.reached_target = target <= 0;
    return result;
  }

  detail::Collector collector;
  detail::StopToken stop(started + std::chrono::duration_cast<detail::Clock::duration>(
                                       config.time_limit));
  const auto stats = detail::run_workers(config.workers, [&](int worker) {
    return HillClimber(config, grid, worker, collector, stop, observer).run();
  });

  result.iterations = stats.iterations;
  result.restarts = stats.restarts;
  result.wall_seconds = Seconds(detail::Clock::now() - started).count();
  if (auto best = collector.best()) {
    result.best = std::move(best->planes);
    result.reduced_sliced = best->covered;
    result.sliced = best->multiplicity;
    result.reached_target = best->reached_target;
  } else {
    // Stopped before the first restart finished.
    Rng rng(config.seed);
    result.best = random_valid_planeset(config, rng);
    const auto coverage = sliced_reduced_edges(result.best, grid);
    result.reduced_sliced = static_cast<std::int64_t>(coverage.edges.size());
    result.sliced = weighted_sliced_count(result.best, grid);
  }
  result.best_planes = lift_planes(result.best, config.composition);
  return result;
}

}  // namespace hyperslice
