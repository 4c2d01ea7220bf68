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

#include "hyperslice/tabu.hpp"

#include <cstdio>
#include <set>
#include <unordered_set>

#include "hyperslice/error.hpp"
#include "worker_pool.hpp"

namespace hyperslice {
namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int r) { return (x << r) | (x >> (64 - r)); }

constexpr std::uint64_t fmix(std::uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdull;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ull;
  k ^= k >> 33;
  return k;
}

std::vector<ReducedHyperplane> to_planes(const IntRowMatrix& coefficients, Bias bias) {
  std::vector<ReducedHyperplane> planes;
  planes.reserve(coefficients.rows());
  for (Eigen::Index p = 0; p < coefficients.rows(); ++p) {
    planes.push_back({coefficients.row(p).transpose(), bias});
  }
  return planes;
}

// |phi| over Q_n, then over the grid.
struct Rank {
  std::int64_t sliced = 0;
  std::int64_t reduced = 0;

  friend auto operator<=>(const Rank&, const Rank&) = default;
};

struct Entry {
  Rank rank;
  std::uint64_t seq = 0;
  IntRowMatrix coefficients;
};

// Best first, then oldest.
struct EntryOrder {
  bool operator()(const Entry& a, const Entry& b) const {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.seq < b.seq;
  }
};

class TabuRunner {
 public:
  TabuRunner(const TabuConfig& config, const ReducedGrid& grid, int worker,
             detail::Collector& collector, detail::StopToken& stop, TabuObserver* observer)
      : config_(config),
        grid_(grid),
        worker_(worker),
        collector_(collector),
        stop_(stop),
        observer_(observer),
        rng_(config.seed ^ static_cast<std::uint64_t>(worker)),
        free_(config.free_coordinates()),
        ones_(grid.edge_count(), 1),
        target_(config.target_sliced.value_or(grid.total_multiplicity())) {}

  detail::WorkerStats run() {
    detail::WorkerStats stats;
    while (!stop_.should_stop()) {
      if (config_.max_restarts && stats.restarts >= *config_.max_restarts) break;
      ++stats.restarts;
      if (explore(stats)) {
        stop_.request_stop();
        break;
      }
    }
    return stats;
  }

 private:
  bool explore(detail::WorkerStats& stats) {
    const auto start = stats.restarts == 1 && config_.start
                           ? *config_.start
                           : random_valid_planeset(config_, rng_);
    if (observer_) observer_->on_restart(worker_, start);
    std::unordered_set<IncidenceHash, IncidenceHashHasher> seen;
    std::set<Entry, EntryOrder> frontier;
    std::uint64_t seq = 0;

    SliceState start_state(grid_, start);
    seen.insert(incidence_hash(start_state));
    Rank best_rank{start_state.covered_multiplicity(), start_state.covered()};
    detail::Candidate best{start, best_rank.reduced, best_rank.sliced,
                           best_rank.sliced >= target_};
    frontier.insert(Entry{best_rank, seq++, start_state.coefficients()});
    auto since = static_cast<std::int64_t>(seen.size());

    Proposal proposal;
    std::vector<std::uint64_t> bits;
    while (!best.reached_target && static_cast<std::int64_t>(seen.size()) - since <
                                       config_.stagnation_limit) {
      if (frontier.empty() || stop_.should_stop()) break;
      auto node = frontier.extract(frontier.begin());
      Entry& current = node.value();
      SliceState state(grid_, to_planes(current.coefficients, config_.bias));
      ++stats.iterations;
      const std::size_t words = state.words_per_row();
      bits.resize(words * state.plane_count());
      for (int p = 0; p < state.plane_count(); ++p) {
        const auto row = state.row(p);
        std::copy(row.begin(), row.end(), bits.begin() + p * words);
      }
      if (observer_) {
        observer_->on_expand(worker_, hash_words(bits), current.rank.sliced,
                             current.rank.reduced);
      }

      IntVector coeffs;
      for (int p = 0; p < state.plane_count() && !best.reached_target; ++p) {
        const auto slot = bits.begin() + p * words;
        for (const int j : free_) {
          const std::int64_t base = current.coefficients(p, j);
          for (std::int64_t step = -config_.neighbor_delta; step <= config_.neighbor_delta;
               ++step) {
            if (step == 0 || std::abs(base + step) > config_.coeff_bound) continue;
            coeffs = current.coefficients.row(p).transpose();
            coeffs[j] = base + step;
            state.propose(p, coeffs, proposal);
            std::copy(proposal.row.begin(), proposal.row.end(), slot);
            const bool fresh = seen.insert(hash_words(bits)).second;
            if (!fresh) continue;

            const CoverDelta d = state.delta(proposal, ones_);
            const Rank rank{state.covered_multiplicity() + d.multiplicity,
                            state.covered() + d.covered};
            IntRowMatrix next = current.coefficients;
            next.row(p) = coeffs.transpose();
            if (rank > best_rank) {
              best_rank = rank;
              best = {to_planes(next, config_.bias), rank.reduced, rank.sliced,
                      rank.sliced >= target_};
              since = static_cast<std::int64_t>(seen.size());
              if (observer_) observer_->on_improve(worker_, rank.sliced, rank.reduced);
            }
            frontier.insert(Entry{rank, seq++, std::move(next)});
            if (observer_) observer_->on_insert(worker_, rank.sliced, rank.reduced);
            if (static_cast<std::int64_t>(frontier.size()) > config_.frontier_capacity) {
              frontier.erase(std::prev(frontier.end()));
            }
            if (best.reached_target) break;
          }
          if (best.reached_target) break;
        }
        const auto row = state.row(p);
        std::copy(row.begin(), row.end(), slot);
      }
    }
    if (observer_) observer_->on_run_end(worker_, static_cast<std::int64_t>(seen.size()));
    const bool reached = best.reached_target;
    collector_.submit(std::move(best));
    return reached;
  }

  const TabuConfig& config_;
  const ReducedGrid& grid_;
  int worker_;
  detail::Collector& collector_;
  detail::StopToken& stop_;
  TabuObserver* observer_;
  Rng rng_;
  std::vector<int> free_;
  std::vector<std::int64_t> ones_;
  std::int64_t target_;
};

}  // namespace

std::string IncidenceHash::to_hex() const {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(digest[0]),
                static_cast<unsigned long long>(digest[1]));
  return buf;
}

IncidenceHash hash_words(std::span<const std::uint64_t> words) {
  constexpr std::uint64_t c1 = 0x87c37b91114253d5ull;
  constexpr std::uint64_t c2 = 0x4cf5ad432745937full;
  std::uint64_t h1 = 0;
  std::uint64_t h2 = 0;
  const std::size_t blocks = words.size() / 2;
  for (std::size_t i = 0; i < blocks; ++i) {
    std::uint64_t k1 = words[2 * i];
    std::uint64_t k2 = words[2 * i + 1];
    k1 *= c1;
    k1 = rotl(k1, 31);
    k1 *= c2;
    h1 ^= k1;
    h1 = rotl(h1, 27);
    h1 += h2;
    h1 = h1 * 5 + 0x52dce729;
    k2 *= c2;
    k2 = rotl(k2, 33);
    k2 *= c1;
    h2 ^= k2;
    h2 = rotl(h2, 31);
    h2 += h1;
    h2 = h2 * 5 + 0x38495ab5;
  }
  if (words.size() % 2 == 1) {
    std::uint64_t k1 = words.back();
    k1 *= c1;
    k1 = rotl(k1, 31);
    k1 *= c2;
    h1 ^= k1;
  }
  const auto len = static_cast<std::uint64_t>(words.size() * sizeof(std::uint64_t));
  h1 ^= len;
  h2 ^= len;
  h1 += h2;
  h2 += h1;
  h1 = fmix(h1);
  h2 = fmix(h2);
  h1 += h2;
  h2 += h1;
  return IncidenceHash{{h1, h2}};
}

IncidenceHash incidence_hash(const SliceState& state) {
  std::vector<std::uint64_t> bits;
  bits.reserve(state.words_per_row() * state.plane_count());
  for (int p = 0; p < state.plane_count(); ++p) {
    const auto row = state.row(p);
    bits.insert(bits.end(), row.begin(), row.end());
  }
  return hash_words(bits);
}

IncidenceHash incidence_hash(std::span<const ReducedHyperplane> planes, const ReducedGrid& grid) {
  return incidence_hash(SliceState(grid, planes));
}

IncidenceHash incidence_hash(const PlaneSet& planes, const ReducedGrid& grid) {
  if (planes.dimension() != grid.composition().dimension()) {
    throw InvalidInput("plane set has dimension " + std::to_string(planes.dimension()) +
                       ", grid has " + std::to_string(grid.composition().dimension()));
  }
  return incidence_hash(reduce_planes(planes, grid.composition()), grid);
}

void TabuConfig::validate() const {
  SharedConfig::validate();
  if (stagnation_limit < 1) throw InvalidInput("stagnation limit must be at least 1");
  if (frontier_capacity < 1) throw InvalidInput("frontier capacity must be at least 1");
  if (!start) return;
  if (static_cast<int>(start->size()) != k) {
    throw InvalidInput("start has " + std::to_string(start->size()) + " planes, k = " +
                       std::to_string(k));
  }
  for (std::size_t p = 0; p < start->size(); ++p) {
    const ReducedHyperplane& plane = (*start)[p];
    const std::string which = "start plane " + std::to_string(p + 1);
    if (plane.coefficients.size() != composition.size()) {
      throw InvalidInput(which + " has " + std::to_string(plane.coefficients.size()) +
                         " reduced coefficients, expected " + std::to_string(composition.size()));
    }
    if (plane.coefficients.cwiseAbs().maxCoeff() > coeff_bound) {
      throw InvalidInput(which + " exceeds the coefficient bound");
    }
    if (plane.bias != bias) throw InvalidInput(which + " has bias " + plane.bias.to_string());
    if (frozen_value && plane.coefficients[0] != *frozen_value) {
      throw InvalidInput(which + " does not carry the frozen value");
    }
  }
}

SearchResult run_tabu(const TabuConfig& config, const ReducedGrid& grid, TabuObserver* observer) {
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

  detail::Collector collector(detail::Collector::Order::kSlicedFirst);
  detail::StopToken stop(started + std::chrono::duration_cast<detail::Clock::duration>(
                                       config.time_limit));
  const auto stats = detail::run_workers(config.workers, [&](int worker) {
    return TabuRunner(config, grid, worker, collector, stop, observer).run();
  });

  result.iterations = stats.iterations;
  result.restarts = stats.restarts;
  result.wall_seconds = Seconds(detail::Clock::now() - started).count();
  if (auto best = collector.best()) {
    result.best = std::move(best->planes);
    result.reduced_sliced = best->covered;
    result.sliced = best->multiplicity;
    result.reached_target = best->reached_target;
  }
  result.best_planes = lift_planes(result.best, config.composition);
  return result;
}

}  // namespace hyperslice
