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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "hyperslice/error.hpp"
#include "hyperslice/fixtures.hpp"
#include "hyperslice/tabu.hpp"

using namespace hyperslice;

namespace {

// Row-major incidence bits built from per-plane edge lists.
std::vector<std::uint64_t> naive_incidence(std::span<const ReducedHyperplane> planes,
                                           const ReducedGrid& grid) {
  const std::size_t words = (grid.edge_count() + 63) / 64;
  std::vector<std::uint64_t> bits(words * planes.size(), 0);
  for (std::size_t p = 0; p < planes.size(); ++p) {
    const auto coverage = sliced_reduced_edges(planes.subspan(p, 1), grid);
    for (const auto e : coverage.edges) bits[p * words + e / 64] |= std::uint64_t{1} << (e % 64);
  }
  return bits;
}

TabuConfig q6_config(std::uint64_t seed) {
  TabuConfig config(5, Composition({3, 1, 1, 1}));
  config.coeff_bound = 5;
  config.neighbor_delta = 2;
  config.stagnation_limit = 20000;
  config.seed = seed;
  config.time_limit = Seconds(120);
  return config;
}

using Rank = std::pair<std::int64_t, std::int64_t>;

class TraceObserver : public TabuObserver {
 public:
  void on_restart(int, std::span<const ReducedHyperplane> start) override {
    ++runs;
    expanded.clear();
    frontier.clear();
    last_best.reset();
    for (const auto& p : start) {
      for (Eigen::Index i = 0; i < p.coefficients.size(); ++i) mix(p.coefficients[i]);
    }
  }
  void on_expand(int, const IncidenceHash& hash, std::int64_t sliced,
                 std::int64_t reduced) override {
    ++expansions;
    if (!expanded.insert(hash.to_hex()).second) ++duplicates;
    const Rank rank{sliced, reduced};
    if (!frontier.empty()) {
      if (*frontier.rbegin() != rank) ++order_errors;
      frontier.erase(std::prev(frontier.end()));
    } else if (expansions_in_run() > 0) {
      ++order_errors;
    }
    mix(hash.digest[0]);
    mix(hash.digest[1]);
  }
  void on_insert(int, std::int64_t sliced, std::int64_t reduced) override {
    frontier.insert({sliced, reduced});
  }
  void on_improve(int, std::int64_t sliced, std::int64_t reduced) override {
    const Rank rank{sliced, reduced};
    if (last_best && rank <= *last_best) ++best_errors;
    last_best = rank;
    ++improvements;
  }
  void on_run_end(int, std::int64_t seen) override {
    mix(static_cast<std::uint64_t>(seen));
  }

  std::size_t expansions_in_run() const { return expanded.size() - 1; }

  std::set<std::string> expanded;
  std::multiset<Rank> frontier;
  std::optional<Rank> last_best;
  std::int64_t runs = 0, expansions = 0, duplicates = 0, order_errors = 0, best_errors = 0;
  std::int64_t improvements = 0;
  std::uint64_t digest = 1469598103934665603ull;

 private:
  void mix(std::uint64_t x) { digest = (digest ^ x) * 1099511628211ull; }
};

}  // namespace

TEST_CASE("hash_words matches reference MurmurHash3 x64/128 values") {
  CHECK(hash_words({}).to_hex() == "00000000000000000000000000000000");
  const std::vector<std::uint64_t> one{1};
  CHECK(hash_words(one).to_hex() == "004403b7fb05c44a3d8acdb4d36d9c06");
  const std::vector<std::uint64_t> three{0x0123456789abcdefull, 0xfedcba9876543210ull, 42};
  CHECK(hash_words(three).to_hex() == "b2c3fe6739b54481ee85e02afe8707dd");
  const std::vector<std::uint64_t> eight{1, 2, 3, 4, 5, 6, 7, 8};
  CHECK(hash_words(eight).to_hex() == "e1e0fd996ea32c9332878ca1e08f44e2");
}

TEST_CASE("incidence_hash") {
  const Composition c({6, 1, 1, 1, 1});
  const ReducedGrid grid = build_grid(c);
  const PlaneSet eq1 = fixture("eq1_q10_8planes").planes();
  const PlaneSet orig = fixture("appB_q10_orig").planes();

  SUBCASE("digest of the row-major incidence bits") {
    for (const PlaneSet* planes : {&eq1, &orig}) {
      const auto reduced = reduce_planes(*planes, c);
      CHECK(incidence_hash(*planes, grid) == hash_words(naive_incidence(reduced, grid)));
    }
  }
  SUBCASE("different constructions differ") {
    const auto a = naive_incidence(reduce_planes(eq1, c), grid);
    const auto b = naive_incidence(reduce_planes(orig, c), grid);
    REQUIRE(a != b);
    CHECK(incidence_hash(eq1, grid) != incidence_hash(orig, grid));
  }
  SUBCASE("positive scaling keeps the hash") {
    auto planes = reduce_planes(eq1, c);
    const IncidenceHash before = incidence_hash(planes, grid);
    planes[3].coefficients *= 5;
    CHECK(incidence_hash(planes, grid) == before);
    planes[3].bias = Bias(5, 2);
    CHECK(incidence_hash(planes, grid) == before);
    std::swap(planes[0], planes[1]);
    CHECK(incidence_hash(planes, grid) != before);
  }
  SUBCASE("empty sets") {
    CHECK(incidence_hash(PlaneSet(10), grid) == IncidenceHash{});
    CHECK(incidence_hash(PlaneSet(10), grid) == incidence_hash(PlaneSet(10), grid));
  }
  SUBCASE("composition violations") {
    CHECK_THROWS_AS(incidence_hash(fixture("paterson_q6_5planes").planes(), grid), InvalidInput);
    IntVector a = IntVector::Ones(10);
    a[0] = 2;
    CHECK_THROWS_AS(incidence_hash(PlaneSet(10, {Hyperplane(a)}), grid), InvalidInput);
  }
}

TEST_CASE("tabu config validation") {
  const ReducedGrid grid = build_grid(Composition({3, 1, 1, 1}));
  TabuConfig config = q6_config(1);
  CHECK_NOTHROW(config.validate());
  SUBCASE("time limit") {
    config.time_limit = Seconds(-1);
    CHECK_THROWS_AS(run_tabu(config, grid), InvalidInput);
  }
  SUBCASE("stagnation limit") {
    config.stagnation_limit = 0;
    CHECK_THROWS_AS(config.validate(), InvalidInput);
  }
  SUBCASE("frontier capacity") {
    config.frontier_capacity = 0;
    CHECK_THROWS_AS(config.validate(), InvalidInput);
  }
  SUBCASE("start of the wrong shape") {
    config.start = std::vector<ReducedHyperplane>(2, {IntVector::Zero(4), Bias::half()});
    CHECK_THROWS_AS(config.validate(), InvalidInput);
    config.start = std::vector<ReducedHyperplane>(5, {IntVector::Constant(4, 6), Bias::half()});
    CHECK_THROWS_AS(config.validate(), InvalidInput);
  }
}

TEST_CASE("run_tabu reaches full slicing of Q_6 with 5 planes") {
  const TabuConfig config = q6_config(1);
  const ReducedGrid grid = build_grid(config.composition);
  const auto result = run_tabu(config, grid);
  CHECK(result.reached_target);
  CHECK(result.sliced == 192);
  CHECK(result.reduced_sliced == grid.edge_count());
  CHECK(verify_full(result.best_planes).all_sliced);
  for (const auto& p : result.best) CHECK(p.coefficients.cwiseAbs().maxCoeff() <= 5);
}

TEST_CASE("k = 0") {
  TabuConfig config(0, Composition({2, 2}));
  const auto result = run_tabu(config, build_grid(config.composition));
  CHECK(result.sliced == 0);
  CHECK(result.best.empty());
}

TEST_CASE("R = 1 from an optimum stops after one expansion") {
  TabuConfig config(8, Composition({6, 1, 1, 1, 1}));
  config.frozen_value = -2;
  config.coeff_bound = 10;
  config.stagnation_limit = 1;
  config.max_restarts = 1;
  config.target_sliced = 5121;  // unreachable, so the start is expanded
  config.start = reduce_planes(fixture("eq1_q10_8planes").planes(), config.composition);
  const ReducedGrid grid = build_grid(config.composition);
  TraceObserver trace;
  const auto result = run_tabu(config, grid, &trace);
  CHECK(trace.expansions == 1);
  CHECK(trace.improvements == 0);
  CHECK(result.iterations == 1);
  CHECK(result.sliced == 5120);
  CHECK_FALSE(result.reached_target);
}

TEST_CASE("tabu trace properties") {
  TabuConfig config(4, Composition({2, 2, 1, 1}));
  config.coeff_bound = 6;
  config.neighbor_delta = 2;
  config.stagnation_limit = 3000;
  config.max_restarts = 4;
  config.seed = 99;
  config.target_sliced = 1000;  // unreachable
  const ReducedGrid grid = build_grid(config.composition);
  TraceObserver first, second;
  const auto a = run_tabu(config, grid, &first);
  const auto b = run_tabu(config, grid, &second);
  CHECK(first.runs == 4);
  CHECK(first.expansions > 4);
  CHECK(first.duplicates == 0);
  CHECK(first.order_errors == 0);
  CHECK(first.best_errors == 0);
  CHECK(first.improvements > 0);
  CHECK(first.digest == second.digest);
  CHECK(a.sliced == b.sliced);
  CHECK(a.iterations == b.iterations);
  CHECK(count_sliced(a.best_planes) == a.sliced);
  CHECK(static_cast<std::int64_t>(sliced_reduced_edges(a.best, grid).edges.size()) ==
        a.reduced_sliced);
}

TEST_CASE("small frontier evicts the lowest ranked states") {
  TabuConfig config(3, Composition({2, 2, 1, 1}));
  config.coeff_bound = 4;
  config.stagnation_limit = 500;
  config.frontier_capacity = 1;
  config.max_restarts = 2;
  config.seed = 5;
  const ReducedGrid grid = build_grid(config.composition);
  const auto result = run_tabu(config, grid);
  CHECK(result.restarts == 2);
  CHECK(count_sliced(result.best_planes) == result.sliced);
}
