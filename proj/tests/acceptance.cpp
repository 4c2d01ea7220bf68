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

// Acceptance suite. Prints one PASS/FAIL line per criterion; pass criterion
// numbers as arguments to run a subset.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hyperslice/bounds.hpp"
#include "hyperslice/core.hpp"
#include "hyperslice/fixtures.hpp"
#include "hyperslice/reduced.hpp"
#include "hyperslice/search.hpp"
#include "hyperslice/tabu.hpp"

using namespace hyperslice;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

int worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

// 1. Golden verification.
Outcome golden() {
  Outcome o;
  const std::vector<std::pair<const char*, std::int64_t>> expected = {
      {"eq1_q10_8planes", 5120},
      {"paterson_q6_5planes", 192},
      {"appB_q10_orig", 5120},
      {"appB_q10_alt", 5120},
      {"appC_q15_12planes", 245628},
  };
  for (const auto& [name, count] : expected) {
    const auto start = Clock::now();
    const PlaneSet planes = fixture(name).planes();
    const VerifyResult r = verify_full(planes);
    const double t = seconds_since(start);
    const std::int64_t total = hypercube_edge_count(planes.dimension());
    const bool full_expected = count == total;
    if (r.sliced != count || r.all_sliced != full_expected ||
        static_cast<std::int64_t>(r.unsliced.size()) != total - count) {
      o.fail(std::string(name) + " sliced " + std::to_string(r.sliced));
    }
    if (t >= 1.0) o.fail(std::string(name) + " took " + fmt(t) + " s");
    o.note(std::string(name) + "=" + std::to_string(r.sliced) + "/" + std::to_string(total) +
           " in " + fmt(t) + " s");
  }
  return o;
}

std::vector<ReducedHyperplane> random_planes(std::mt19937_64& rng, const Composition& c, int k,
                                             std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> coeff(-bound, bound);
  std::uniform_int_distribution<int> bias_pick(0, 3);
  const Bias biases[] = {Bias::half(), Bias(0, 1), Bias(1, 1), Bias(-3, 2)};
  std::vector<ReducedHyperplane> planes;
  for (int p = 0; p < k; ++p) {
    IntVector a(c.size());
    for (int j = 0; j < c.size(); ++j) a[j] = coeff(rng);
    planes.push_back({a, biases[bias_pick(rng)]});
  }
  return planes;
}

// 2. Reduction equivalence.
Outcome reduction_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(20260101);
  std::int64_t checked = 0, full = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const Composition& c : all_compositions(n)) {
      const ReducedGrid grid = build_grid(c);
      for (int trial = 0; trial < 50; ++trial) {
        // Axis-parallel planes per block slice everything; mix them in so
        // both sides of the equivalence are exercised.
        std::vector<ReducedHyperplane> planes;
        if (trial % 10 == 0) {
          for (int j = 0; j < c.size(); ++j) {
            for (int m = 0; m < c.block(j); ++m) {
              IntVector a = IntVector::Zero(c.size());
              a[j] = 1;
              planes.push_back({a, Bias(2 * m - c.block(j) + 1, 1)});
            }
          }
        } else {
          const int k = 1 + static_cast<int>(rng() % (n + 1));
          planes = random_planes(rng, c, k, 4);
        }
        const PlaneSet lifted = lift_planes(planes, c);
        const std::int64_t brute = count_sliced(lifted);
        const std::int64_t weighted = weighted_sliced_count(planes, grid);
        const bool grid_full =
            static_cast<std::int64_t>(sliced_reduced_edges(planes, grid).edges.size()) ==
            grid.edge_count();
        const bool verified = verify_full(lifted).all_sliced;
        if (brute != weighted) {
          o.fail("count mismatch on " + c.to_string());
          return o;
        }
        if (grid_full != verified) {
          o.fail("coverage mismatch on " + c.to_string());
          return o;
        }
        ++checked;
        full += verified;
      }
    }
  }
  const double t = seconds_since(start);
  if (t >= 300) o.fail("took " + fmt(t) + " s");
  o.note(std::to_string(checked) + " plane sets, " + std::to_string(full) + " full, " + fmt(t) +
         " s");
  return o;
}

// 3. Counting identities.
Outcome counting_identities() {
  Outcome o;
  const auto start = Clock::now();
  std::int64_t grids = 0;
  for (int n = 1; n <= 12; ++n) {
    for (const Composition& c : all_compositions(n)) {
      std::int64_t vertices = 1;
      for (int j = 0; j < c.size(); ++j) vertices *= c.block(j) + 1;
      std::int64_t edges = 0;
      for (int i = 0; i < c.size(); ++i) {
        std::int64_t term = c.block(i);
        for (int j = 0; j < c.size(); ++j) {
          if (j != i) term *= c.block(j) + 1;
        }
        edges += term;
      }
      const ReducedGrid grid = build_grid(c);
      std::int64_t mu = 0;
      for (const auto& e : grid.edges()) mu += e.multiplicity;
      if (grid.vertex_count() != vertices || grid.edge_count() != edges ||
          mu != (std::int64_t{n} << (n - 1))) {
        o.fail("identity fails for " + c.to_string());
        return o;
      }
      ++grids;
    }
  }
  const double t = seconds_since(start);
  if (t >= 60) o.fail("took " + fmt(t) + " s");
  o.note(std::to_string(grids) + " compositions, " + fmt(t) + " s");
  return o;
}

struct RunGoal {
  std::string label;
  SearchConfig config;
  std::int64_t required;
};

void run_goal(Outcome& o, const std::string& label, const SearchResult& r, std::int64_t required,
              double limit_seconds) {
  const bool ok = r.sliced >= required && r.wall_seconds <= limit_seconds &&
                  count_sliced(r.best_planes) == r.sliced;
  if (!ok) {
    o.fail(label + " reached " + std::to_string(r.sliced) + "/" + std::to_string(r.total) +
           ", needed " + std::to_string(required));
  }
  o.note(label + " " + std::to_string(r.sliced) + "/" + std::to_string(r.total) + " in " +
         fmt(r.wall_seconds) + " s");
}

// 4. Search reproduction.
Outcome search_reproduction() {
  Outcome o;
  {
    SearchConfig config(5, Composition({3, 1, 1, 1}));
    config.seed = 1;
    config.workers = worker_count();
    config.time_limit = Seconds(60);
    run_goal(o, "(6,5)", run_search(config, build_grid(config.composition)), 192, 60);
  }
  {
    SearchConfig config(6, Composition({4, 1, 1, 1}));
    config.seed = 1;
    config.workers = worker_count();
    config.time_limit = Seconds(600);
    run_goal(o, "(7,6)", run_search(config, build_grid(config.composition)), 448, 600);
  }
  {
    SearchConfig config(8, Composition({6, 1, 1, 1, 1}));
    config.frozen_value = -2;
    config.coeff_bound = 10;
    config.fitness.mode = FitnessMode::kWeighted;
    config.seed = 1;
    config.workers = worker_count();
    config.time_limit = Seconds(1800);
    config.target_sliced = 5100;
    run_goal(o, "(10,8) frozen -2", run_search(config, build_grid(config.composition)), 5100,
             1800);
  }
  return o;
}

// 5. Tabu parity.
Outcome tabu_parity() {
  Outcome o;
  {
    TabuConfig config(5, Composition({3, 1, 1, 1}));
    config.coeff_bound = 5;
    config.neighbor_delta = 2;
    config.seed = 1;
    config.workers = worker_count();
    config.time_limit = Seconds(600);
    run_goal(o, "(6,5)", run_tabu(config, build_grid(config.composition)), 192, 600);
  }
  {
    TabuConfig config(8, Composition({6, 1, 1, 1, 1}));
    config.frozen_value = -2;
    config.coeff_bound = 10;
    config.neighbor_delta = 1;
    config.seed = 1;
    config.workers = worker_count();
    config.time_limit = Seconds(1800);
    config.target_sliced = 5090;
    run_goal(o, "(10,8) frozen -2", run_tabu(config, build_grid(config.composition)), 5090, 1800);
  }
  return o;
}

// 6. Bound calculus.
Outcome bound_calculus() {
  Outcome o;
  const auto start = Clock::now();
  // S(10q + r) <= 8q + S(r) with S(r) for r < 10 from the base cases and
  // S(r) <= S(6) + (r - 6) for r = 7, 8, 9.
  const int rest[10] = {0, 1, 2, 3, 4, 5, 5, 6, 7, 8};
  for (int n = 1; n <= 200; ++n) {
    const int expected = n <= 5 ? n : 8 * (n / 10) + rest[n % 10];
    if (upper_bound(n) != expected) {
      o.fail("upper_bound(" + std::to_string(n) + ") = " + std::to_string(upper_bound(n)) +
             ", expected " + std::to_string(expected));
      return o;
    }
    int parts = 0, bounds = 0;
    for (const auto& [part, bound] : subadditive_chain(n)) {
      if (base_upper_bounds().at(part) != bound) o.fail("bad base bound for part " +
                                                         std::to_string(part));
      parts += part;
      bounds += bound;
    }
    if (parts != n || bounds != expected) {
      o.fail("chain for " + std::to_string(n) + " sums to " + std::to_string(parts) + " / " +
             std::to_string(bounds));
      return o;
    }
  }
  const double t = seconds_since(start);
  if (t >= 1) o.fail("took " + fmt(t) + " s");
  o.note("n in [1,200], " + fmt(t) + " s");
  return o;
}

class SearchTrace : public SearchObserver {
 public:
  explicit SearchTrace(const ReducedGrid& grid) : grid_(grid) {}
  void on_restart(int, std::span<const ReducedHyperplane> start) override {
    for (const auto& p : start) mix_plane(p);
  }
  void on_accept(int, double before, double after, std::span<const ReducedHyperplane> accepted,
                 const WeightMap& weights) override {
    if (after < before) ++drops;
    if (++accepts % 101 == 0 && fitness_psi(accepted, weights.weights(), grid_) != after) {
      ++psi_errors;
    }
    for (const auto& p : accepted) mix_plane(p);
  }
  void on_weights(int, const WeightMap& weights) override {
    for (const auto w : weights.weights()) {
      if (w < 1 || w > weights.limit()) ++weight_errors;
    }
    ++weight_updates;
  }
  std::int64_t accepts = 0, drops = 0, psi_errors = 0, weight_errors = 0, weight_updates = 0;
  std::uint64_t digest = 1469598103934665603ull;

 private:
  void mix_plane(const ReducedHyperplane& p) {
    for (Eigen::Index i = 0; i < p.coefficients.size(); ++i) {
      digest = (digest ^ static_cast<std::uint64_t>(p.coefficients[i])) * 1099511628211ull;
    }
  }
  const ReducedGrid& grid_;
};

class TabuTrace : public TabuObserver {
 public:
  void on_restart(int, std::span<const ReducedHyperplane>) override {
    run_hashes.clear();
    mix(0xABCD);
  }
  void on_expand(int, const IncidenceHash& hash, std::int64_t, std::int64_t) override {
    ++expansions;
    if (!run_hashes.insert(hash.to_hex()).second) ++duplicates;
    mix(hash.digest[0]);
    mix(hash.digest[1]);
  }
  std::set<std::string> run_hashes;
  std::int64_t expansions = 0, duplicates = 0;
  std::uint64_t digest = 1469598103934665603ull;

 private:
  void mix(std::uint64_t x) { digest = (digest ^ x) * 1099511628211ull; }
};

// 7. Algorithm-trace properties.
Outcome trace_properties() {
  Outcome o;
  const auto start = Clock::now();
  {
    SearchConfig config(5, Composition({2, 2, 1, 1}));
    config.seed = 7;
    config.max_restarts = 3;
    config.max_iterations = 30000;
    config.weight_period = 100;
    config.weight_limit = 6;
    config.target_sliced = 1000;
    const ReducedGrid grid = build_grid(config.composition);
    SearchTrace a(grid), b(grid);
    run_search(config, grid, &a);
    run_search(config, grid, &b);
    if (a.drops > 0) o.fail(std::to_string(a.drops) + " accepted moves lowered psi");
    if (a.psi_errors > 0) o.fail("incremental psi disagrees with recomputation");
    if (a.weight_errors > 0) o.fail("weight outside [1, limit]");
    if (a.weight_updates == 0) o.fail("weights never updated");
    if (a.digest != b.digest) o.fail("search trace differs between identical runs");
    o.note("search: " + std::to_string(a.accepts) + " accepts, " +
           std::to_string(a.weight_updates) + " weight updates");
  }
  {
    TabuConfig config(4, Composition({2, 2, 1, 1}));
    config.coeff_bound = 6;
    config.neighbor_delta = 2;
    config.stagnation_limit = 5000;
    config.seed = 7;
    config.max_restarts = 5;
    config.target_sliced = 1000;
    const ReducedGrid grid = build_grid(config.composition);
    TabuTrace a, b;
    run_tabu(config, grid, &a);
    run_tabu(config, grid, &b);
    if (a.duplicates > 0) o.fail(std::to_string(a.duplicates) + " duplicate expansions");
    if (a.digest != b.digest) o.fail("tabu trace differs between identical runs");
    o.note("tabu: " + std::to_string(a.expansions) + " expansions");
  }
  const double t = seconds_since(start);
  if (t >= 120) o.fail("took " + fmt(t) + " s");
  o.note(fmt(t) + " s");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"golden verification", golden},
      {"reduction equivalence", reduction_equivalence},
      {"counting identities", counting_identities},
      {"search reproduction", search_reproduction},
      {"tabu parity", tabu_parity},
      {"bound calculus", bound_calculus},
      {"algorithm-trace properties", trace_properties},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
