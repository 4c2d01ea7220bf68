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

#include "hyperslice/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperslice/bounds.hpp"
#include "hyperslice/core.hpp"
#include "hyperslice/error.hpp"
#include "hyperslice/fixtures.hpp"
#include "hyperslice/io.hpp"
#include "hyperslice/reduced.hpp"
#include "hyperslice/search.hpp"
#include "hyperslice/tabu.hpp"

namespace hyperslice::cli {
namespace {

using Json = nlohmann::ordered_json;

int default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    throw InvalidInput(std::string(kWorkersEnv) + " must be a positive integer, got '" + env +
                       "'");
  }
  return 1;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

Json plane_json(const Hyperplane& p) {
  Json coeffs = Json::array();
  for (Eigen::Index i = 0; i < p.coefficients().size(); ++i) coeffs.push_back(p.coefficients()[i]);
  return Json{{"coefficients", coeffs}, {"bias", p.bias().to_string()}};
}

Json reduced_json(const ReducedHyperplane& p) {
  Json coeffs = Json::array();
  for (Eigen::Index i = 0; i < p.coefficients.size(); ++i) coeffs.push_back(p.coefficients[i]);
  return coeffs;
}

std::string chain_text(const std::vector<ChainPart>& chain) {
  std::string s;
  for (const auto& [part, bound] : chain) {
    if (!s.empty()) s += '+';
    s += std::to_string(part) + ":" + std::to_string(bound);
  }
  return s;
}

// A construction given as a file in the plane format, a JSON run report, or
// a fixture name.
struct Loaded {
  PlaneSet planes{1};
  std::string origin;
  std::optional<std::int64_t> claimed;
};

Loaded load_construction(const std::string& file, const std::string& fixture_name,
                         std::optional<int> dimension) {
  if (!fixture_name.empty()) {
    const Fixture& f = fixture(fixture_name);
    return {parse_construction(f.text, dimension.value_or(f.dimension)), std::string(f.name),
            f.expected_sliced};
  }
  const std::string text = read_text(file);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json report;
    try {
      report = Json::parse(text);
    } catch (const Json::exception& e) {
      throw InvalidInput(file + ": " + e.what());
    }
    if (!report.contains("construction") || !report["construction"].is_string()) {
      throw InvalidInput(file + ": report has no construction");
    }
    std::optional<int> n = dimension;
    if (!n && report.contains("n")) n = report["n"].get<int>();
    Loaded out{parse_construction(report["construction"].get<std::string>(), n), file, {}};
    if (report.contains("sliced")) out.claimed = report["sliced"].get<std::int64_t>();
    return out;
  }
  return {parse_construction(text, dimension), file, {}};
}

struct CommonFlags {
  bool json = false;
};

struct SearchFlags {
  int n = 0;
  int k = 0;
  std::string composition;
  std::int64_t coeff_bound = 40;
  std::int64_t delta = 3;
  std::int64_t freeze = 0;
  std::uint64_t seed = 0;
  double time_limit = 60.0;
  int workers = 1;
  std::int64_t max_restarts = 0;
  std::int64_t target = 0;
  std::string out;

  CLI::Option* n_opt = nullptr;
  CLI::Option* composition_opt = nullptr;
  CLI::Option* freeze_opt = nullptr;
  CLI::Option* restarts_opt = nullptr;
  CLI::Option* target_opt = nullptr;
  CLI::Option* workers_opt = nullptr;

  void attach(CLI::App* app) {
    n_opt = app->add_option("--n", n, "Hypercube dimension")->check(CLI::PositiveNumber);
    app->add_option("--k", k, "Number of planes")->required()->check(CLI::NonNegativeNumber);
    composition_opt =
        app->add_option("--composition", composition, "Block sizes, e.g. 6,1,1,1,1");
    app->add_option("--coeff-bound", coeff_bound, "Largest reduced coefficient magnitude")
        ->capture_default_str();
    app->add_option("--delta", delta, "Largest change of one coefficient per move")
        ->capture_default_str();
    freeze_opt = app->add_option("--freeze-block", freeze,
                                 "Pin the first block's reduced coefficient to this value");
    app->add_option("--seed", seed, "Random seed")->capture_default_str();
    app->add_option("--time-limit", time_limit, "Seconds")->capture_default_str();
    workers_opt = app->add_option("--workers", workers, "Worker threads")
                      ->check(CLI::PositiveNumber);
    restarts_opt = app->add_option("--max-restarts", max_restarts, "Restarts per worker");
    target_opt = app->add_option("--target", target, "Stop once this many edges are sliced");
    app->add_option("--out", out, "Also write the construction to this file");
  }

  Composition resolve_composition() const {
    if (composition_opt->count() > 0) return Composition::parse(composition);
    if (n_opt->count() == 0) throw InvalidInput("need --n or --composition");
    return Composition::identity(n);
  }

  void fill(SharedConfig& config) const {
    if (n_opt->count() > 0) config.n = n;
    config.coeff_bound = coeff_bound;
    config.neighbor_delta = delta;
    if (freeze_opt->count() > 0) config.frozen_value = freeze;
    config.seed = seed;
    config.time_limit = Seconds(time_limit);
    config.workers = workers_opt->count() > 0 ? workers : default_workers();
    if (restarts_opt->count() > 0) config.max_restarts = max_restarts;
    if (target_opt->count() > 0) config.target_sliced = target;
  }
};

Json shared_json(const SharedConfig& config) {
  Json j;
  j["n"] = config.n;
  j["k"] = config.k;
  j["composition"] = config.composition.to_string();
  j["coeff_bound"] = config.coeff_bound;
  j["neighbor_delta"] = config.neighbor_delta;
  j["freeze_block"] = config.frozen_value ? Json(*config.frozen_value) : Json(nullptr);
  j["bias"] = config.bias.to_string();
  j["seed"] = config.seed;
  j["time_limit"] = config.time_limit.count();
  j["workers"] = config.workers;
  j["max_restarts"] = config.max_restarts ? Json(*config.max_restarts) : Json(nullptr);
  j["target"] = config.target_sliced ? Json(*config.target_sliced) : Json(nullptr);
  return j;
}

int report_run(const std::string& command, const SharedConfig& config, Json config_echo,
               const SearchResult& result, const SearchFlags& flags, bool json,
               std::ostream& out) {
  const std::vector<std::string> comments = {
      command + " n=" + std::to_string(config.n) + " k=" + std::to_string(config.k) +
          " composition=" + config.composition.to_string() + " seed=" +
          std::to_string(config.seed),
      "sliced " + std::to_string(result.sliced) + " of " + std::to_string(result.total) +
          " edges"};
  const std::string construction = format_construction(result.best_planes, comments);
  if (!flags.out.empty()) write_text(flags.out, construction);

  BoundTable table;
  const bool improved = table.record_local(config.n, config.k, result.sliced);
  const auto known = table.find(config.n, config.k);

  const bool full = result.sliced == result.total;
  if (json) {
    Json j;
    j["command"] = command;
    j["config"] = std::move(config_echo);
    j["n"] = config.n;
    j["k"] = config.k;
    j["composition"] = config.composition.to_string();
    j["construction"] = construction;
    Json planes = Json::array();
    for (const auto& p : result.best_planes.planes()) planes.push_back(plane_json(p));
    j["planes"] = planes;
    Json reduced = Json::array();
    for (const auto& p : result.best) reduced.push_back(reduced_json(p));
    j["reduced_planes"] = reduced;
    j["sliced"] = result.sliced;
    j["total"] = result.total;
    j["reduced_sliced"] = result.reduced_sliced;
    j["reduced_total"] = result.reduced_total;
    j["full"] = full;
    j["reached_target"] = result.reached_target;
    j["iterations"] = result.iterations;
    j["restarts"] = result.restarts;
    j["wall_seconds"] = result.wall_seconds;
    j["seed"] = config.seed;
    j["best_known"] = known ? Json(known->value) : Json(nullptr);
    j["improves_best_known"] = improved;
    out << j.dump(2) << "\n";
  } else {
    out << construction;
    out << "sliced=" << result.sliced << "/" << result.total << " reduced=" << result.reduced_sliced
        << "/" << result.reduced_total << "\n";
    out << "iterations=" << result.iterations << " restarts=" << result.restarts
        << " seconds=" << std::fixed << std::setprecision(3) << result.wall_seconds << "\n";
    if (improved) out << "improves best known value for S(" << config.n << "," << config.k
                      << ")\n";
  }
  return full ? kExitFull : kExitPartial;
}

int cmd_verify(const std::string& file, const std::string& fixture_name, CLI::Option* n_opt,
               int n, CLI::Option* composition_opt, const std::string& composition,
               bool list_unsliced, int max_dimension, int workers, bool json, std::ostream& out) {
  if (file.empty() == fixture_name.empty()) {
    throw InvalidInput("give exactly one of FILE or --fixture");
  }
  const std::optional<int> dimension = n_opt->count() > 0 ? std::optional<int>(n) : std::nullopt;
  const Loaded loaded = load_construction(file, fixture_name, dimension);
  const PlaneSet& planes = loaded.planes;
  const int dim = planes.dimension();
  const std::int64_t total = dim <= 62 ? hypercube_edge_count(dim) : -1;

  Json j;
  std::int64_t sliced = 0;
  std::string method;
  std::vector<Edge> unsliced;
  if (dim <= max_dimension) {
    method = "brute-force";
    const BruteForceOptions options{max_dimension, workers};
    if (list_unsliced) {
      const VerifyResult r = verify_full(planes, options);
      sliced = r.sliced;
      unsliced = r.unsliced;
    } else {
      sliced = count_sliced(planes, options);
    }
  } else {
    if (list_unsliced) {
      throw InvalidInput("--list-unsliced needs n <= --max-dimension (" +
                         std::to_string(max_dimension) + ")");
    }
    const Composition c = composition_opt->count() > 0 ? Composition::parse(composition)
                                                        : coarsest_composition(planes);
    method = "reduced " + c.to_string();
    sliced = weighted_sliced_count(planes, build_grid(c));
  }

  const bool matches = !loaded.claimed || *loaded.claimed == sliced;
  if (json) {
    j["source"] = loaded.origin;
    j["n"] = dim;
    j["k"] = planes.size();
    j["method"] = method;
    j["sliced"] = sliced;
    j["total"] = total;
    j["full"] = sliced == total;
    if (loaded.claimed) {
      j["claimed"] = *loaded.claimed;
      j["matches_claim"] = matches;
    }
    if (list_unsliced) {
      Json edges = Json::array();
      for (const Edge& e : unsliced) edges.push_back({{"lower", e.lower_index}, {"dim", e.flip}});
      j["unsliced"] = edges;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "sliced=" << sliced << "/" << total << "\n";
    for (const Edge& e : unsliced) {
      const Vertex v = e.lower();
      out << "unsliced lower=" << e.lower_index << " dim=" << e.flip << " vertex=";
      for (int i = 0; i < dim; ++i) out << (v.coords()[i] > 0 ? '+' : '-');
      out << "\n";
    }
    if (!matches) out << "claimed=" << *loaded.claimed << " does not match\n";
  }
  if (!matches) return kExitError;
  return sliced == total ? kExitFull : kExitPartial;
}

int cmd_bound(int n, bool json, std::ostream& out) {
  const int bound = upper_bound(n);
  const auto chain = subadditive_chain(n);
  if (json) {
    Json parts = Json::array();
    for (const auto& [part, b] : chain) parts.push_back({{"part", part}, {"bound", b}});
    out << Json{{"n", n}, {"upper_bound", bound}, {"chain", parts}}.dump(2) << "\n";
  } else {
    out << bound << "\n";
    out << "chain=" << chain_text(chain) << "\n";
  }
  return kExitFull;
}

Json known_json(const KnownValue& v) {
  return Json{{"n", v.n},
              {"k", v.k},
              {"value", v.value},
              {"full", v.full},
              {"provenance", std::string(to_string(v.provenance))},
              {"source", std::string(to_string(v.source))}};
}

void print_known(const KnownValue& v, std::ostream& out) {
  out << "S(" << v.n << "," << v.k << ")=" << v.value << " provenance=" << to_string(v.provenance)
      << " source=" << to_string(v.source) << (v.full ? " full" : "") << "\n";
}

int cmd_table(CLI::Option* n_opt, int n, CLI::Option* k_opt, int k, bool all_sources,
              const std::vector<std::string>& reports, bool json, std::ostream& out) {
  BoundTable table;
  for (const std::string& path : reports) {
    const Loaded loaded = load_construction(path, "", std::nullopt);
    const PlaneSet& planes = loaded.planes;
    const std::int64_t sliced = planes.dimension() <= kDefaultBruteForceLimit
                                    ? count_sliced(planes)
                                    : weighted_sliced_count(
                                          planes, build_grid(coarsest_composition(planes)));
    table.record_local(planes.dimension(), planes.size(), sliced);
  }
  std::vector<KnownValue> rows;
  if (k_opt->count() > 0) {
    if (n_opt->count() == 0) throw InvalidInput("--k needs --n");
    rows.push_back(table.lookup(n, k));
  } else {
    rows = table.entries(n_opt->count() > 0 ? std::optional<int>(n) : std::nullopt);
    if (rows.empty()) throw NotFound("no known values for n = " + std::to_string(n));
  }
  if (all_sources) {
    std::vector<KnownValue> expanded;
    for (const auto& row : rows) {
      for (const auto& v : table.published(row.n, row.k)) expanded.push_back(v);
      for (const auto& v : table.local_entries()) {
        if (v.n == row.n && v.k == row.k) expanded.push_back(v);
      }
    }
    rows = std::move(expanded);
  }
  if (json) {
    Json arr = Json::array();
    for (const auto& v : rows) arr.push_back(known_json(v));
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& v : rows) print_known(v, out);
  }
  return kExitFull;
}

int cmd_reduce_info(const std::string& composition, CLI::Option* n_opt, int n, bool json,
                    std::ostream& out) {
  const Composition c = Composition::parse(composition);
  if (n_opt->count() > 0 && n != c.dimension()) {
    throw InvalidInput("composition " + c.to_string() + " sums to " +
                       std::to_string(c.dimension()) + ", not " + std::to_string(n));
  }
  const ReducedGrid grid = build_grid(c);
  std::map<std::int64_t, std::int64_t> histogram;
  for (const auto& e : grid.edges()) ++histogram[e.multiplicity];
  if (json) {
    Json h = Json::array();
    for (const auto& [m, count] : histogram) h.push_back({{"multiplicity", m}, {"edges", count}});
    out << Json{{"composition", c.to_string()},
                {"n", c.dimension()},
                {"vertices", grid.vertex_count()},
                {"edges", grid.edge_count()},
                {"total_multiplicity", grid.total_multiplicity()},
                {"histogram", h}}
               .dump(2)
        << "\n";
  } else {
    out << "|V|=" << grid.vertex_count() << " |E|=" << grid.edge_count() << "\n";
    out << "total_multiplicity=" << grid.total_multiplicity() << "\n";
    for (const auto& [m, count] : histogram) {
      out << "multiplicity=" << m << " edges=" << count << "\n";
    }
  }
  return kExitFull;
}

int cmd_fixtures(const std::string& show, bool json, std::ostream& out) {
  if (!show.empty()) {
    const Fixture& f = fixture(show);
    if (json) {
      out << Json{{"name", f.name},
                  {"n", f.dimension},
                  {"sliced", f.expected_sliced},
                  {"composition", f.composition},
                  {"citation", f.citation},
                  {"construction", f.text}}
                 .dump(2)
          << "\n";
    } else {
      out << f.text;
    }
    return kExitFull;
  }
  Json arr = Json::array();
  for (const Fixture& f : fixtures()) {
    if (json) {
      arr.push_back({{"name", f.name},
                     {"n", f.dimension},
                     {"k", f.planes().size()},
                     {"sliced", f.expected_sliced},
                     {"composition", f.composition},
                     {"citation", f.citation}});
    } else {
      out << f.name << " n=" << f.dimension << " k=" << f.planes().size()
          << " sliced=" << f.expected_sliced << "/" << hypercube_edge_count(f.dimension)
          << " composition=" << f.composition << "  " << f.citation << "\n";
    }
  }
  if (json) out << arr.dump(2) << "\n";
  return kExitFull;
}

int selftest(bool json, std::ostream& out) {
  bool ok = true;
  Json arr = Json::array();
  for (const Fixture& f : fixtures()) {
    const PlaneSet planes = f.planes();
    const std::int64_t brute = count_sliced(planes);
    const std::int64_t reduced = weighted_sliced_count(planes, build_grid(f.reduced_composition()));
    const bool round_trip = format_construction(planes) == f.text;
    const bool pass = brute == f.expected_sliced && reduced == f.expected_sliced && round_trip;
    ok = ok && pass;
    if (json) {
      arr.push_back({{"name", f.name},
                     {"expected", f.expected_sliced},
                     {"brute_force", brute},
                     {"reduced", reduced},
                     {"round_trip", round_trip},
                     {"pass", pass}});
    } else {
      out << "selftest " << f.name << " sliced=" << brute << "/"
          << hypercube_edge_count(f.dimension) << (pass ? " ok" : " FAILED") << "\n";
    }
  }
  if (json) {
    out << Json{{"fixtures", arr}, {"pass", ok}}.dump(2) << "\n";
  } else {
    out << (ok ? "selftest passed" : "selftest failed") << "\n";
  }
  return ok ? kExitFull : kExitError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperplanes slicing the edges of the hypercube", "hyperslice"};
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  bool run_selftest = false;
  bool json = false;
  app.add_flag("--selftest", run_selftest, "Verify every embedded construction and exit");
  app.add_flag("--json", json, "Machine-readable output");
  app.require_subcommand(0, 1);

  // verify
  auto* verify = app.add_subcommand("verify", "Count the edges a construction slices");
  std::string verify_file;
  std::string verify_fixture;
  std::string verify_composition;
  int verify_n = 0;
  bool list_unsliced = false;
  int max_dimension = kDefaultBruteForceLimit;
  int verify_workers = 1;
  verify->add_option("file", verify_file, "Construction file or JSON run report");
  verify->add_option("--fixture", verify_fixture, "Embedded construction by name");
  auto* verify_n_opt =
      verify->add_option("--n", verify_n, "Dimension override")->check(CLI::PositiveNumber);
  auto* verify_comp_opt = verify->add_option(
      "--composition", verify_composition, "Composition for the reduced count above the limit");
  verify->add_flag("--list-unsliced", list_unsliced, "Print every edge no plane slices");
  verify->add_option("--max-dimension", max_dimension, "Largest n counted by enumeration")
      ->capture_default_str()
      ->check(CLI::Range(1, kMaxVertexDimension));
  auto* verify_workers_opt =
      verify->add_option("--workers", verify_workers, "Threads")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "Machine-readable output");

  // search
  auto* search = app.add_subcommand("search", "Edge-weighted hill climbing");
  SearchFlags search_flags;
  search_flags.attach(search);
  std::int64_t max_iterations = 0;
  std::int64_t weight_period = 0;
  std::int32_t weight_limit = 32;
  std::string fitness = "plain";
  std::string variance = "on";
  search->add_option("--max-iterations", max_iterations,
                     "Iterations without improvement before a restart (0: 50|E|)")
      ->capture_default_str();
  search->add_option("--weight-period", weight_period,
                     "Iterations without psi gain before weights grow (0: 2|E|)")
      ->capture_default_str();
  search->add_option("--weight-limit", weight_limit, "Largest edge weight")->capture_default_str();
  search->add_option("--fitness", fitness, "plain or weighted")
      ->check(CLI::IsMember({"plain", "weighted"}))
      ->capture_default_str();
  search->add_option("--variance-penalty", variance, "on or off")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  search->add_flag("--json", json, "Machine-readable output");

  // tabu
  auto* tabu = app.add_subcommand("tabu", "Best-first tabu search");
  SearchFlags tabu_flags;
  tabu_flags.attach(tabu);
  std::int64_t stagnation = 20000;
  std::int64_t frontier_cap = 100000;
  std::string tabu_start;
  tabu->add_option("--stagnation", stagnation, "States seen without improvement before a restart")
      ->capture_default_str();
  tabu->add_option("--frontier-cap", frontier_cap, "Unexplored states kept")
      ->capture_default_str();
  tabu->add_option("--start", tabu_start, "Construction file for the first run");
  tabu->add_flag("--json", json, "Machine-readable output");

  // bound
  auto* bound = app.add_subcommand("bound", "Upper bound on S(n) with a witness chain");
  int bound_n = 0;
  bound->add_option("--n", bound_n, "Dimension")->required();
  bound->add_flag("--json", json, "Machine-readable output");

  // table
  auto* table = app.add_subcommand("table", "Known lower bounds on S(n,k)");
  int table_n = 0;
  int table_k = 0;
  bool all_sources = false;
  std::vector<std::string> reports;
  auto* table_n_opt = table->add_option("--n", table_n, "Dimension");
  auto* table_k_opt = table->add_option("--k", table_k, "Number of planes");
  table->add_flag("--all-sources", all_sources, "Every stored value, not only the best");
  table->add_option("--report", reports, "Construction or run report to add to the local layer");
  table->add_flag("--json", json, "Machine-readable output");

  // reduce-info
  auto* info = app.add_subcommand("reduce-info", "Size of the reduced grid of a composition");
  std::string info_composition;
  int info_n = 0;
  info->add_option("--composition", info_composition, "Block sizes")->required();
  auto* info_n_opt = info->add_option("--n", info_n, "Dimension, checked against the blocks");
  info->add_flag("--json", json, "Machine-readable output");

  // fixtures
  auto* fixtures_cmd = app.add_subcommand("fixtures", "List the embedded constructions");
  std::string show;
  fixtures_cmd->add_option("--show", show, "Print one construction");
  fixtures_cmd->add_flag("--json", json, "Machine-readable output");

  std::vector<const char*> argv{"hyperslice"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitFull : kExitError;
  }

  try {
    if (run_selftest) return selftest(json, out);
    if (verify->parsed()) {
      const int workers = verify_workers_opt->count() > 0 ? verify_workers : default_workers();
      return cmd_verify(verify_file, verify_fixture, verify_n_opt, verify_n, verify_comp_opt,
                        verify_composition, list_unsliced, max_dimension, workers, json, out);
    }
    if (search->parsed()) {
      SearchConfig config(0, search_flags.resolve_composition());
      config.k = search_flags.k;
      search_flags.fill(config);
      config.max_iterations = max_iterations;
      config.weight_period = weight_period;
      config.weight_limit = weight_limit;
      config.fitness.mode = fitness == "weighted" ? FitnessMode::kWeighted : FitnessMode::kPlain;
      config.fitness.variance_penalty = variance == "on";
      config.validate();
      const ReducedGrid grid = build_grid(config.composition);
      const SearchResult result = run_search(config, grid);
      Json echo = shared_json(config);
      echo["max_iterations"] = config.resolved_max_iterations(grid);
      echo["weight_period"] = config.resolved_weight_period(grid);
      echo["weight_limit"] = config.weight_limit;
      echo["fitness"] = fitness;
      echo["variance_penalty"] = variance == "on";
      return report_run("search", config, std::move(echo), result, search_flags, json, out);
    }
    if (tabu->parsed()) {
      TabuConfig config(0, tabu_flags.resolve_composition());
      config.k = tabu_flags.k;
      tabu_flags.fill(config);
      config.stagnation_limit = stagnation;
      config.frontier_capacity = frontier_cap;
      if (!tabu_start.empty()) {
        const PlaneSet start = load_construction(tabu_start, "", config.n).planes;
        config.start = reduce_planes(start, config.composition);
      }
      config.validate();
      const ReducedGrid grid = build_grid(config.composition);
      const SearchResult result = run_tabu(config, grid);
      Json echo = shared_json(config);
      echo["stagnation"] = config.stagnation_limit;
      echo["frontier_cap"] = config.frontier_capacity;
      return report_run("tabu", config, std::move(echo), result, tabu_flags, json, out);
    }
    if (bound->parsed()) return cmd_bound(bound_n, json, out);
    if (table->parsed()) {
      return cmd_table(table_n_opt, table_n, table_k_opt, table_k, all_sources, reports, json,
                       out);
    }
    if (info->parsed()) return cmd_reduce_info(info_composition, info_n_opt, info_n, json, out);
    if (fixtures_cmd->parsed()) return cmd_fixtures(show, json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  out << app.help();
  return kExitError;
}

}  // namespace hyperslice::cli
