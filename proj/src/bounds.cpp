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

#include "hyperslice/bounds.hpp"

#include <algorithm>
#include <limits>

#include "hyperslice/core.hpp"
#include "hyperslice/error.hpp"

namespace hyperslice {
namespace {

struct Row {
  int n;
  int first_k;
  std::vector<std::int64_t> values;  // 0 marks a gap
};

// Best known values, including the new constructions.
const std::vector<Row> kBestKnown = {
    {5, 4, {78, 80}},
    {6, 4, {184, 192, 192}},
    {7, 4, {410, 440, 448, 448}},
    {8, 4, {920, 980, 1018, 1024, 1024}},
    {9, 4, {1974, 2184, 2266, 2298, 2304, 2304}},
    {10, 4, {4312, 4704, 4998, 5088, 5120, 5120, 5120}},
    {11, 4, {9072, 10248, 10816, 11128, 11240, 11264, 11264}},
    {12, 9, {24552}},
    {13, 10, {53224}},
    {14, 11, {114666}},
    {15, 12, {245748}},
};

// Earlier results, including exhaustive search for n <= 6.
const std::vector<Row> kPriorWork = {
    {3, 1, {6, 10, 12}},
    {4, 1, {12, 24, 30, 32}},
    {5, 1, {30, 54, 70, 78, 80}},
    {6, 1, {60, 120, 160, 184, 192, 192}},
    {7, 1, {140, 260, 350, 410, 434, 448, 448}},
    {8, 1, {280, 560, 770, 908, 980, 1008, 1024, 1024}},
};

// Tabu search results.
const std::vector<Row> kTabu = {
    {5, 4, {78, 80}},
    {6, 4, {184, 192, 192}},
    {7, 4, {410, 440, 448, 448}},
    {8, 4, {920, 980, 1016, 1024, 1024}},
    {9, 4, {1974, 2184, 2254, 2298, 2304, 2304}},
    {10, 4, {4312, 4704, 4984, 5064, 5114, 5120, 5120}},
    {11, 4, {9072, 10052, 10536, 10844, 11042, 11258, 11264, 11264}},
    {13, 10, {53008}},
    {14, 11, {114286}},
    {15, 12, {245252}},
    {16, 13, {523430}},
    {17, 14, {1114088}},
};

std::int64_t edge_total(int n) {
  return n >= 1 && n <= 62 ? hypercube_edge_count(n) : std::numeric_limits<std::int64_t>::max();
}

// Higher value first; published before local and in source order.
bool preferred(const KnownValue& a, const KnownValue& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.source < b.source;
}

}  // namespace

const std::map<int, int>& base_upper_bounds() {
  static const std::map<int, int> bounds = {{1, 1}, {2, 2}, {3, 3}, {4, 4},
                                            {5, 5}, {6, 5}, {10, 8}};
  return bounds;
}

int upper_bound(int n) {
  if (n < 1) throw InvalidInput("n must be positive, got " + std::to_string(n));
  if (n <= 5) return n;
  if (n % 10 == 5) return 4 * n / 5 + 1;
  return (4 * n + 4) / 5;
}

std::vector<ChainPart> subadditive_chain(int n) {
  if (n < 1) throw InvalidInput("n must be positive, got " + std::to_string(n));
  const auto& base = base_upper_bounds();
  int best_tens = 0;
  int best_sixes = 0;
  int best_total = std::numeric_limits<int>::max();
  for (int tens = n / 10; tens >= 0; --tens) {
    for (int sixes = (n - 10 * tens) / 6; sixes >= 0; --sixes) {
      const int ones = n - 10 * tens - 6 * sixes;
      const int total = tens * base.at(10) + sixes * base.at(6) + ones;
      if (total < best_total) {
        best_total = total;
        best_tens = tens;
        best_sixes = sixes;
      }
    }
  }
  std::vector<ChainPart> chain;
  chain.insert(chain.end(), best_tens, ChainPart{10, base.at(10)});
  chain.insert(chain.end(), best_sixes, ChainPart{6, base.at(6)});
  chain.insert(chain.end(), n - 10 * best_tens - 6 * best_sixes, ChainPart{1, 1});
  return chain;
}

std::string_view to_string(Provenance provenance) {
  return provenance == Provenance::kPaperTable ? "paper-table" : "locally-discovered";
}

std::string_view to_string(TableSource source) {
  switch (source) {
    case TableSource::kBestKnown:
      return "best-known";
    case TableSource::kPriorWork:
      return "prior-work";
    case TableSource::kTabu:
      return "tabu-search";
    case TableSource::kLocal:
      return "local";
  }
  return "unknown";
}

BoundTable::BoundTable() {
  const auto load = [this](const std::vector<Row>& rows, TableSource source) {
    for (const Row& row : rows) {
      for (std::size_t i = 0; i < row.values.size(); ++i) {
        if (row.values[i] == 0) continue;
        const int k = row.first_k + static_cast<int>(i);
        published_.emplace(std::pair{row.n, k},
                           KnownValue{row.n, k, row.values[i], Provenance::kPaperTable, source,
                                      row.values[i] == edge_total(row.n)});
      }
    }
  };
  load(kBestKnown, TableSource::kBestKnown);
  load(kPriorWork, TableSource::kPriorWork);
  load(kTabu, TableSource::kTabu);
}

BoundTable::BoundTable(const BoundTable& other) : published_(other.published_) {
  std::lock_guard lock(other.mutex_);
  local_ = other.local_;
}

std::vector<KnownValue> BoundTable::published(int n, int k) const {
  std::vector<KnownValue> out;
  const auto [first, last] = published_.equal_range({n, k});
  for (auto it = first; it != last; ++it) out.push_back(it->second);
  return out;
}

std::optional<KnownValue> BoundTable::find_locked(int n, int k) const {
  std::optional<KnownValue> best;
  for (const KnownValue& v : published(n, k)) {
    if (!best || preferred(v, *best)) best = v;
  }
  if (const auto it = local_.find({n, k}); it != local_.end()) {
    const KnownValue local{n, k, it->second, Provenance::kLocallyDiscovered, TableSource::kLocal,
                           it->second == edge_total(n)};
    if (!best || preferred(local, *best)) best = local;
  }
  return best;
}

std::optional<KnownValue> BoundTable::find(int n, int k) const {
  std::lock_guard lock(mutex_);
  return find_locked(n, k);
}

KnownValue BoundTable::lookup(int n, int k) const {
  if (auto v = find(n, k)) return *v;
  throw NotFound("no known value for S(" + std::to_string(n) + ", " + std::to_string(k) + ")");
}

std::vector<KnownValue> BoundTable::entries(std::optional<int> n) const {
  std::lock_guard lock(mutex_);
  std::vector<std::pair<int, int>> keys;
  for (const auto& [key, value] : published_) keys.push_back(key);
  for (const auto& [key, value] : local_) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<KnownValue> out;
  for (const auto& [kn, kk] : keys) {
    if (n && kn != *n) continue;
    out.push_back(*find_locked(kn, kk));
  }
  return out;
}

bool BoundTable::record_local(int n, int k, std::int64_t value) {
  if (n < 1 || n > 62 || k < 0) {
    throw InvalidInput("S(" + std::to_string(n) + ", " + std::to_string(k) + ") is out of range");
  }
  if (value < 0 || value > edge_total(n)) {
    throw InvalidInput(std::to_string(value) + " exceeds the " + std::to_string(edge_total(n)) +
                       " edges of Q_" + std::to_string(n));
  }
  std::lock_guard lock(mutex_);
  const auto current = find_locked(n, k);
  if (current && current->value >= value) return false;
  local_[{n, k}] = value;
  return true;
}

std::vector<KnownValue> BoundTable::local_entries() const {
  std::lock_guard lock(mutex_);
  std::vector<KnownValue> out;
  for (const auto& [key, value] : local_) {
    out.push_back(KnownValue{key.first, key.second, value, Provenance::kLocallyDiscovered,
                             TableSource::kLocal, value == edge_total(key.first)});
  }
  return out;
}

}  // namespace hyperslice
