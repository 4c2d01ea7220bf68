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

#ifndef HYPERSLICE_BOUNDS_HPP_
#define HYPERSLICE_BOUNDS_HPP_

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperslice {

// Known upper bounds on S(n), the fewest planes slicing every edge of Q_n.
const std::map<int, int>& base_upper_bounds();

// ceil(4n/5), or 4n/5 + 1 when n is an odd multiple of 5; n itself for n <= 5.
// Throws InvalidInput for n < 1.
int upper_bound(int n);

struct ChainPart {
  int part = 0;
  int bound = 0;

  friend bool operator==(const ChainPart&, const ChainPart&) = default;
};

// Decomposition of n into parts from {10, 6, 1} whose base bounds add up to
// upper_bound(n), largest parts first. Among optimal decompositions the one
// with the most 10s, then the most 6s, is returned.
std::vector<ChainPart> subadditive_chain(int n);

enum class Provenance { kPaperTable, kLocallyDiscovered };

std::string_view to_string(Provenance provenance);

// Which published list a published value comes from.
enum class TableSource { kBestKnown, kPriorWork, kTabu, kLocal };

std::string_view to_string(TableSource source);

struct KnownValue {
  int n = 0;
  int k = 0;
  std::int64_t value = 0;
  Provenance provenance = Provenance::kPaperTable;
  TableSource source = TableSource::kBestKnown;
  // Set when the value slices every edge of Q_n.
  bool full = false;
};

// Lower bounds on S(n, k), the most edges of Q_n that k planes can slice.
// The published layer is fixed; the local layer takes results that beat it.
class BoundTable {
 public:
  BoundTable();
  BoundTable(const BoundTable& other);
  BoundTable& operator=(const BoundTable&) = delete;

  // Best value over both layers, preferring published values on ties.
  // Throws NotFound.
  KnownValue lookup(int n, int k) const;
  std::optional<KnownValue> find(int n, int k) const;
  // Every published value stored for (n, k), in source order.
  std::vector<KnownValue> published(int n, int k) const;
  // Best value per (n, k), ordered by (n, k); optionally one n only.
  std::vector<KnownValue> entries(std::optional<int> n = std::nullopt) const;

  // Stores value in the local layer if it beats the current best. Throws
  // InvalidInput if value exceeds n * 2^(n-1) or the arguments are out of
  // range. Returns whether the table changed.
  bool record_local(int n, int k, std::int64_t value);
  std::vector<KnownValue> local_entries() const;

 private:
  std::optional<KnownValue> find_locked(int n, int k) const;

  std::multimap<std::pair<int, int>, KnownValue> published_;
  mutable std::mutex mutex_;
  std::map<std::pair<int, int>, std::int64_t> local_;
};

}  // namespace hyperslice

#endif  // HYPERSLICE_BOUNDS_HPP_
