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

#ifndef HYPERSLICE_CORE_HPP_
#define HYPERSLICE_CORE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperslice/composition.hpp"
#include "hyperslice/types.hpp"

namespace hyperslice {

// Largest n for which count_sliced / verify_full will walk every edge.
inline constexpr int kDefaultBruteForceLimit = 20;
// Vertices are ranked into a 64-bit index.
inline constexpr int kMaxVertexDimension = 63;

// Number of edges of Q_n, n * 2^(n-1).
std::int64_t hypercube_edge_count(int n);

// Exact rational offset num/den with den > 0, kept in lowest terms. Construction
// files only ever produce decimal literals, so in practice den = 2^a 5^b.
class Bias {
 public:
  constexpr Bias() = default;
  Bias(std::int64_t numerator, std::int64_t denominator);

  static constexpr Bias half() { return Bias(RawTag{}, 1, 2); }
  // Decimal literal ("0.5", "-3", "1.25") or a fraction "p/q".
  static Bias parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  // Sign of (dot - bias): -1, 0 or +1.
  int side_of(std::int64_t dot) const;

  // Shortest exact decimal when one exists, otherwise "p/q".
  std::string to_string() const;

  friend bool operator==(const Bias&, const Bias&) = default;

 private:
  struct RawTag {};
  constexpr Bias(RawTag, std::int64_t n, std::int64_t d) : num_(n), den_(d) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A point of {-1, 1}^n.
class Vertex {
 public:
  explicit Vertex(IntVector coords);
  // Lexicographic rank with -1 < +1 and coordinate 0 most significant, so bit
  // (n - 1 - i) of `index` is set iff coordinate i is +1.
  static Vertex from_index(int n, std::uint64_t index);

  int dimension() const { return static_cast<int>(coords_.size()); }
  const IntVector& coords() const { return coords_; }
  std::int64_t operator[](int i) const { return coords_[i]; }
  std::uint64_t index() const;

  friend bool operator==(const Vertex& a, const Vertex& b) {
    return a.coords_ == b.coords_;
  }

 private:
  IntVector coords_;
};

// Edge of Q_n in canonical form: the endpoint whose flipped coordinate is -1,
// identified by its lexicographic index, plus the flipped coordinate.
struct Edge {
  int dimension = 0;
  std::uint64_t lower_index = 0;
  int flip = 0;

  static Edge from_endpoints(const Vertex& a, const Vertex& b);

  Vertex lower() const { return Vertex::from_index(dimension, lower_index); }
  Vertex upper() const;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// The hyperplane <a, x> = b. Coefficients are bounded at construction so that
// den * <a, v> - num cannot overflow for any vertex v.
class Hyperplane {
 public:
  explicit Hyperplane(IntVector coefficients, Bias bias = Bias::half());

  int dimension() const { return static_cast<int>(coefficients_.size()); }
  const IntVector& coefficients() const { return coefficients_; }
  Bias bias() const { return bias_; }

  std::int64_t dot(const Vertex& v) const;
  int side(const Vertex& v) const { return bias_.side_of(dot(v)); }

  friend bool operator==(const Hyperplane&, const Hyperplane&);

 private:
  IntVector coefficients_;
  Bias bias_;
};

// k hyperplanes in a common dimension, optionally tagged with a composition
// that every plane satisfies.
class PlaneSet {
 public:
  explicit PlaneSet(int dimension, std::vector<Hyperplane> planes = {},
                    std::optional<Composition> composition = std::nullopt);

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(planes_.size()); }
  bool empty() const { return planes_.empty(); }
  const std::vector<Hyperplane>& planes() const { return planes_; }
  const Hyperplane& operator[](int i) const { return planes_[i]; }
  const std::optional<Composition>& composition() const { return composition_; }

  // Copy with one more plane; the composition tag is dropped if the new plane
  // does not satisfy it.
  PlaneSet with_plane(Hyperplane plane) const;

 private:
  int dimension_;
  std::vector<Hyperplane> planes_;
  std::optional<Composition> composition_;
};

struct BruteForceOptions {
  int max_dimension = kDefaultBruteForceLimit;
  // Dimensions are split across this many threads; results do not depend on it.
  int workers = 1;
};

// (<a,v1> - b) * (<a,v2> - b) < 0, evaluated on signs only.
bool slices(const Hyperplane& plane, const Edge& edge);

// Edges of Q_n sliced by at least one plane.
std::int64_t count_sliced(const PlaneSet& planes,
                          const BruteForceOptions& options = {});

struct VerifyResult {
  bool all_sliced = false;
  std::int64_t sliced = 0;
  std::int64_t total = 0;
  // Canonical form, ordered by flip coordinate then lower endpoint index.
  std::vector<Edge> unsliced;
};

// Full check of every edge, outer loop over the flip coordinate and inner loop
// over vertices with that coordinate at -1.
VerifyResult verify_full(const PlaneSet& planes,
                         const BruteForceOptions& options = {});

}  // namespace hyperslice

#endif  // HYPERSLICE_CORE_HPP_
