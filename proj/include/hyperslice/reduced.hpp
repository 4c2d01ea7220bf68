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

#ifndef HYPERSLICE_REDUCED_HPP_
#define HYPERSLICE_REDUCED_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperslice/composition.hpp"
#include "hyperslice/core.hpp"
#include "hyperslice/types.hpp"

namespace hyperslice {

// Grids larger than this many reduced vertices are refused.
inline constexpr std::int64_t kMaxGridVertices = std::int64_t{1} << 24;
// n * 2^(n-1) must fit in a signed 64-bit multiplicity total.
inline constexpr int kMaxReducedDimension = 58;

// Block sums of a vertex of Q_n: coordinate j lies in {-b_j, -b_j + 2, ..., b_j}.
struct ReducedVertex {
  IntVector coords;

  // Number of -1 entries in block j among the preimages, (b_j - coords[j]) / 2.
  std::int64_t negatives(const Composition& composition, int j) const {
    return (composition.block(j) - coords[j]) / 2;
  }
  friend bool operator==(const ReducedVertex& a, const ReducedVertex& b) {
    return a.coords == b.coords;
  }
};

// Pair of reduced vertices two apart in coordinate `dim`. `lower` has the
// smaller coordinate there. `multiplicity` counts the edges of Q_n that
// project onto it.
struct ReducedEdge {
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;
  int dim = 0;
  std::int64_t multiplicity = 0;
};

// One coefficient per block.
struct ReducedHyperplane {
  IntVector coefficients;
  Bias bias = Bias::half();

  int size() const { return static_cast<int>(coefficients.size()); }
  friend bool operator==(const ReducedHyperplane&, const ReducedHyperplane&) = default;
};

// The projected lattice of Q_n under a composition. Vertices are ranked in
// mixed radix over digits (b_j + 1), block 0 most significant; digit u_j maps
// to coordinate 2 u_j - b_j. Edges are listed by lower-endpoint rank, then by
// dimension.
class ReducedGrid {
 public:
  explicit ReducedGrid(Composition composition);

  const Composition& composition() const { return composition_; }
  int dimension() const { return composition_.dimension(); }
  int size() const { return composition_.size(); }

  std::int64_t vertex_count() const { return vertex_coords_.rows(); }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

  ReducedVertex vertex(std::uint32_t rank) const {
    return ReducedVertex{vertex_coords_.row(rank).transpose()};
  }
  std::uint32_t rank(const ReducedVertex& v) const;
  // Row r holds the coordinates of the vertex of rank r.
  const IntMatrix& vertex_coords() const { return vertex_coords_; }
  // Number of vertices of Q_n projecting onto each reduced vertex.
  std::span<const std::int64_t> preimage_counts() const { return preimages_; }

  std::span<const ReducedEdge> edges() const { return edges_; }
  const ReducedEdge& edge(std::int64_t index) const { return edges_[index]; }
  // Index of the edge leaving `lower` upward in `dim`, if the grid has it.
  std::optional<std::int64_t> find_edge(std::uint32_t lower, int dim) const;

  // Sum of all multiplicities; equals n * 2^(n-1).
  std::int64_t total_multiplicity() const { return total_multiplicity_; }

  // Side (-1, 0, +1) of every vertex with respect to a reduced plane.
  std::vector<std::int8_t> sides(const ReducedHyperplane& plane) const;

 private:
  Composition composition_;
  std::vector<std::int64_t> strides_;
  IntMatrix vertex_coords_;
  std::vector<std::int64_t> preimages_;
  std::vector<ReducedEdge> edges_;
  std::vector<std::uint32_t> first_edge_;
  std::int64_t total_multiplicity_ = 0;
};

ReducedGrid build_grid(const Composition& composition);

ReducedHyperplane reduce_plane(const Hyperplane& plane, const Composition& composition);
Hyperplane lift_plane(const ReducedHyperplane& plane, const Composition& composition);

std::vector<ReducedHyperplane> reduce_planes(const PlaneSet& planes,
                                             const Composition& composition);
PlaneSet lift_planes(std::span<const ReducedHyperplane> planes,
                     const Composition& composition);

// <a^beta, v^beta>, which equals <a, v> for every preimage v of the vertex.
std::int64_t reduced_dot(const ReducedHyperplane& plane, const ReducedVertex& vertex);

// phi(H): the reduced edges separated by at least one plane, plus the edges of
// each plane individually. All lists are sorted by edge index.
struct ReducedCoverage {
  std::vector<std::int64_t> edges;
  std::vector<std::vector<std::int64_t>> per_plane;
};

ReducedCoverage sliced_reduced_edges(std::span<const ReducedHyperplane> planes,
                                     const ReducedGrid& grid);
ReducedCoverage sliced_reduced_edges(const PlaneSet& planes, const ReducedGrid& grid);

// Sum of multiplicities over phi(H); equals count_sliced on Q_n.
std::int64_t weighted_sliced_count(std::span<const ReducedHyperplane> planes,
                                   const ReducedGrid& grid);
std::int64_t weighted_sliced_count(const PlaneSet& planes, const ReducedGrid& grid);

// The composition with the fewest blocks that every plane satisfies: maximal
// runs of positions on which all planes have equal coefficients. For an empty
// set this is the single block [n]. Throws InvalidInput for n = 0.
Composition coarsest_composition(const PlaneSet& planes);

// n-choose-k for n <= kMaxReducedDimension.
std::int64_t binomial(int n, int k);

}  // namespace hyperslice

#endif  // HYPERSLICE_REDUCED_HPP_
