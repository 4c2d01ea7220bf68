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

#include "hyperslice/reduced.hpp"

#include <array>

#include "hyperslice/error.hpp"

namespace hyperslice {
namespace {

using PascalRow = std::array<std::int64_t, kMaxReducedDimension + 1>;

const std::array<PascalRow, kMaxReducedDimension + 1>& pascal() {
  static const auto table = [] {
    std::array<PascalRow, kMaxReducedDimension + 1> t{};
    for (int n = 0; n <= kMaxReducedDimension; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

void check_plane_size(const ReducedHyperplane& plane, const ReducedGrid& grid) {
  if (plane.size() != grid.size()) {
    throw InvalidInput("reduced plane has " + std::to_string(plane.size()) +
                       " coefficients, grid has " + std::to_string(grid.size()) + " blocks");
  }
}

}  // namespace

std::int64_t binomial(int n, int k) {
  if (n < 0 || n > kMaxReducedDimension) throw InvalidInput("binomial: n out of range");
  if (k < 0 || k > n) return 0;
  return pascal()[n][k];
}

ReducedGrid::ReducedGrid(Composition composition) : composition_(std::move(composition)) {
  const int n = composition_.dimension();
  const int l = composition_.size();
  if (n > kMaxReducedDimension) {
    throw ResourceLimit("reduced grids support n <= " + std::to_string(kMaxReducedDimension));
  }
  strides_.assign(l, 1);
  std::int64_t vertices = 1;
  for (int j = l - 1; j >= 0; --j) {
    strides_[j] = vertices;
    vertices *= composition_.block(j) + 1;
    if (vertices > kMaxGridVertices) {
      throw ResourceLimit("composition " + composition_.to_string() + " gives more than " +
                          std::to_string(kMaxGridVertices) + " reduced vertices");
    }
  }

  vertex_coords_.resize(vertices, l);
  preimages_.resize(vertices);
  first_edge_.resize(vertices);
  std::vector<int> digits(l);
  for (std::int64_t r = 0; r < vertices; ++r) {
    std::int64_t preimages = 1;
    for (int j = 0; j < l; ++j) {
      const int b = composition_.block(j);
      digits[j] = static_cast<int>(r / strides_[j] % (b + 1));
      vertex_coords_(r, j) = 2 * digits[j] - b;
      preimages *= binomial(b, b - digits[j]);
    }
    preimages_[r] = preimages;
    first_edge_[r] = static_cast<std::uint32_t>(edges_.size());
    for (int j = 0; j < l; ++j) {
      const int b = composition_.block(j);
      if (digits[j] == b) continue;
      const std::int64_t multiplicity = (b - digits[j]) * preimages;
      edges_.push_back(ReducedEdge{static_cast<std::uint32_t>(r),
                                   static_cast<std::uint32_t>(r + strides_[j]), j,
                                   multiplicity});
      total_multiplicity_ += multiplicity;
    }
  }
}

std::uint32_t ReducedGrid::rank(const ReducedVertex& v) const {
  if (v.coords.size() != size()) throw InvalidInput("reduced vertex has the wrong length");
  std::int64_t r = 0;
  for (int j = 0; j < size(); ++j) {
    const int b = composition_.block(j);
    const std::int64_t c = v.coords[j];
    if (c < -b || c > b || (c + b) % 2 != 0) {
      throw InvalidInput("coordinate " + std::to_string(j) + " of reduced vertex is " +
                         std::to_string(c) + ", not in {-" + std::to_string(b) + ", ..., " +
                         std::to_string(b) + "} step 2");
    }
    r += (c + b) / 2 * strides_[j];
  }
  return static_cast<std::uint32_t>(r);
}

std::optional<std::int64_t> ReducedGrid::find_edge(std::uint32_t lower, int dim) const {
  if (lower >= vertex_count() || dim < 0 || dim >= size()) return std::nullopt;
  std::int64_t offset = first_edge_[lower];
  for (int j = 0; j <= dim; ++j) {
    const bool has_edge = vertex_coords_(lower, j) < composition_.block(j);
    if (j == dim) return has_edge ? std::optional<std::int64_t>(offset) : std::nullopt;
    if (has_edge) ++offset;
  }
  return std::nullopt;
}

std::vector<std::int8_t> ReducedGrid::sides(const ReducedHyperplane& plane) const {
  check_plane_size(plane, *this);
  const IntVector dots = vertex_coords_ * plane.coefficients;
  std::vector<std::int8_t> out(dots.size());
  for (Eigen::Index r = 0; r < dots.size(); ++r) {
    out[r] = static_cast<std::int8_t>(plane.bias.side_of(dots[r]));
  }
  return out;
}

ReducedGrid build_grid(const Composition& composition) { return ReducedGrid(composition); }

ReducedHyperplane reduce_plane(const Hyperplane& plane, const Composition& composition) {
  if (auto bad = composition.first_violation(plane.coefficients())) {
    throw InvalidInput("plane is not constant on block " + std::to_string(*bad) +
                       " (size " + std::to_string(composition.block(*bad)) +
                       ") of composition " + composition.to_string());
  }
  IntVector reduced(composition.size());
  for (int j = 0; j < composition.size(); ++j) {
    reduced[j] = plane.coefficients()[composition.block_start(j)];
  }
  return ReducedHyperplane{std::move(reduced), plane.bias()};
}

Hyperplane lift_plane(const ReducedHyperplane& plane, const Composition& composition) {
  if (plane.size() != composition.size()) {
    throw InvalidInput("reduced plane length does not match the composition");
  }
  IntVector full(composition.dimension());
  for (int j = 0; j < composition.size(); ++j) {
    full.segment(composition.block_start(j), composition.block(j)).setConstant(
        plane.coefficients[j]);
  }
  return Hyperplane(std::move(full), plane.bias);
}

std::vector<ReducedHyperplane> reduce_planes(const PlaneSet& planes,
                                             const Composition& composition) {
  if (planes.dimension() != composition.dimension()) {
    throw InvalidInput("plane set lives in R^" + std::to_string(planes.dimension()) +
                       " but composition " + composition.to_string() + " sums to " +
                       std::to_string(composition.dimension()));
  }
  std::vector<ReducedHyperplane> out;
  out.reserve(planes.size());
  for (const auto& plane : planes.planes()) out.push_back(reduce_plane(plane, composition));
  return out;
}

PlaneSet lift_planes(std::span<const ReducedHyperplane> planes,
                     const Composition& composition) {
  std::vector<Hyperplane> full;
  full.reserve(planes.size());
  for (const auto& plane : planes) full.push_back(lift_plane(plane, composition));
  return PlaneSet(composition.dimension(), std::move(full), composition);
}

std::int64_t reduced_dot(const ReducedHyperplane& plane, const ReducedVertex& vertex) {
  if (plane.coefficients.size() != vertex.coords.size()) {
    throw InvalidInput("reduced plane and vertex lengths differ (" +
                       std::to_string(plane.coefficients.size()) + " vs " +
                       std::to_string(vertex.coords.size()) + ")");
  }
  return plane.coefficients.dot(vertex.coords);
}

ReducedCoverage sliced_reduced_edges(std::span<const ReducedHyperplane> planes,
                                     const ReducedGrid& grid) {
  ReducedCoverage out;
  out.per_plane.resize(planes.size());
  std::vector<bool> covered(grid.edge_count(), false);
  const auto edges = grid.edges();
  for (std::size_t p = 0; p < planes.size(); ++p) {
    const auto sides = grid.sides(planes[p]);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (sides[edges[e].lower] * sides[edges[e].upper] < 0) {
        out.per_plane[p].push_back(static_cast<std::int64_t>(e));
        covered[e] = true;
      }
    }
  }
  for (std::size_t e = 0; e < covered.size(); ++e) {
    if (covered[e]) out.edges.push_back(static_cast<std::int64_t>(e));
  }
  return out;
}

ReducedCoverage sliced_reduced_edges(const PlaneSet& planes, const ReducedGrid& grid) {
  return sliced_reduced_edges(reduce_planes(planes, grid.composition()), grid);
}

std::int64_t weighted_sliced_count(std::span<const ReducedHyperplane> planes,
                                   const ReducedGrid& grid) {
  std::int64_t total = 0;
  for (const std::int64_t e : sliced_reduced_edges(planes, grid).edges) {
    total += grid.edge(e).multiplicity;
  }
  return total;
}

std::int64_t weighted_sliced_count(const PlaneSet& planes, const ReducedGrid& grid) {
  return weighted_sliced_count(reduce_planes(planes, grid.composition()), grid);
}

Composition coarsest_composition(const PlaneSet& planes) {
  const int n = planes.dimension();
  if (n < 1) throw InvalidInput("dimension must be positive");
  std::vector<int> blocks{1};
  for (int i = 1; i < n; ++i) {
    bool same = true;
    for (const Hyperplane& p : planes.planes()) {
      if (p.coefficients()[i] != p.coefficients()[i - 1]) {
        same = false;
        break;
      }
    }
    if (same) {
      ++blocks.back();
    } else {
      blocks.push_back(1);
    }
  }
  return Composition(std::move(blocks));
}

}  // namespace hyperslice
