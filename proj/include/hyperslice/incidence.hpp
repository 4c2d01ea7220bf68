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

#ifndef HYPERSLICE_INCIDENCE_HPP_
#define HYPERSLICE_INCIDENCE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "hyperslice/reduced.hpp"
#include "hyperslice/types.hpp"

namespace hyperslice {

// Plane p with replacement coefficients, evaluated against the grid but not
// yet applied.
struct Proposal {
  int plane = -1;
  IntVector coefficients;
  IntVector dots;
  std::vector<std::uint64_t> row;
  std::int64_t count = 0;
};

// Change in the union coverage if a proposal were committed. `value` sums
// caller-supplied per-edge values over gained minus lost edges.
struct CoverDelta {
  std::int64_t covered = 0;
  std::int64_t multiplicity = 0;
  std::int64_t value = 0;
};

// Incremental form of the plane x reduced-edge incidence matrix for k planes
// on a fixed grid. Row p has bit e set iff plane p slices reduced edge e.
// Alongside the bits it keeps each plane's dot product at every grid vertex and,
// per edge, how many planes slice it, so that replacing one plane costs
// O(|V| + |E|) rather than a full re-evaluation.
class SliceState {
 public:
  SliceState(const ReducedGrid& grid, std::span<const ReducedHyperplane> planes);

  const ReducedGrid& grid() const { return *grid_; }
  int plane_count() const { return static_cast<int>(coefficients_.rows()); }
  // Row p: reduced coefficients of plane p.
  const IntRowMatrix& coefficients() const { return coefficients_; }
  std::vector<ReducedHyperplane> planes() const;

  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(int plane) const {
    return {bits_.data() + plane * words_, words_};
  }
  // |phi(H_p)|
  std::int64_t plane_sliced(int plane) const { return plane_counts_[plane]; }
  std::span<const std::int64_t> plane_counts() const { return plane_counts_; }

  // |phi(H)| and the multiplicity-weighted total (edges of Q_n).
  std::int64_t covered() const { return covered_; }
  std::int64_t covered_multiplicity() const { return covered_multiplicity_; }
  bool is_covered(std::int64_t edge) const { return cover_[edge] > 0; }

  void propose(int plane, const IntVector& coefficients, Proposal& out) const;
  CoverDelta delta(const Proposal& proposal, std::span<const std::int64_t> value) const;
  void commit(const Proposal& proposal);

 private:
  void evaluate_row(const IntVector& dots, Bias bias, std::uint64_t* row) const;

  const ReducedGrid* grid_;
  std::vector<std::uint32_t> lower_;
  std::vector<std::uint32_t> upper_;
  std::vector<std::int64_t> multiplicity_;
  std::size_t words_ = 0;

  IntRowMatrix coefficients_;
  std::vector<Bias> biases_;
  IntMatrix dots_;  // |V| x k
  std::vector<std::uint64_t> bits_;
  std::vector<std::int64_t> plane_counts_;
  std::vector<std::int32_t> cover_;
  std::int64_t covered_ = 0;
  std::int64_t covered_multiplicity_ = 0;
  mutable std::vector<std::int8_t> sides_scratch_;
};

}  // namespace hyperslice

#endif  // HYPERSLICE_INCIDENCE_HPP_
