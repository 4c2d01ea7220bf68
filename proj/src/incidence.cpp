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

#include "hyperslice/incidence.hpp"

#include <algorithm>
#include <bit>

#include "hyperslice/error.hpp"

namespace hyperslice {

SliceState::SliceState(const ReducedGrid& grid, std::span<const ReducedHyperplane> planes)
    : grid_(&grid) {
  const auto edges = grid.edges();
  lower_.reserve(edges.size());
  upper_.reserve(edges.size());
  multiplicity_.reserve(edges.size());
  for (const auto& e : edges) {
    lower_.push_back(e.lower);
    upper_.push_back(e.upper);
    multiplicity_.push_back(e.multiplicity);
  }
  words_ = (edges.size() + 63) / 64;

  const int k = static_cast<int>(planes.size());
  coefficients_.resize(k, grid.size());
  dots_.resize(grid.vertex_count(), k);
  bits_.assign(k * words_, 0);
  plane_counts_.assign(k, 0);
  cover_.assign(edges.size(), 0);
  sides_scratch_.resize(grid.vertex_count());
  for (int p = 0; p < k; ++p) {
    if (planes[p].size() != grid.size()) {
      throw InvalidInput("plane " + std::to_string(p) + " has " +
                         std::to_string(planes[p].size()) + " reduced coefficients, grid has " +
                         std::to_string(grid.size()) + " blocks");
    }
    coefficients_.row(p) = planes[p].coefficients.transpose();
    biases_.push_back(planes[p].bias);
    dots_.col(p) = grid.vertex_coords() * planes[p].coefficients;
    std::uint64_t* row = bits_.data() + p * words_;
    evaluate_row(dots_.col(p), biases_[p], row);
    for (std::size_t w = 0; w < words_; ++w) {
      plane_counts_[p] += std::popcount(row[w]);
      for (std::uint64_t x = row[w]; x; x &= x - 1) ++cover_[w * 64 + std::countr_zero(x)];
    }
  }
  for (std::size_t e = 0; e < cover_.size(); ++e) {
    if (cover_[e] > 0) {
      ++covered_;
      covered_multiplicity_ += multiplicity_[e];
    }
  }
}

std::vector<ReducedHyperplane> SliceState::planes() const {
  std::vector<ReducedHyperplane> out;
  for (int p = 0; p < plane_count(); ++p) {
    out.push_back(ReducedHyperplane{coefficients_.row(p).transpose(), biases_[p]});
  }
  return out;
}

void SliceState::evaluate_row(const IntVector& dots, Bias bias, std::uint64_t* row) const {
  for (Eigen::Index v = 0; v < dots.size(); ++v) {
    sides_scratch_[v] = static_cast<std::int8_t>(bias.side_of(dots[v]));
  }
  const std::size_t edges = lower_.size();
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = 0;
    const std::size_t end = std::min(edges, (w + 1) * 64);
    for (std::size_t e = w * 64; e < end; ++e) {
      const bool cut = sides_scratch_[lower_[e]] * sides_scratch_[upper_[e]] < 0;
      word |= static_cast<std::uint64_t>(cut) << (e - w * 64);
    }
    row[w] = word;
  }
}

void SliceState::propose(int plane, const IntVector& coefficients, Proposal& out) const {
  if (coefficients.size() != coefficients_.cols()) {
    throw InvalidInput("proposal has the wrong number of reduced coefficients");
  }
  out.plane = plane;
  out.coefficients = coefficients;
  out.dots = dots_.col(plane);
  for (Eigen::Index j = 0; j < coefficients.size(); ++j) {
    const std::int64_t change = coefficients[j] - coefficients_(plane, j);
    if (change != 0) out.dots += change * grid_->vertex_coords().col(j);
  }
  out.row.resize(words_);
  evaluate_row(out.dots, biases_[plane], out.row.data());
  out.count = 0;
  for (const auto word : out.row) out.count += std::popcount(word);
}

CoverDelta SliceState::delta(const Proposal& proposal,
                             std::span<const std::int64_t> value) const {
  CoverDelta d;
  const std::uint64_t* old = bits_.data() + proposal.plane * words_;
  for (std::size_t w = 0; w < words_; ++w) {
    const std::uint64_t gained = proposal.row[w] & ~old[w];
    const std::uint64_t lost = old[w] & ~proposal.row[w];
    for (std::uint64_t x = gained; x; x &= x - 1) {
      const std::size_t e = w * 64 + std::countr_zero(x);
      if (cover_[e] == 0) {
        ++d.covered;
        d.multiplicity += multiplicity_[e];
        d.value += value[e];
      }
    }
    for (std::uint64_t x = lost; x; x &= x - 1) {
      const std::size_t e = w * 64 + std::countr_zero(x);
      if (cover_[e] == 1) {
        --d.covered;
        d.multiplicity -= multiplicity_[e];
        d.value -= value[e];
      }
    }
  }
  return d;
}

void SliceState::commit(const Proposal& proposal) {
  const int p = proposal.plane;
  std::uint64_t* old = bits_.data() + p * words_;
  for (std::size_t w = 0; w < words_; ++w) {
    for (std::uint64_t x = proposal.row[w] & ~old[w]; x; x &= x - 1) {
      const std::size_t e = w * 64 + std::countr_zero(x);
      if (cover_[e]++ == 0) {
        ++covered_;
        covered_multiplicity_ += multiplicity_[e];
      }
    }
    for (std::uint64_t x = old[w] & ~proposal.row[w]; x; x &= x - 1) {
      const std::size_t e = w * 64 + std::countr_zero(x);
      if (--cover_[e] == 0) {
        --covered_;
        covered_multiplicity_ -= multiplicity_[e];
      }
    }
    old[w] = proposal.row[w];
  }
  coefficients_.row(p) = proposal.coefficients.transpose();
  dots_.col(p) = proposal.dots;
  plane_counts_[p] = proposal.count;
}

}  // namespace hyperslice
