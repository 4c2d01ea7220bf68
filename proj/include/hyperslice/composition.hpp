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

#ifndef HYPERSLICE_COMPOSITION_HPP_
#define HYPERSLICE_COMPOSITION_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperslice/types.hpp"

namespace hyperslice {

// An ordered list of positive block sizes summing to n. A coefficient vector
// satisfies the composition when it is constant on every block, blocks being
// consecutive runs of coordinates in the listed order.
class Composition {
 public:
  explicit Composition(std::vector<int> blocks);

  // Comma separated block sizes, e.g. "6,1,1,1,1".
  static Composition parse(std::string_view text);
  // [1, 1, ..., 1]: the reduction that changes nothing.
  static Composition identity(int n);

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  int block(int j) const { return blocks_[j]; }
  std::span<const int> blocks() const { return blocks_; }
  // First coordinate of block j.
  int block_start(int j) const { return starts_[j]; }

  // Index of the first block on which `coefficients` is not constant.
  std::optional<int> first_violation(const IntVector& coefficients) const;
  bool satisfied_by(const IntVector& coefficients) const {
    return coefficients.size() == dimension_ && !first_violation(coefficients);
  }

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> blocks_;
  std::vector<int> starts_;
  int dimension_ = 0;
};

// All 2^(n-1) compositions of n, in lexicographic order of block lists.
std::vector<Composition> all_compositions(int n);

}  // namespace hyperslice

#endif  // HYPERSLICE_COMPOSITION_HPP_
