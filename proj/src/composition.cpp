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

#include "hyperslice/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "hyperslice/error.hpp"

namespace hyperslice {

Composition::Composition(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvalidInput("composition has no blocks");
  starts_.reserve(blocks_.size());
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (blocks_[j] < 1) {
      throw InvalidInput("composition block " + std::to_string(j) +
                         " has size " + std::to_string(blocks_[j]) +
                         "; sizes must be positive");
    }
    starts_.push_back(dimension_);
    dimension_ += blocks_[j];
  }
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> blocks;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
      throw InvalidInput("bad composition '" + std::string(text) +
                         "': expected comma separated positive integers");
    }
    blocks.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(blocks));
}

Composition Composition::identity(int n) {
  return Composition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

std::optional<int> Composition::first_violation(const IntVector& coefficients) const {
  if (coefficients.size() != dimension_) {
    throw InvalidInput("coefficient vector has length " +
                       std::to_string(coefficients.size()) +
                       " but the composition covers " + std::to_string(dimension_) +
                       " coordinates");
  }
  for (int j = 0; j < size(); ++j) {
    const auto block = coefficients.segment(starts_[j], blocks_[j]);
    if ((block.array() != block[0]).any()) return j;
  }
  return std::nullopt;
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(blocks_[j]);
  }
  return out;
}

std::vector<Composition> all_compositions(int n) {
  if (n < 1) throw InvalidInput("compositions need n >= 1");
  if (n > 24) throw ResourceLimit("refusing to enumerate 2^(n-1) compositions for n > 24");
  // Bit i of mask set means a cut after coordinate i.
  std::vector<std::vector<int>> lists;
  const std::uint32_t masks = 1u << (n - 1);
  lists.reserve(masks);
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    std::vector<int> blocks;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask >> i & 1u) {
        blocks.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    blocks.push_back(run);
    lists.push_back(std::move(blocks));
  }
  std::sort(lists.begin(), lists.end());
  std::vector<Composition> out;
  out.reserve(lists.size());
  for (auto& blocks : lists) out.emplace_back(std::move(blocks));
  return out;
}

}  // namespace hyperslice
