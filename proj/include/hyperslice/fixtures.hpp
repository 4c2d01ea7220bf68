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

#ifndef HYPERSLICE_FIXTURES_HPP_
#define HYPERSLICE_FIXTURES_HPP_

#include <cstdint>
#include <span>
#include <string_view>

#include "hyperslice/composition.hpp"
#include "hyperslice/core.hpp"

namespace hyperslice {

// A published construction, stored verbatim in the text file format.
struct Fixture {
  std::string_view name;
  int dimension;
  std::int64_t expected_sliced;
  std::string_view composition;  // one the planes satisfy
  std::string_view citation;
  std::string_view text;

  PlaneSet planes() const;
  Composition reduced_composition() const { return Composition::parse(composition); }
};

std::span<const Fixture> fixtures();
// Throws NotFound.
const Fixture& fixture(std::string_view name);

}  // namespace hyperslice

#endif  // HYPERSLICE_FIXTURES_HPP_
