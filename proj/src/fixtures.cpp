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

#include "hyperslice/fixtures.hpp"

#include <array>
#include <string>

#include "hyperslice/error.hpp"
#include "hyperslice/io.hpp"

namespace hyperslice {
namespace {

// 8 planes slicing all 5120 edges of Q_10, so S(10) <= 8.
constexpr std::string_view kEq1 =
    "-2 -2 -2 -2 -2 -2 1 3 -8 -1 0.5\n"
    "-2 -2 -2 -2 -2 -2 -1 -3 8 1 0.5\n"
    "-2 -2 -2 -2 -2 -2 -1 8 3 -1 0.5\n"
    "-2 -2 -2 -2 -2 -2 1 -8 -3 1 0.5\n"
    "-2 -2 -2 -2 -2 -2 4 -1 1 -7 0.5\n"
    "-2 -2 -2 -2 -2 -2 -4 1 -1 7 0.5\n"
    "-2 -2 -2 -2 -2 -2 -7 -1 -1 -4 0.5\n"
    "-2 -2 -2 -2 -2 -2 7 1 1 4 0.5\n";

// Paterson's 5 planes for Q_6 (S(6) <= 5). Bias 0, but every dot product is odd.
constexpr std::string_view kPaterson =
    "1 1 1 3 3 -4 0\n"
    "-2 -2 -2 3 3 -1 0\n"
    "3 3 3 1 1 -4 0\n"
    "-1 -1 -1 3 3 6 0\n"
    "3 3 3 1 1 8 0\n";

// First full Q_10 solution found with the shared coefficient pinned to -9.
constexpr std::string_view kAppBOrig =
    "-9 -9 -9 -9 -9 -9 7 -16 5 35 0.5\n"
    "-9 -9 -9 -9 -9 -9 -32 -4 -17 8 0.5\n"
    "-9 -9 -9 -9 -9 -9 32 5 19 -4 0.5\n"
    "-9 -9 -9 -9 -9 -9 -3 15 -3 -38 0.5\n"
    "-9 -9 -9 -9 -9 -9 15 3 -36 4 0.5\n"
    "-9 -9 -9 -9 -9 -9 8 -35 -2 -12 0.5\n"
    "-9 -9 -9 -9 -9 -9 -4 33 7 16 0.5\n"
    "-9 -9 -9 -9 -9 -9 -18 -4 34 -5 0.5\n";

// Full Q_10 solution found with a restricted set of coefficient magnitudes.
constexpr std::string_view kAppBAlt =
    "-9 -9 -9 -9 -9 -9 30 4 3 -20 0.5\n"
    "-9 -9 -9 -9 -9 -9 20 -3 4 30 0.5\n"
    "-9 -9 -9 -9 -9 -9 -30 -3 -4 20 0.5\n"
    "-9 -9 -9 -9 -9 -9 -20 3 -3 -30 0.5\n"
    "-9 -9 -9 -9 -9 -9 -3 -38 11 -3 0.5\n"
    "-9 -9 -9 -9 -9 -9 4 -11 -38 -4 0.5\n"
    "-9 -9 -9 -9 -9 -9 3 38 -11 3 0.5\n"
    "-9 -9 -9 -9 -9 -9 -4 11 38 3 0.5\n";

// 12 planes on Q_15 slicing 245628 of 245760 edges.
constexpr std::string_view kAppC =
    "-1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -2 -2 0.5\n"
    "-1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -2 0 0.5\n"
    "-1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 2 -2 0.5\n"
    "-1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 2 0 0.5\n"
    "-1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -6 -2 0.5\n"
    "-1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -6 10 0.5\n"
    "-1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -6 0 0.5\n"
    "-1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 6 0 0.5\n"
    "-1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 8 16 0.5\n"
    "-1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 8 0 0.5\n"
    "-1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -10 0 0.5\n"
    "-1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 10 0 0.5\n";

constexpr std::array<Fixture, 5> kFixtures{{
    {"eq1_q10_8planes", 10, 5120, "6,1,1,1,1",
     "8 planes slicing all edges of Q_10", kEq1},
    {"paterson_q6_5planes", 6, 192, "3,2,1", "Paterson's 5 planes slicing Q_6", kPaterson},
    {"appB_q10_orig", 10, 5120, "6,1,1,1,1",
     "first full Q_10 solution, shared coefficient -9", kAppBOrig},
    {"appB_q10_alt", 10, 5120, "6,1,1,1,1",
     "Q_10 solution with restricted coefficient magnitudes", kAppBAlt},
    {"appC_q15_12planes", 15, 245628, "13,1,1",
     "12 planes on Q_15 slicing 245628 of 245760 edges", kAppC},
}};

}  // namespace

PlaneSet Fixture::planes() const {
  const PlaneSet raw = parse_construction(text, dimension);
  return PlaneSet(raw.dimension(), raw.planes(), reduced_composition());
}

std::span<const Fixture> fixtures() { return kFixtures; }

const Fixture& fixture(std::string_view name) {
  for (const auto& f : kFixtures) {
    if (f.name == name) return f;
  }
  throw NotFound("no fixture named '" + std::string(name) + "'");
}

}  // namespace hyperslice
