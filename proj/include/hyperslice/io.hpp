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

#ifndef HYPERSLICE_IO_HPP_
#define HYPERSLICE_IO_HPP_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperslice/core.hpp"
#include "hyperslice/error.hpp"

namespace hyperslice {

// Construction text format: one plane per line, n integer coefficients then
// the bias as a decimal literal, whitespace separated. Lines starting with '#'
// and blank lines are skipped.
class ParseError : public InvalidInput {
 public:
  ParseError(int line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// n is taken from the first plane line unless `dimension` is given.
PlaneSet parse_construction(std::istream& in, std::optional<int> dimension = std::nullopt);
PlaneSet parse_construction(std::string_view text,
                            std::optional<int> dimension = std::nullopt);
PlaneSet read_construction_file(const std::string& path,
                                std::optional<int> dimension = std::nullopt);

// Single-space separated, one '\n' terminated line per plane, preceded by
// each entry of `comments` as a "# " line.
std::string format_construction(const PlaneSet& planes,
                                const std::vector<std::string>& comments = {});

}  // namespace hyperslice

#endif  // HYPERSLICE_IO_HPP_
