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

#ifndef HYPERSLICE_ERROR_HPP_
#define HYPERSLICE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hyperslice {

// Malformed arguments: dimension mismatches, composition violations,
// unparsable construction files.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size guard tripped (brute-force dimension, grid size, overflow bound).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search configuration admits no legal move.
class DegenerateConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace hyperslice

#endif  // HYPERSLICE_ERROR_HPP_
