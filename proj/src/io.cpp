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

#include "hyperslice/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hyperslice {

PlaneSet parse_construction(std::istream& in, std::optional<int> dimension) {
  std::vector<Hyperplane> planes;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(std::move(t));
    if (tokens.empty()) continue;
    if (tokens.size() < 2) {
      throw ParseError(line_no, "expected at least one coefficient and a bias");
    }
    const int n = static_cast<int>(tokens.size()) - 1;
    if (!dimension) dimension = n;
    if (n != *dimension) {
      throw ParseError(line_no, "expected " + std::to_string(*dimension + 1) +
                                    " tokens, found " + std::to_string(tokens.size()));
    }
    IntVector coefficients(n);
    for (int i = 0; i < n; ++i) {
      const std::string& t = tokens[i];
      const char* first = t.data() + (t.front() == '+' ? 1 : 0);
      std::int64_t value = 0;
      auto [end, ec] = std::from_chars(first, t.data() + t.size(), value);
      if (ec != std::errc() || end != t.data() + t.size()) {
        throw ParseError(line_no, "coefficient " + std::to_string(i + 1) + " ('" + t +
                                      "') is not an integer");
      }
      coefficients[i] = value;
    }
    try {
      planes.emplace_back(std::move(coefficients), Bias::parse(tokens.back()));
    } catch (const InvalidInput& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!dimension) throw ParseError(line_no, "no planes and no dimension given");
  return PlaneSet(*dimension, std::move(planes));
}

PlaneSet parse_construction(std::string_view text, std::optional<int> dimension) {
  std::istringstream in{std::string(text)};
  return parse_construction(in, dimension);
}

PlaneSet read_construction_file(const std::string& path, std::optional<int> dimension) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return parse_construction(in, dimension);
}

std::string format_construction(const PlaneSet& planes,
                                const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  for (const auto& plane : planes.planes()) {
    for (Eigen::Index i = 0; i < plane.coefficients().size(); ++i) {
      out += std::to_string(plane.coefficients()[i]);
      out += ' ';
    }
    out += plane.bias().to_string();
    out += '\n';
  }
  return out;
}

}  // namespace hyperslice
