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

#include "hyperslice/core.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "hyperslice/error.hpp"

namespace hyperslice {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceLimit("64-bit overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ResourceLimit("64-bit overflow");
  return out;
}

std::uint64_t coordinate_bit(int n, int i) { return std::uint64_t{1} << (n - 1 - i); }

// Sign of every plane at every vertex, indexed [plane][vertex index]. The dot
// product is accumulated along the binary reflected walk idx -> idx ^ lowbit.
std::vector<std::vector<std::int8_t>> vertex_sides(const PlaneSet& planes) {
  const int n = planes.dimension();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::vector<std::int8_t>> sides(planes.size());
  std::vector<std::int64_t> dots(count);
  for (int p = 0; p < planes.size(); ++p) {
    const IntVector& a = planes[p].coefficients();
    const Bias bias = planes[p].bias();
    dots[0] = -a.sum();
    for (std::uint64_t idx = 1; idx < count; ++idx) {
      const int low = std::countr_zero(idx);
      dots[idx] = dots[idx ^ (std::uint64_t{1} << low)] + 2 * a[n - 1 - low];
    }
    auto& s = sides[p];
    s.resize(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      s[idx] = static_cast<std::int8_t>(bias.side_of(dots[idx]));
    }
  }
  return sides;
}

struct DimensionScan {
  std::int64_t sliced = 0;
  std::vector<Edge> unsliced;
};

DimensionScan scan_dimension(const std::vector<std::vector<std::int8_t>>& sides,
                             int n, int i, bool collect) {
  DimensionScan out;
  const std::uint64_t bit = coordinate_bit(n, i);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < count; ++v) {
    if (v & bit) continue;
    const std::uint64_t w = v | bit;
    bool sliced = false;
    for (const auto& s : sides) {
      if (s[v] * s[w] < 0) {
        sliced = true;
        break;
      }
    }
    if (sliced) {
      ++out.sliced;
    } else if (collect) {
      out.unsliced.push_back(Edge{n, v, i});
    }
  }
  return out;
}

VerifyResult brute_force(const PlaneSet& planes, const BruteForceOptions& options,
                         bool collect) {
  const int n = planes.dimension();
  if (n > options.max_dimension || n > kMaxVertexDimension) {
    throw ResourceLimit("Q_" + std::to_string(n) + " has " +
                        std::to_string(hypercube_edge_count(n)) +
                        " edges, above the brute-force limit (n <= " +
                        std::to_string(options.max_dimension) +
                        "); count on the reduced grid instead");
  }
  const auto sides = vertex_sides(planes);
  std::vector<DimensionScan> scans(n);
  const int workers = std::clamp(options.workers, 1, n);
  if (workers == 1) {
    for (int i = 0; i < n; ++i) scans[i] = scan_dimension(sides, n, i, collect);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < n; i += workers) scans[i] = scan_dimension(sides, n, i, collect);
      });
    }
  }
  VerifyResult result;
  result.total = hypercube_edge_count(n);
  for (auto& scan : scans) {
    result.sliced += scan.sliced;
    result.unsliced.insert(result.unsliced.end(), scan.unsliced.begin(),
                           scan.unsliced.end());
  }
  result.all_sliced = result.sliced == result.total;
  return result;
}

}  // namespace

std::int64_t hypercube_edge_count(int n) {
  if (n < 1) return 0;
  if (n > 62) throw ResourceLimit("edge count of Q_n overflows for n > 62");
  return checked_mul(n, std::int64_t{1} << (n - 1));
}

Bias::Bias(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InvalidInput("bias denominator is zero");
  if (denominator < 0) {
    numerator = checked_mul(numerator, -1);
    denominator = checked_mul(denominator, -1);
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Bias Bias::parse(std::string_view text) {
  const auto fail = [&] {
    return InvalidInput("bad bias literal '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t p = 0, q = 0;
    const auto num = text.substr(0, slash), den = text.substr(slash + 1);
    auto [e1, c1] = std::from_chars(num.data(), num.data() + num.size(), p);
    auto [e2, c2] = std::from_chars(den.data(), den.data() + den.size(), q);
    if (c1 != std::errc() || e1 != num.data() + num.size() || c2 != std::errc() ||
        e2 != den.data() + den.size() || q == 0) {
      throw fail();
    }
    return Bias(p, q);
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::int64_t value = 0;
  std::int64_t scale = 1;
  int digits = 0;
  bool fraction = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.' && !fraction) {
      fraction = true;
      continue;
    }
    if (c < '0' || c > '9') throw fail();
    if (++digits > 18) throw fail();
    value = value * 10 + (c - '0');
    if (fraction) scale *= 10;
  }
  if (digits == 0) throw fail();
  return Bias(negative ? -value : value, scale);
}

int Bias::side_of(std::int64_t dot) const {
  const std::int64_t lhs = checked_mul(den_, dot);
  return lhs > num_ ? 1 : (lhs < num_ ? -1 : 0);
}

std::string Bias::to_string() const {
  std::int64_t rest = den_;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) rest /= 2, ++twos;
  while (rest % 5 == 0) rest /= 5, ++fives;
  const int places = std::max(twos, fives);
  if (rest != 1 || places > 18) {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  std::int64_t pow10 = 1;
  for (int i = 0; i < places; ++i) pow10 *= 10;
  const std::int64_t scaled = checked_mul(std::llabs(num_), pow10 / den_);
  std::string out = num_ < 0 ? "-" : "";
  out += std::to_string(scaled / pow10);
  if (places > 0) {
    std::string frac = std::to_string(scaled % pow10);
    out += '.';
    out += std::string(places - frac.size(), '0');
    out += frac;
  }
  return out;
}

Vertex::Vertex(IntVector coords) : coords_(std::move(coords)) {
  if (coords_.size() < 1) throw InvalidInput("vertex has no coordinates");
  if (((coords_.array() != 1) && (coords_.array() != -1)).any()) {
    throw InvalidInput("vertex coordinates must be -1 or +1");
  }
}

Vertex Vertex::from_index(int n, std::uint64_t index) {
  if (n < 1 || n > kMaxVertexDimension) {
    throw InvalidInput("vertex dimension out of range: " + std::to_string(n));
  }
  IntVector coords(n);
  for (int i = 0; i < n; ++i) coords[i] = (index & coordinate_bit(n, i)) ? 1 : -1;
  return Vertex(std::move(coords));
}

std::uint64_t Vertex::index() const {
  const int n = dimension();
  if (n > kMaxVertexDimension) throw ResourceLimit("vertex index needs n <= 63");
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) {
    if (coords_[i] == 1) out |= coordinate_bit(n, i);
  }
  return out;
}

Edge Edge::from_endpoints(const Vertex& a, const Vertex& b) {
  if (a.dimension() != b.dimension()) {
    throw InvalidInput("edge endpoints have different dimensions");
  }
  int flip = -1;
  for (int i = 0; i < a.dimension(); ++i) {
    if (a[i] == b[i]) continue;
    if (flip >= 0) throw InvalidInput("endpoints differ in more than one coordinate");
    flip = i;
  }
  if (flip < 0) throw InvalidInput("endpoints are identical");
  const Vertex& lower = a[flip] == -1 ? a : b;
  return Edge{a.dimension(), lower.index(), flip};
}

Vertex Edge::upper() const {
  return Vertex::from_index(dimension, lower_index | coordinate_bit(dimension, flip));
}

Hyperplane::Hyperplane(IntVector coefficients, Bias bias)
    : coefficients_(std::move(coefficients)), bias_(bias) {
  if (coefficients_.size() < 1) throw InvalidInput("hyperplane has no coefficients");
  // |den * <a,v> - num| <= den * |a|_1 + |num| must fit.
  try {
    std::int64_t l1 = 0;
    for (Eigen::Index i = 0; i < coefficients_.size(); ++i) {
      l1 = checked_add(l1, std::llabs(coefficients_[i]));
    }
    checked_add(checked_mul(l1, bias_.denominator()), std::llabs(bias_.numerator()));
  } catch (const ResourceLimit&) {
    throw InvalidInput("hyperplane coefficients too large for exact 64-bit evaluation");
  }
}

std::int64_t Hyperplane::dot(const Vertex& v) const {
  if (v.dimension() != dimension()) {
    throw InvalidInput("dimension mismatch: plane in R^" + std::to_string(dimension()) +
                       ", vertex in R^" + std::to_string(v.dimension()));
  }
  return coefficients_.dot(v.coords());
}

bool operator==(const Hyperplane& a, const Hyperplane& b) {
  return a.coefficients_ == b.coefficients_ && a.bias_ == b.bias_;
}

PlaneSet::PlaneSet(int dimension, std::vector<Hyperplane> planes,
                   std::optional<Composition> composition)
    : dimension_(dimension), planes_(std::move(planes)), composition_(std::move(composition)) {
  if (dimension_ < 1) throw InvalidInput("plane set dimension must be positive");
  for (std::size_t p = 0; p < planes_.size(); ++p) {
    if (planes_[p].dimension() != dimension_) {
      throw InvalidInput("plane " + std::to_string(p) + " has dimension " +
                         std::to_string(planes_[p].dimension()) + ", expected " +
                         std::to_string(dimension_));
    }
  }
  if (composition_) {
    if (composition_->dimension() != dimension_) {
      throw InvalidInput("composition " + composition_->to_string() + " does not sum to " +
                         std::to_string(dimension_));
    }
    for (std::size_t p = 0; p < planes_.size(); ++p) {
      if (auto bad = composition_->first_violation(planes_[p].coefficients())) {
        throw InvalidInput("plane " + std::to_string(p) + " is not constant on block " +
                           std::to_string(*bad) + " of composition " +
                           composition_->to_string());
      }
    }
  }
}

PlaneSet PlaneSet::with_plane(Hyperplane plane) const {
  auto planes = planes_;
  std::optional<Composition> composition = composition_;
  if (composition && plane.dimension() == dimension_ &&
      !composition->satisfied_by(plane.coefficients())) {
    composition.reset();
  }
  planes.push_back(std::move(plane));
  return PlaneSet(dimension_, std::move(planes), std::move(composition));
}

bool slices(const Hyperplane& plane, const Edge& edge) {
  if (plane.dimension() != edge.dimension) {
    throw InvalidInput("dimension mismatch: plane in R^" + std::to_string(plane.dimension()) +
                       ", edge of Q_" + std::to_string(edge.dimension));
  }
  return plane.side(edge.lower()) * plane.side(edge.upper()) < 0;
}

std::int64_t count_sliced(const PlaneSet& planes, const BruteForceOptions& options) {
  return brute_force(planes, options, /*collect=*/false).sliced;
}

VerifyResult verify_full(const PlaneSet& planes, const BruteForceOptions& options) {
  return brute_force(planes, options, /*collect=*/true);
}

}  // namespace hyperslice
