// Copyright 2026 The vedsum Authors.
//
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

// Seeded K-means: kmeans++ initialization driven by SplitMix64, then Lloyd
// iterations on squared Euclidean distance. Every tie resolves to the lowest
// index and all reductions run sequentially in double precision, so a given
// (points, config) pair yields bit-identical output on every platform.

#ifndef VEDSUM_KMEANS_H_
#define VEDSUM_KMEANS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vedsum/embed.h"

namespace vedsum {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Row-major view over n points of equal dimension.
struct PointView {
  std::span<const double> values;
  std::size_t dim = 0;

  std::size_t size() const { return dim == 0 ? 0 : values.size() / dim; }
  std::span<const double> row(std::size_t i) const {
    return values.subspan(i * dim, dim);
  }
};

inline PointView view_of(const EmbeddingMatrix& m) {
  return {m.values(), m.dim()};
}

struct KMeansConfig {
  std::size_t k = 4;
  std::uint64_t seed = 42;
  std::size_t max_iters = 300;
  double rel_tol = 1e-4;
};

struct KMeansResult {
  std::vector<std::vector<double>> centroids;
  std::vector<std::size_t> assignments;
  double inertia = 0.0;
  // Number of accepted centroid updates.
  std::size_t iterations = 0;
  bool converged = false;
  // inertia_history[0] is the inertia of the kmeans++ seeding; one entry per
  // accepted update follows. Non-increasing by construction.
  std::vector<double> inertia_history;

  friend bool operator==(const KMeansResult&, const KMeansResult&) = default;
};

double squared_distance(std::span<const double> a, std::span<const double> b);

// kmeans++ seeding: indices of the k points chosen as initial centroids.
std::vector<std::size_t> kmeanspp_seed(PointView points, std::size_t k,
                                       std::uint64_t seed);

// Throws kEmptyInput, kKTooLarge (k > n), kNonFiniteInput or
// kInvalidArgument (k == 0, max_iters == 0, rel_tol <= 0).
KMeansResult kmeans_fit(PointView points, const KMeansConfig& config);
inline KMeansResult kmeans_fit(const EmbeddingMatrix& points,
                               const KMeansConfig& config) {
  return kmeans_fit(view_of(points), config);
}

// For each centroid in order, the closest point not already taken by an
// earlier centroid (ties to the lowest point index).
std::vector<std::size_t> nearest_to_centroids(const KMeansResult& result,
                                              PointView points);
inline std::vector<std::size_t> nearest_to_centroids(
    const KMeansResult& result, const EmbeddingMatrix& points) {
  return nearest_to_centroids(result, view_of(points));
}

}  // namespace vedsum

#endif  // VEDSUM_KMEANS_H_
