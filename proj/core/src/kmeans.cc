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

#include "vedsum/kmeans.h"

#include <cmath>
#include <limits>
#include <string>

#include "vedsum/error.h"

namespace vedsum {
namespace {

using Centroids = std::vector<std::vector<double>>;

struct Assignment {
  std::vector<std::size_t> labels;
  std::vector<double> dist2;  // to the assigned centroid
  double inertia = 0.0;
};

Assignment assign(PointView points, const Centroids& centroids) {
  const std::size_t n = points.size();
  Assignment a;
  a.labels.resize(n);
  a.dist2.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = points.row(i);
    std::size_t best = 0;
    double best_d = squared_distance(p, centroids[0]);
    for (std::size_t c = 1; c < centroids.size(); ++c) {
      const double d = squared_distance(p, centroids[c]);
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    a.labels[i] = best;
    a.dist2[i] = best_d;
    a.inertia += best_d;
  }
  return a;
}

// Means of the assigned points. A cluster left empty takes the point with the
// largest distance to its own centroid among points not already used for a
// refill in this step.
Centroids update(PointView points, const Assignment& a, std::size_t k) {
  const std::size_t n = points.size();
  const std::size_t dim = points.dim;
  Centroids next(k, std::vector<double>(dim, 0.0));
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto& c = next[a.labels[i]];
    const auto p = points.row(i);
    for (std::size_t d = 0; d < dim; ++d) c[d] += p[d];
    ++counts[a.labels[i]];
  }
  std::vector<bool> used;
  for (std::size_t j = 0; j < k; ++j) {
    if (counts[j] > 0) {
      const double inv = static_cast<double>(counts[j]);
      for (double& x : next[j]) x /= inv;
      continue;
    }
    if (used.empty()) used.assign(n, false);
    std::size_t far = n;
    double far_d = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i] && a.dist2[i] > far_d) {
        far_d = a.dist2[i];
        far = i;
      }
    }
    used[far] = true;
    const auto p = points.row(far);
    next[j].assign(p.begin(), p.end());
  }
  return next;
}

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void validate(PointView points, const KMeansConfig& config) {
  if (points.dim == 0 || points.size() == 0) {
    throw Error(ErrorCode::kEmptyInput, "k-means needs at least one point");
  }
  if (points.values.size() % points.dim != 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point buffer is not a multiple of dim");
  }
  if (config.k == 0) {
    throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  }
  if (config.max_iters == 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_iters must be >= 1");
  }
  if (!(config.rel_tol > 0.0) || !std::isfinite(config.rel_tol)) {
    throw Error(ErrorCode::kInvalidArgument, "rel_tol must be > 0");
  }
  if (config.k > points.size()) {
    throw Error(ErrorCode::kKTooLarge,
                "k=" + std::to_string(config.k) + " exceeds " +
                    std::to_string(points.size()) + " points");
  }
  for (double x : points.values) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::kNonFiniteInput, "non-finite point component");
    }
  }
}

}  // namespace

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

std::vector<std::size_t> kmeanspp_seed(PointView points, std::size_t k,
                                       std::uint64_t seed) {
  const std::size_t n = points.size();
  SplitMix64 rng(seed);
  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  chosen.push_back(static_cast<std::size_t>(rng.next() % n));

  std::vector<double> weight(n);
  for (std::size_t i = 0; i < n; ++i) {
    weight[i] = squared_distance(points.row(i), points.row(chosen[0]));
  }
  std::vector<bool> taken(n, false);
  taken[chosen[0]] = true;

  while (chosen.size() < k) {
    double total = 0.0;
    for (double w : weight) total += w;
    const double threshold = rng.next_unit() * total;

    std::size_t pick = n;
    if (total > 0.0) {
      double cumulative = 0.0;
      std::size_t last_positive = n;
      for (std::size_t i = 0; i < n; ++i) {
        cumulative += weight[i];
        if (weight[i] > 0.0) last_positive = i;
        if (cumulative > threshold) {
          pick = i;
          break;
        }
      }
      // u * total can round up to total.
      if (pick == n) pick = last_positive;
    } else {
      // Every point coincides with a chosen centroid.
      for (std::size_t i = 0; i < n; ++i) {
        if (!taken[i]) {
          pick = i;
          break;
        }
      }
    }
    chosen.push_back(pick);
    taken[pick] = true;
    const auto c = points.row(pick);
    for (std::size_t i = 0; i < n; ++i) {
      const double d = squared_distance(points.row(i), c);
      if (d < weight[i]) weight[i] = d;
    }
  }
  return chosen;
}

KMeansResult kmeans_fit(PointView points, const KMeansConfig& config) {
  validate(points, config);
  const std::size_t k = config.k;

  Centroids centroids;
  centroids.reserve(k);
  for (std::size_t idx : kmeanspp_seed(points, k, config.seed)) {
    const auto p = points.row(idx);
    centroids.emplace_back(p.begin(), p.end());
  }

  KMeansResult result;
  Assignment current = assign(points, centroids);
  result.inertia_history.push_back(current.inertia);

  while (result.iterations < config.max_iters) {
    Centroids next = update(points, current, k);
    bool small_shift = true;
    for (std::size_t j = 0; j < k && small_shift; ++j) {
      const double shift = std::sqrt(squared_distance(next[j], centroids[j]));
      small_shift = shift < config.rel_tol * (1.0 + norm(centroids[j]));
    }
    Assignment candidate = assign(points, next);
    if (candidate.inertia > current.inertia) {
      // Rounding noise near a fixed point; keep the better state.
      result.converged = true;
      break;
    }
    centroids = std::move(next);
    current = std::move(candidate);
    ++result.iterations;
    result.inertia_history.push_back(current.inertia);
    if (small_shift) {
      result.converged = true;
      break;
    }
  }

  result.centroids = std::move(centroids);
  result.assignments = std::move(current.labels);
  result.inertia = current.inertia;
  return result;
}

std::vector<std::size_t> nearest_to_centroids(const KMeansResult& result,
                                              PointView points) {
  const std::size_t n = points.size();
  std::vector<bool> taken(n, false);
  std::vector<std::size_t> selected;
  selected.reserve(result.centroids.size());
  for (const auto& c : result.centroids) {
    std::size_t best = n;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      const double d = squared_distance(points.row(i), c);
      if (best == n || d < best_d) {
        best = i;
        best_d = d;
      }
    }
    if (best == n) break;
    taken[best] = true;
    selected.push_back(best);
  }
  return selected;
}

}  // namespace vedsum
