#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dimred/matrix.hpp"

namespace dimred {

/// Outcome of one k-means fit: the best restart plus its silhouette profile.
struct ClusteringResult {
    std::vector<int> labels;
    Matrix centroids;
    double inertia = 0.0;
    std::vector<double> sample_silhouettes;
    double mean_silhouette = 0.0;
    int k = 0;
    std::uint64_t seed = 0;
    int iterations = 0;
};

struct KMeansOptions {
    int restarts = 10;
    int max_iter = 300;
    /// Stop when the largest centroid displacement falls below this.
    double tol = 1e-4;
};

/**
 * @brief Lloyd's k-means with k-means++ seeding, best of `restarts` by inertia.
 *
 * Restart r is seeded from hash(seed, r), so the result is a pure function of
 * (data, k, seed, options). Empty clusters are refilled with the point that is
 * farthest from its current centroid, so every label in [0, k) is used.
 *
 * Throws ParameterError if k < 2, k > n, restarts < 1, the data is not finite,
 * or there are fewer than k distinct points.
 */
ClusteringResult kmeans_fit(const Matrix& data, int k, std::uint64_t seed, const KMeansOptions& options = {});

/// Per-sample and mean silhouette.
struct SilhouetteResult {
    std::vector<double> samples;
    double mean = 0.0;
};

/**
 * Silhouette widths with Euclidean distances. Singleton clusters score 0, as
 * does a point whose a(i) and b(i) are both zero.
 *
 * Throws MetricError when fewer than two clusters are present and
 * ParameterError for negative labels or a label count mismatch.
 */
SilhouetteResult silhouette(const Matrix& data, std::span<const int> labels);

/// Sum of squared Euclidean distances from each sample to its assigned centroid.
double inertia(const Matrix& data, std::span<const int> labels, const Matrix& centroids);

}  // namespace dimred
