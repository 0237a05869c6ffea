#pragma once

#include <cstdint>
#include <vector>

#include "dimred/dataset.hpp"
#include "dimred/feature_weights.hpp"
#include "dimred/kmeans.hpp"

namespace dimred {

/// Mean silhouette of one k-means run on one feature subset.
struct SubsetScore {
    std::vector<int> subset;  // ascending column indices
    int k = 0;
    double si = 0.0;
};

/// Largest feature count accepted by the exhaustive subset sweep.
inline constexpr int kMaxSweepFeatures = 24;

/**
 * All subsets of {0..n-1} with size 2..n, ordered by size then
 * lexicographically. There are 2^n - n - 1 of them.
 */
std::vector<std::vector<int>> enumerate_subsets(int n_features);

struct FrsdOptions {
    KMeansOptions kmeans{};
    /// 0 selects DIMRED_THREADS or the hardware concurrency.
    unsigned threads = 0;
};

struct FrsdResult {
    FeatureWeights weights;
    /// Subset-major, k-minor, in enumerate_subsets order.
    std::vector<SubsetScore> scores;
};

/**
 * @brief Rank features by silhouette decomposition.
 *
 * Every subset of size >= 2 is clustered for every k in [k_min, k_max]. A
 * feature's raw score is the sum of mean silhouettes over all runs whose
 * subset contains it; the weights are raw scores divided by their total.
 *
 * Each run is seeded from (seed, sorted subset feature names, k), and sums
 * are taken in a fixed name-keyed order, so the result does not depend on
 * thread count or column order.
 */
FrsdResult frsd_rank(const Dataset& data, int k_min, int k_max, std::uint64_t seed, const FrsdOptions& options = {});

/// Recompute per-feature sum-normalized weights from a score table.
FeatureWeights aggregate_scores(const std::vector<std::string>& feature_names, const std::vector<SubsetScore>& scores);

/// Seed used for one (subset, k) run.
std::uint64_t subset_seed(std::uint64_t seed, const std::vector<std::string>& subset_names, int k);

}  // namespace dimred
