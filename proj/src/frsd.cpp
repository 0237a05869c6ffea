#include "dimred/frsd.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dimred/error.hpp"
#include "dimred/parallel.hpp"
#include "dimred/rng.hpp"

namespace dimred {

std::vector<std::vector<int>> enumerate_subsets(int n_features) {
    if (n_features < 2) {
        throw ParameterError("subset enumeration needs at least 2 features, got " + std::to_string(n_features));
    }
    if (n_features > kMaxSweepFeatures) {
        throw ParameterError("exhaustive subset sweep is limited to " + std::to_string(kMaxSweepFeatures) +
                             " features, got " + std::to_string(n_features));
    }
    std::vector<std::vector<int>> out;
    out.reserve((std::size_t{1} << n_features) - static_cast<std::size_t>(n_features) - 1);
    for (int size = 2; size <= n_features; ++size) {
        std::vector<int> combo(static_cast<std::size_t>(size));
        std::iota(combo.begin(), combo.end(), 0);
        for (;;) {
            out.push_back(combo);
            // advance to the next combination in lexicographic order
            int pos = size - 1;
            while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == n_features - size + pos) --pos;
            if (pos < 0) break;
            ++combo[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < size; ++j) {
                combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    return out;
}

namespace {

std::vector<std::string> sorted_names(const std::vector<std::string>& feature_names, const std::vector<int>& subset) {
    std::vector<std::string> names;
    names.reserve(subset.size());
    for (const int c : subset) names.push_back(feature_names[static_cast<std::size_t>(c)]);
    std::sort(names.begin(), names.end());
    return names;
}

std::string name_key(const std::vector<std::string>& names) {
    std::string key;
    for (const auto& n : names) {
        key += n;
        key += '\x1f';
    }
    return key;
}

}  // namespace

std::uint64_t subset_seed(std::uint64_t seed, const std::vector<std::string>& subset_names, int k) {
    std::uint64_t h = splitmix64(seed);
    for (const auto& name : subset_names) h = hash_combine64(h, hash_string64(name));
    return hash_combine64(h, static_cast<std::uint64_t>(k));
}

FeatureWeights aggregate_scores(const std::vector<std::string>& feature_names, const std::vector<SubsetScore>& scores) {
    // Fixed summation order, keyed by feature names rather than positions.
    std::vector<std::pair<std::string, int>> keys;
    keys.reserve(scores.size());
    for (const auto& s : scores) keys.emplace_back(name_key(sorted_names(feature_names, s.subset)), s.k);
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

    std::vector<double> raw(feature_names.size(), 0.0);
    for (const std::size_t idx : order) {
        for (const int c : scores[idx].subset) raw[static_cast<std::size_t>(c)] += scores[idx].si;
    }
    return FeatureWeights(feature_names, raw, WeightSource::FRSD);
}

FrsdResult frsd_rank(const Dataset& data, int k_min, int k_max, std::uint64_t seed, const FrsdOptions& options) {
    if (k_min < 2) throw ParameterError("k_min must be at least 2, got " + std::to_string(k_min));
    if (k_max < k_min) throw ParameterError("k_max must not be below k_min");
    if (k_max > data.n_samples()) {
        throw ParameterError("k_max = " + std::to_string(k_max) + " exceeds the number of samples (" +
                             std::to_string(data.n_samples()) + ")");
    }
    const auto subsets = enumerate_subsets(static_cast<int>(data.n_features()));
    const auto n_k = static_cast<std::size_t>(k_max - k_min + 1);

    std::vector<SubsetScore> scores(subsets.size() * n_k);
    const auto& names = data.feature_names();
    const Matrix& values = data.values();

    parallel_for(scores.size(), resolve_thread_count(options.threads), [&](std::size_t task) {
        const auto& subset = subsets[task / n_k];
        const int k = k_min + static_cast<int>(task % n_k);
        Matrix columns(values.rows(), static_cast<Eigen::Index>(subset.size()));
        for (std::size_t c = 0; c < subset.size(); ++c) columns.col(static_cast<Eigen::Index>(c)) = values.col(subset[c]);
        const auto run = kmeans_fit(columns, k, subset_seed(seed, sorted_names(names, subset), k), options.kmeans);
        scores[task] = SubsetScore{subset, k, run.mean_silhouette};
    });

    auto weights = aggregate_scores(names, scores);
    return FrsdResult{std::move(weights), std::move(scores)};
}

}  // namespace dimred
