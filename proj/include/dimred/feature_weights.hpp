#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dimred {

enum class WeightSource { FRSD, PCA };

std::string_view to_string(WeightSource source);

struct WeightEntry {
    std::string name;
    double weight = 0.0;
    /// Column (FRSD) or component (PCA) index this entry refers to.
    int index = 0;
};

/**
 * @brief Importance weights, sum-normalized and sorted descending.
 *
 * The constructor divides raw scores by their total so the weights always sum
 * to one, then stable-sorts by weight (ties keep input order). Raw scores may
 * be negative; `has_negative()` reports that case.
 */
class FeatureWeights {
public:
    FeatureWeights(std::vector<std::string> names, const std::vector<double>& raw_scores, WeightSource source);

    const std::vector<WeightEntry>& entries() const { return entries_; }
    WeightSource source() const { return source_; }
    std::size_t size() const { return entries_.size(); }
    bool has_negative() const { return has_negative_; }

    /// Indices of the first m entries, in rank order.
    std::vector<int> top_indices(std::size_t m) const;
    std::vector<std::string> top_names(std::size_t m) const;

    /// Weights rescaled to [0, 1] by MinMax; for display only.
    std::vector<double> minmax_view() const;

private:
    std::vector<WeightEntry> entries_;
    WeightSource source_;
    bool has_negative_ = false;
};

}  // namespace dimred
