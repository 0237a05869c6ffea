#include "dimred/feature_weights.hpp"

#include <algorithm>
#include <cmath>

#include "dimred/error.hpp"

namespace dimred {

std::string_view to_string(WeightSource source) {
    return source == WeightSource::FRSD ? "FRSD" : "PCA";
}

FeatureWeights::FeatureWeights(std::vector<std::string> names, const std::vector<double>& raw_scores,
                               WeightSource source)
    : source_(source) {
    if (names.size() != raw_scores.size()) {
        throw ParameterError("weight names and scores differ in length");
    }
    if (names.empty()) throw ParameterError("feature weights need at least one entry");
    double total = 0.0;
    for (const double s : raw_scores) {
        if (!std::isfinite(s)) throw ParameterError("non-finite importance score");
        total += s;
        has_negative_ = has_negative_ || s < 0.0;
    }
    if (!(total > 0.0)) {
        throw ParameterError("importance scores must have a positive total");
    }
    entries_.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        entries_.push_back({std::move(names[i]), raw_scores[i] / total, static_cast<int>(i)});
    }
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const WeightEntry& a, const WeightEntry& b) { return a.weight > b.weight; });
}

std::vector<int> FeatureWeights::top_indices(std::size_t m) const {
    m = std::min(m, entries_.size());
    std::vector<int> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) out.push_back(entries_[i].index);
    return out;
}

std::vector<std::string> FeatureWeights::top_names(std::size_t m) const {
    m = std::min(m, entries_.size());
    std::vector<std::string> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) out.push_back(entries_[i].name);
    return out;
}

std::vector<double> FeatureWeights::minmax_view() const {
    std::vector<double> out;
    out.reserve(entries_.size());
    const double hi = entries_.front().weight;
    const double lo = entries_.back().weight;
    for (const auto& e : entries_) out.push_back(hi > lo ? (e.weight - lo) / (hi - lo) : 0.0);
    return out;
}

}  // namespace dimred
