#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dimred/dataset.hpp"
#include "dimred/feature_weights.hpp"
#include "dimred/frsd.hpp"
#include "dimred/kmeans.hpp"
#include "dimred/pca.hpp"

namespace dimred {

enum class Method { Selection, Extraction };

std::string_view to_string(Method method);
Method method_from_string(std::string_view text);

/// User preferences and search ranges for one decision run.
struct DecisionConfig {
    double interpretability_oriented = 0.5;
    double integrity_oriented = 0.5;
    double target_resolution = 0.85;
    int k_min = 3;
    int k_max = 10;
    std::uint64_t seed = 42;
    int restarts = 10;
    /// Worker count for the FRSD sweep; 0 = automatic. Does not affect results.
    unsigned threads = 0;

    /// Throws ParameterError unless the preferences are in [0, 1] and sum to 1
    /// (within 1e-9), target_resolution is in (0, 1], and 2 <= k_min <= k_max.
    void validate() const;
};

struct DecisionReport {
    FeatureWeights frsd_weights;
    FeatureWeights pca_weights;
    double best_si_fs = 0.0;
    double best_si_fe = 0.0;
    double interpretability_score = 0.0;
    double integrity_score = 0.0;
    Method chosen_method = Method::Selection;
    /// Features kept (SELECTION) or components kept (EXTRACTION).
    int n_selected = 0;
    double achieved_resolution = 0.0;
    int best_k = 0;
};

struct ResolutionChoice {
    int m = 0;
    double achieved = 0.0;
};

/**
 * Smallest prefix of the ranked weights whose cumulative sum reaches target.
 * The full prefix always qualifies and reports a resolution of exactly 1.
 */
ResolutionChoice select_for_resolution(const FeatureWeights& weights, double target_resolution);

struct BestK {
    double best_si = 0.0;
    int best_k = 0;
    ClusteringResult clustering;
};

/// Fit k-means for every k in [k_min, k_max]; keep the highest mean silhouette (ties -> smaller k).
BestK best_silhouette_over_k(const Matrix& data, int k_min, int k_max, std::uint64_t seed, int restarts);

struct Decision {
    Method method = Method::Selection;
    double interpretability_score = 0.0;
    double integrity_score = 0.0;
};

/// Score both strategies and pick the larger; a tie chooses SELECTION.
Decision decide(double best_si_fs, double best_si_fe, const DecisionConfig& config);

/// One reduction branch, as evaluated during the decision.
struct BranchOutcome {
    ResolutionChoice resolution;
    /// Reduced data the branch clustered (selected columns or PC scores).
    Matrix reduced;
    /// Feature names (selection) or PC1..PCm (extraction).
    std::vector<std::string> axis_labels;
    BestK best;
};

/// Everything computed by the pipeline; `report` is the user-facing summary.
struct PipelineResult {
    DecisionReport report;
    NormalizedDataset normalized;
    std::vector<SubsetScore> subset_scores;
    PcaModel pca;
    BranchOutcome selection;
    BranchOutcome extraction;

    const BranchOutcome& chosen() const {
        return report.chosen_method == Method::Selection ? selection : extraction;
    }
};

/**
 * @brief Full selection-vs-extraction procedure on a raw dataset.
 *
 * MinMax-normalizes the data, ranks features with FRSD and PCA, reduces each
 * branch to the target resolution, finds each branch's best silhouette over
 * the k range, then decides.
 */
PipelineResult run_pipeline(const Dataset& data, const DecisionConfig& config);

DecisionReport run_decision(const Dataset& data, const DecisionConfig& config);

}  // namespace dimred
