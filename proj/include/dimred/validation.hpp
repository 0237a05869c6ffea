#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dimred/decision.hpp"
#include "dimred/feature_weights.hpp"

namespace dimred {

/// One synthetic decision: random silhouettes and a random interpretability preference.
struct RandomCase {
    double si_fs = 0.0;
    double si_fe = 0.0;
    double alpha = 0.0;
    double integrity = 0.0;  // 1 - alpha
    double interpretability_score = 0.0;
    double integrity_score = 0.0;
    Method chosen = Method::Selection;
};

/// n cases with si_fs, si_fe, alpha ~ U[0, 1), each decided with decide().
std::vector<RandomCase> generate_cases(int n, std::uint64_t seed);

/// Cases whose chosen method disagrees with the direct comparison of the two scores.
int count_misclassified(const std::vector<RandomCase>& cases);

struct SweepRow {
    double target = 0.0;
    int m_fs = 0;
    double achieved_fs = 0.0;
    int m_fe = 0;
    double achieved_fe = 0.0;
    /// achieved_fe - achieved_fs, only when both branches keep the same count.
    std::optional<double> delta;
};

std::vector<SweepRow> resolution_sweep(const FeatureWeights& weights_fs, const FeatureWeights& weights_fe,
                                       const std::vector<double>& targets);

/// 0.1, 0.2, ..., 1.0
std::vector<double> default_sweep_targets();

/// Rows where both counts match but extraction retains less than selection.
std::vector<SweepRow> delta_violations(const std::vector<SweepRow>& rows);

/// Reference ward-level importance weights (8 deprivation scores), as fixed inputs.
FeatureWeights reference_frsd_weights();
FeatureWeights reference_pca_weights();

void write_cases_csv(std::ostream& out, const std::vector<RandomCase>& cases);
/// interpretability_score, integrity_score, class: the data behind a decision scatter plot.
void write_scatter_csv(std::ostream& out, const std::vector<RandomCase>& cases);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace dimred
