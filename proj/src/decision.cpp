#include "dimred/decision.hpp"

#include <cmath>
#include <string>

#include "dimred/error.hpp"
#include "dimred/rng.hpp"

namespace dimred {

std::string_view to_string(Method method) {
    return method == Method::Selection ? "SELECTION" : "EXTRACTION";
}

Method method_from_string(std::string_view text) {
    if (text == "SELECTION") return Method::Selection;
    if (text == "EXTRACTION") return Method::Extraction;
    throw ParameterError("unknown method '" + std::string(text) + "'");
}

void DecisionConfig::validate() const {
    auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
    if (!in_unit(interpretability_oriented) || !in_unit(integrity_oriented)) {
        throw ParameterError("interpretability and integrity preferences must lie in [0, 1]");
    }
    if (std::abs(interpretability_oriented + integrity_oriented - 1.0) > 1e-9) {
        throw ParameterError("interpretability (" + std::to_string(interpretability_oriented) + ") + integrity (" +
                             std::to_string(integrity_oriented) + ") must equal 1");
    }
    if (!(target_resolution > 0.0 && target_resolution <= 1.0)) {
        throw ParameterError("target resolution must lie in (0, 1]");
    }
    if (k_min < 2) throw ParameterError("k_min must be at least 2");
    if (k_max < k_min) throw ParameterError("k_max must not be below k_min");
    if (restarts < 1) throw ParameterError("restarts must be at least 1");
}

ResolutionChoice select_for_resolution(const FeatureWeights& weights, double target_resolution) {
    if (!(target_resolution > 0.0 && target_resolution <= 1.0)) {
        throw ParameterError("target resolution must lie in (0, 1]");
    }
    const auto& entries = weights.entries();
    double cumulative = 0.0;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        cumulative += entries[i].weight;
        if (cumulative >= target_resolution) return {static_cast<int>(i + 1), cumulative};
    }
    return {static_cast<int>(entries.size()), 1.0};
}

BestK best_silhouette_over_k(const Matrix& data, int k_min, int k_max, std::uint64_t seed, int restarts) {
    if (k_min < 2 || k_max < k_min) throw ParameterError("invalid k range");
    if (k_max > data.rows()) throw ParameterError("k_max exceeds the number of samples");
    KMeansOptions options;
    options.restarts = restarts;
    BestK best;
    for (int k = k_min; k <= k_max; ++k) {
        auto run = kmeans_fit(data, k, hash_combine64(seed, static_cast<std::uint64_t>(k)), options);
        if (best.best_k == 0 || run.mean_silhouette > best.best_si) {
            best.best_si = run.mean_silhouette;
            best.best_k = k;
            best.clustering = std::move(run);
        }
    }
    return best;
}

Decision decide(double best_si_fs, double best_si_fe, const DecisionConfig& config) {
    Decision d;
    d.interpretability_score = config.interpretability_oriented * best_si_fs;
    d.integrity_score = config.integrity_oriented * best_si_fe;
    d.method = d.interpretability_score >= d.integrity_score ? Method::Selection : Method::Extraction;
    return d;
}

PipelineResult run_pipeline(const Dataset& data, const DecisionConfig& config) {
    config.validate();
    if (config.k_max > data.n_samples()) {
        throw ParameterError("k_max = " + std::to_string(config.k_max) + " exceeds the number of samples (" +
                             std::to_string(data.n_samples()) + ")");
    }

    auto normalized = minmax_normalize(data);
    const Dataset& norm = normalized.data;

    FrsdOptions frsd_options;
    frsd_options.kmeans.restarts = config.restarts;
    frsd_options.threads = config.threads;
    auto frsd = frsd_rank(norm, config.k_min, config.k_max, config.seed, frsd_options);

    auto pca = pca_fit(norm.values());
    auto pca_weights = pca_importance(pca);

    BranchOutcome selection;
    selection.resolution = select_for_resolution(frsd.weights, config.target_resolution);
    {
        const auto columns = frsd.weights.top_indices(static_cast<std::size_t>(selection.resolution.m));
        selection.reduced.resize(norm.n_samples(), static_cast<Eigen::Index>(columns.size()));
        for (std::size_t c = 0; c < columns.size(); ++c) {
            selection.reduced.col(static_cast<Eigen::Index>(c)) = norm.values().col(columns[c]);
        }
        selection.axis_labels = frsd.weights.top_names(columns.size());
    }
    selection.best = best_silhouette_over_k(selection.reduced, config.k_min, config.k_max, config.seed, config.restarts);

    BranchOutcome extraction;
    extraction.resolution = select_for_resolution(pca_weights, config.target_resolution);
    extraction.reduced = pca_project(pca, norm.values(), extraction.resolution.m);
    extraction.axis_labels = pca_weights.top_names(static_cast<std::size_t>(extraction.resolution.m));
    extraction.best =
        best_silhouette_over_k(extraction.reduced, config.k_min, config.k_max, config.seed, config.restarts);

    const auto decision = decide(selection.best.best_si, extraction.best.best_si, config);
    const BranchOutcome& chosen = decision.method == Method::Selection ? selection : extraction;

    DecisionReport report{frsd.weights, pca_weights};
    report.best_si_fs = selection.best.best_si;
    report.best_si_fe = extraction.best.best_si;
    report.interpretability_score = decision.interpretability_score;
    report.integrity_score = decision.integrity_score;
    report.chosen_method = decision.method;
    report.n_selected = chosen.resolution.m;
    report.achieved_resolution = chosen.resolution.achieved;
    report.best_k = chosen.best.best_k;

    if (frsd.weights.has_negative()) {
        normalized.warnings.push_back("at least one FRSD aggregate score is negative");
    }

    return PipelineResult{std::move(report),    std::move(normalized), std::move(frsd.scores),
                          std::move(pca),       std::move(selection),  std::move(extraction)};
}

DecisionReport run_decision(const Dataset& data, const DecisionConfig& config) {
    return run_pipeline(data, config).report;
}

}  // namespace dimred
