#include "dimred/validation.hpp"

#include <ostream>

#include "dimred/error.hpp"
#include "dimred/format.hpp"
#include "dimred/rng.hpp"

namespace dimred {

std::vector<RandomCase> generate_cases(int n, std::uint64_t seed) {
    if (n < 1) throw ParameterError("case count must be at least 1");
    Rng rng(seed);
    std::vector<RandomCase> cases;
    cases.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        RandomCase c;
        c.si_fs = rng.uniform();
        c.si_fe = rng.uniform();
        c.alpha = rng.uniform();
        c.integrity = 1.0 - c.alpha;
        DecisionConfig config;
        config.interpretability_oriented = c.alpha;
        config.integrity_oriented = c.integrity;
        const auto d = decide(c.si_fs, c.si_fe, config);
        c.interpretability_score = d.interpretability_score;
        c.integrity_score = d.integrity_score;
        c.chosen = d.method;
        cases.push_back(c);
    }
    return cases;
}

int count_misclassified(const std::vector<RandomCase>& cases) {
    int wrong = 0;
    for (const auto& c : cases) {
        const Method expected =
            c.alpha * c.si_fs >= (1.0 - c.alpha) * c.si_fe ? Method::Selection : Method::Extraction;
        if (expected != c.chosen) ++wrong;
    }
    return wrong;
}

std::vector<SweepRow> resolution_sweep(const FeatureWeights& weights_fs, const FeatureWeights& weights_fe,
                                       const std::vector<double>& targets) {
    std::vector<SweepRow> rows;
    rows.reserve(targets.size());
    for (const double t : targets) {
        const auto fs = select_for_resolution(weights_fs, t);
        const auto fe = select_for_resolution(weights_fe, t);
        SweepRow row{t, fs.m, fs.achieved, fe.m, fe.achieved, std::nullopt};
        if (fs.m == fe.m) row.delta = fe.achieved - fs.achieved;
        rows.push_back(row);
    }
    return rows;
}

std::vector<double> default_sweep_targets() {
    std::vector<double> t;
    for (int i = 1; i <= 10; ++i) t.push_back(i / 10.0);
    return t;
}

std::vector<SweepRow> delta_violations(const std::vector<SweepRow>& rows) {
    std::vector<SweepRow> out;
    for (const auto& r : rows) {
        if (r.delta && *r.delta < 0.0) out.push_back(r);
    }
    return out;
}

FeatureWeights reference_frsd_weights() {
    return FeatureWeights({"IMD Score", "Income Score", "Employment Score", "Health Score", "Education Score",
                           "Barriers Score", "Crime Score", "Living Score"},
                          {0.1217, 0.1315, 0.1319, 0.1294, 0.1205, 0.1172, 0.1298, 0.1178}, WeightSource::FRSD);
}

FeatureWeights reference_pca_weights() {
    return FeatureWeights({"PC1", "PC2", "PC3", "PC4", "PC5", "PC6", "PC7", "PC8"},
                          {0.1366, 0.1365, 0.1357, 0.1329, 0.1286, 0.1222, 0.1139, 0.0931}, WeightSource::PCA);
}

void write_cases_csv(std::ostream& out, const std::vector<RandomCase>& cases) {
    out << "case,si_fs,si_fe,interpretability_oriented,integrity_oriented,interpretability_score,integrity_score,"
           "chosen_method\n";
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        out << i + 1 << ',' << format_real(c.si_fs) << ',' << format_real(c.si_fe) << ',' << format_real(c.alpha)
            << ',' << format_real(c.integrity) << ',' << format_real(c.interpretability_score) << ','
            << format_real(c.integrity_score) << ',' << to_string(c.chosen) << '\n';
    }
}

void write_scatter_csv(std::ostream& out, const std::vector<RandomCase>& cases) {
    out << "interpretability_score,integrity_score,class\n";
    for (const auto& c : cases) {
        out << format_real(c.interpretability_score) << ',' << format_real(c.integrity_score) << ','
            << to_string(c.chosen) << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "target_resolution,m_fs,achieved_fs,m_fe,achieved_fe,delta\n";
    for (const auto& r : rows) {
        out << format_real(r.target) << ',' << r.m_fs << ',' << format_real(r.achieved_fs) << ',' << r.m_fe << ','
            << format_real(r.achieved_fe) << ',' << (r.delta ? format_real(*r.delta) : std::string()) << '\n';
    }
}

}  // namespace dimred
