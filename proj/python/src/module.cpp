#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "dimred/dataset.hpp"
#include "dimred/decision.hpp"
#include "dimred/error.hpp"
#include "dimred/figures.hpp"
#include "dimred/frsd.hpp"
#include "dimred/kmeans.hpp"
#include "dimred/pca.hpp"
#include "dimred/report_io.hpp"
#include "dimred/validation.hpp"

namespace py = pybind11;
using namespace dimred;

namespace {

std::vector<std::pair<std::string, double>> weight_pairs(const FeatureWeights& w) {
    std::vector<std::pair<std::string, double>> out;
    out.reserve(w.size());
    for (const auto& e : w.entries()) out.emplace_back(e.name, e.weight);
    return out;
}

Dataset parse_csv_text(const std::string& text, const std::string& source_name) {
    std::istringstream in(text);
    return parse_csv(in, source_name);
}

std::string dataset_to_csv(const Dataset& data) {
    std::ostringstream out;
    write_csv(out, data);
    return out.str();
}

DecisionConfig make_config(double interpretability, double integrity, double target_resolution, int k_min, int k_max,
                           std::uint64_t seed, int restarts, unsigned threads) {
    DecisionConfig c;
    c.interpretability_oriented = interpretability;
    c.integrity_oriented = integrity;
    c.target_resolution = target_resolution;
    c.k_min = k_min;
    c.k_max = k_max;
    c.seed = seed;
    c.restarts = restarts;
    c.threads = threads;
    c.validate();
    return c;
}

}  // namespace

PYBIND11_MODULE(_dimred, m) {
    m.doc() = "Feature selection vs feature extraction decision pipeline.";

    auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<IngestionError>(m, "IngestionError", error);
    py::register_exception<SchemaError>(m, "SchemaError", error);
    py::register_exception<ParameterError>(m, "ParameterError", error);
    py::register_exception<MetricError>(m, "MetricError", error);
    py::register_exception<IoError>(m, "IoError", error);

    py::enum_<Method>(m, "Method")
        .value("SELECTION", Method::Selection)
        .value("EXTRACTION", Method::Extraction);

    py::class_<Dataset>(m, "Dataset")
        .def(py::init<std::vector<std::string>, std::vector<std::string>, Matrix>(), py::arg("ids"),
             py::arg("feature_names"), py::arg("values"))
        .def_property_readonly("ids", &Dataset::ids)
        .def_property_readonly("feature_names", &Dataset::feature_names)
        .def_property_readonly("values", &Dataset::values)
        .def_property_readonly("n_samples", &Dataset::n_samples)
        .def_property_readonly("n_features", &Dataset::n_features)
        .def("select_columns", &Dataset::select_columns, py::arg("columns"))
        .def("to_csv", &dataset_to_csv);

    m.def("load_csv", [](const std::string& path) { return load_csv(path); }, py::arg("path"));
    m.def("parse_csv", &parse_csv_text, py::arg("text"), py::arg("source_name") = "<string>");
    m.def(
        "minmax_normalize",
        [](const Dataset& data) {
            auto n = minmax_normalize(data);
            return py::make_tuple(n.data, n.warnings);
        },
        py::arg("data"), "Returns (normalized dataset, warnings).");

    py::class_<FeatureWeights>(m, "FeatureWeights")
        .def_property_readonly("names", [](const FeatureWeights& w) { return w.top_names(w.size()); })
        .def_property_readonly("weights",
                               [](const FeatureWeights& w) {
                                   std::vector<double> out;
                                   for (const auto& e : w.entries()) out.push_back(e.weight);
                                   return out;
                               })
        .def_property_readonly("indices", [](const FeatureWeights& w) { return w.top_indices(w.size()); })
        .def_property_readonly("has_negative", &FeatureWeights::has_negative)
        .def("items", &weight_pairs)
        .def("__len__", &FeatureWeights::size);

    py::class_<ClusteringResult>(m, "ClusteringResult")
        .def_readonly("labels", &ClusteringResult::labels)
        .def_readonly("centroids", &ClusteringResult::centroids)
        .def_readonly("inertia", &ClusteringResult::inertia)
        .def_readonly("sample_silhouettes", &ClusteringResult::sample_silhouettes)
        .def_readonly("mean_silhouette", &ClusteringResult::mean_silhouette)
        .def_readonly("k", &ClusteringResult::k)
        .def_readonly("iterations", &ClusteringResult::iterations);

    m.def(
        "kmeans_fit",
        [](const Matrix& data, int k, std::uint64_t seed, int restarts, int max_iter, double tol) {
            return kmeans_fit(data, k, seed, KMeansOptions{restarts, max_iter, tol});
        },
        py::arg("data"), py::arg("k"), py::arg("seed") = 42, py::arg("restarts") = 10, py::arg("max_iter") = 300,
        py::arg("tol") = 1e-4);
    m.def(
        "silhouette",
        [](const Matrix& data, const std::vector<int>& labels) {
            auto s = silhouette(data, labels);
            return py::make_tuple(s.samples, s.mean);
        },
        py::arg("data"), py::arg("labels"), "Returns (per-sample values, mean).");

    py::class_<SubsetScore>(m, "SubsetScore")
        .def_readonly("subset", &SubsetScore::subset)
        .def_readonly("k", &SubsetScore::k)
        .def_readonly("si", &SubsetScore::si);

    m.def("enumerate_subsets", &enumerate_subsets, py::arg("n_features"));
    m.def(
        "frsd_rank",
        [](const Dataset& data, int k_min, int k_max, std::uint64_t seed, int restarts, unsigned threads) {
            FrsdOptions options;
            options.kmeans.restarts = restarts;
            options.threads = threads;
            auto r = frsd_rank(data, k_min, k_max, seed, options);
            return py::make_tuple(r.weights, r.scores);
        },
        py::arg("data"), py::arg("k_min") = 3, py::arg("k_max") = 10, py::arg("seed") = 42, py::arg("restarts") = 10,
        py::arg("threads") = 0, "Returns (weights, subset scores).");

    py::class_<PcaModel>(m, "PcaModel")
        .def_readonly("mean", &PcaModel::mean)
        .def_readonly("components", &PcaModel::components)
        .def_readonly("explained_variance", &PcaModel::explained_variance)
        .def_readonly("explained_variance_ratio", &PcaModel::explained_variance_ratio);

    m.def("pca_fit", &pca_fit, py::arg("data"));
    m.def("pca_importance", &pca_importance, py::arg("model"));
    m.def("pca_project", &pca_project, py::arg("model"), py::arg("data"), py::arg("m"));
    m.def(
        "jacobi_eigen",
        [](const Matrix& a) {
            auto e = jacobi_eigen(a);
            return py::make_tuple(e.values, e.vectors);
        },
        py::arg("symmetric"), "Returns (eigenvalues descending, eigenvectors as columns).");

    py::class_<DecisionConfig>(m, "DecisionConfig")
        .def(py::init(&make_config), py::arg("interpretability_oriented") = 0.5, py::arg("integrity_oriented") = 0.5,
             py::arg("target_resolution") = 0.85, py::arg("k_min") = 3, py::arg("k_max") = 10, py::arg("seed") = 42,
             py::arg("restarts") = 10, py::arg("threads") = 0)
        .def_readonly("interpretability_oriented", &DecisionConfig::interpretability_oriented)
        .def_readonly("integrity_oriented", &DecisionConfig::integrity_oriented)
        .def_readonly("target_resolution", &DecisionConfig::target_resolution)
        .def_readonly("k_min", &DecisionConfig::k_min)
        .def_readonly("k_max", &DecisionConfig::k_max)
        .def_readonly("seed", &DecisionConfig::seed)
        .def_readonly("restarts", &DecisionConfig::restarts)
        .def_readonly("threads", &DecisionConfig::threads);

    py::class_<DecisionReport>(m, "DecisionReport")
        .def_readonly("frsd_weights", &DecisionReport::frsd_weights)
        .def_readonly("pca_weights", &DecisionReport::pca_weights)
        .def_readonly("best_si_fs", &DecisionReport::best_si_fs)
        .def_readonly("best_si_fe", &DecisionReport::best_si_fe)
        .def_readonly("interpretability_score", &DecisionReport::interpretability_score)
        .def_readonly("integrity_score", &DecisionReport::integrity_score)
        .def_readonly("chosen_method", &DecisionReport::chosen_method)
        .def_readonly("n_selected", &DecisionReport::n_selected)
        .def_readonly("achieved_resolution", &DecisionReport::achieved_resolution)
        .def_readonly("best_k", &DecisionReport::best_k)
        .def("to_json", &report_to_json)
        .def("__str__", &format_report_text);

    m.def("report_from_json", &report_from_json, py::arg("text"));
    m.def(
        "select_for_resolution",
        [](const FeatureWeights& w, double target) {
            auto c = select_for_resolution(w, target);
            return py::make_tuple(c.m, c.achieved);
        },
        py::arg("weights"), py::arg("target_resolution"), "Returns (count kept, achieved resolution).");
    m.def(
        "decide",
        [](double si_fs, double si_fe, const DecisionConfig& config) {
            auto d = decide(si_fs, si_fe, config);
            return py::make_tuple(d.method, d.interpretability_score, d.integrity_score);
        },
        py::arg("best_si_fs"), py::arg("best_si_fe"), py::arg("config"),
        "Returns (method, interpretability score, integrity score).");
    m.def("run_decision", &run_decision, py::arg("data"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "run_figures",
        [](const Dataset& data, const DecisionConfig& config) {
            std::optional<DecisionReport> report;
            std::string sil;
            std::vector<std::string> radars;
            {
                py::gil_scoped_release release;
                auto result = run_pipeline(data, config);
                const auto& branch = result.chosen();
                sil = silhouette_svg(branch.best.clustering);
                if (branch.reduced.cols() >= 3) {
                    for (int c = 0; c < branch.best.best_k; ++c)
                        radars.push_back(stacked_radar_svg(
                            make_radar_series(branch.reduced, branch.best.clustering.labels, branch.axis_labels, c)));
                }
                report = result.report;
            }
            return py::make_tuple(*report, sil, radars);
        },
        py::arg("data"), py::arg("config"),
        "Returns (report, silhouette SVG, one radar SVG per cluster; empty if fewer than 3 axes).");

    py::class_<RandomCase>(m, "RandomCase")
        .def_readonly("si_fs", &RandomCase::si_fs)
        .def_readonly("si_fe", &RandomCase::si_fe)
        .def_readonly("alpha", &RandomCase::alpha)
        .def_readonly("interpretability_score", &RandomCase::interpretability_score)
        .def_readonly("integrity_score", &RandomCase::integrity_score)
        .def_readonly("chosen", &RandomCase::chosen);

    m.def("generate_cases", &generate_cases, py::arg("n"), py::arg("seed") = 7);
    m.def("count_misclassified", &count_misclassified, py::arg("cases"));
    m.def("reference_frsd_weights", &reference_frsd_weights);
    m.def("reference_pca_weights", &reference_pca_weights);
}
