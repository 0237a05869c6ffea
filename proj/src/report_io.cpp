#include "dimred/report_io.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "dimred/error.hpp"
#include "dimred/format.hpp"

namespace dimred {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json weights_to_json(const FeatureWeights& weights) {
    ordered_json obj = ordered_json::object();
    for (const auto& e : weights.entries()) obj[e.name] = e.weight;
    return obj;
}

FeatureWeights weights_from_json(const ordered_json& obj, WeightSource source) {
    std::vector<std::string> names;
    std::vector<double> values;
    for (const auto& [name, value] : obj.items()) {
        names.push_back(name);
        values.push_back(value.get<double>());
    }
    return FeatureWeights(std::move(names), values, source);
}

}  // namespace

std::string report_to_json(const DecisionReport& report) {
    ordered_json doc;
    doc["frsd_weights"] = weights_to_json(report.frsd_weights);
    doc["pca_weights"] = weights_to_json(report.pca_weights);
    doc["best_si_fs"] = report.best_si_fs;
    doc["best_si_fe"] = report.best_si_fe;
    doc["interpretability_score"] = report.interpretability_score;
    doc["integrity_score"] = report.integrity_score;
    doc["chosen_method"] = std::string(to_string(report.chosen_method));
    doc["n_selected"] = report.n_selected;
    doc["achieved_resolution"] = report.achieved_resolution;
    doc["best_k"] = report.best_k;
    return doc.dump(2) + "\n";
}

DecisionReport report_from_json(const std::string& text) {
    try {
        const auto doc = ordered_json::parse(text);
        DecisionReport r{weights_from_json(doc.at("frsd_weights"), WeightSource::FRSD),
                         weights_from_json(doc.at("pca_weights"), WeightSource::PCA)};
        r.best_si_fs = doc.at("best_si_fs").get<double>();
        r.best_si_fe = doc.at("best_si_fe").get<double>();
        r.interpretability_score = doc.at("interpretability_score").get<double>();
        r.integrity_score = doc.at("integrity_score").get<double>();
        r.chosen_method = method_from_string(doc.at("chosen_method").get<std::string>());
        r.n_selected = doc.at("n_selected").get<int>();
        r.achieved_resolution = doc.at("achieved_resolution").get<double>();
        r.best_k = doc.at("best_k").get<int>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed report: ") + e.what());
    }
}

void write_weights_csv(std::ostream& out, const FeatureWeights& weights) {
    out << "rank,feature,weight\n";
    int rank = 1;
    for (const auto& e : weights.entries()) {
        out << rank++ << ',' << csv_field(e.name) << ',' << format_real(e.weight) << '\n';
    }
}

void write_subset_scores_csv(std::ostream& out, const std::vector<SubsetScore>& scores) {
    out << "subset,k,si\n";
    for (const auto& s : scores) {
        std::string cell;
        for (std::size_t i = 0; i < s.subset.size(); ++i) {
            if (i) cell += ',';
            cell += std::to_string(s.subset[i] + 1);
        }
        out << csv_field(cell) << ',' << s.k << ',' << format_real(s.si) << '\n';
    }
}

std::string format_report_text(const DecisionReport& report) {
    std::ostringstream out;
    auto weights_line = [&](const FeatureWeights& w) {
        std::string line;
        for (const auto& e : w.entries()) {
            if (!line.empty()) line += ", ";
            line += e.name + " " + format_fixed(e.weight, 4);
        }
        return line;
    };
    auto row = [&](const char* item, const std::string& label, const std::string& value) {
        out << std::setw(3) << item << ' ' << std::left << std::setw(30) << label << std::right << ": " << value
            << '\n';
    };
    const bool selection = report.chosen_method == Method::Selection;
    row("1.", "FRSD weights", weights_line(report.frsd_weights));
    row("2.", "PCA weights", weights_line(report.pca_weights));
    row("3.", "Best FS silhouette index", format_fixed(report.best_si_fs, 4));
    row("4.", "Best FE silhouette index", format_fixed(report.best_si_fe, 4));
    row("5.", "Interpretability score", format_fixed(report.interpretability_score, 4));
    row("6.", "Integrity score", format_fixed(report.integrity_score, 4));
    row("7.", "Chosen method", std::string(to_string(report.chosen_method)));
    if (selection) {
        row("8.", "Number of selected features", std::to_string(report.n_selected));
    } else {
        row("9.", "Number of PCs", std::to_string(report.n_selected));
    }
    row("", "Resolution", format_fixed(report.achieved_resolution * 100.0, 1) + "%");
    row("10.", "Best number of clusters (k)", std::to_string(report.best_k));
    return out.str();
}

}  // namespace dimred
