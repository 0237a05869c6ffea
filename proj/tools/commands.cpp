#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "dimred/dataset.hpp"
#include "dimred/decision.hpp"
#include "dimred/error.hpp"
#include "dimred/figures.hpp"
#include "dimred/format.hpp"
#include "dimred/frsd.hpp"
#include "dimred/pca.hpp"
#include "dimred/report_io.hpp"
#include "dimred/synthetic.hpp"
#include "dimred/validation.hpp"

namespace dimred::cli {

namespace fs = std::filesystem;

namespace {

/// Flag-level problem detected after parsing; maps to exit code 2.
struct UsageError : Error {
    using Error::Error;
};

struct CommonOptions {
    std::string input;
    std::string out_dir;
    int k_min = 3;
    int k_max = 10;
    std::uint64_t seed = 42;
    int restarts = 10;
    unsigned threads = 0;
    bool scores = false;
};

struct RunOptions {
    CommonOptions common;
    std::optional<double> interpretability;
    std::optional<double> integrity;
    double target_resolution = 0.85;
    bool no_figures = false;
    std::string case_name = "run";
};

struct ValidateOptions {
    CommonOptions common;
    int cases = 250;
};

struct SynthOptions {
    std::string kind = "london";
    int rows = 630;
    std::uint64_t seed = 42;
    std::string output;
};

void add_k_flags(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--k-min", o.k_min, "Smallest number of clusters")->capture_default_str();
    cmd->add_option("--k-max", o.k_max, "Largest number of clusters")->capture_default_str();
    cmd->add_option("--seed", o.seed, "Base random seed")->capture_default_str();
    cmd->add_option("--restarts", o.restarts, "k-means restarts per fit")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--threads", o.threads, "Workers for the FRSD sweep (0: DIMRED_THREADS or all cores)");
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

template <typename Writer>
void write_with(const fs::path& path, Writer&& writer) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    writer(out);
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory '" + dir.string() + "'");
}

void check_k_range(const CommonOptions& o) {
    if (o.k_min < 2) throw UsageError("--k-min must be at least 2");
    if (o.k_max < o.k_min) throw UsageError("--k-max must not be below --k-min");
}

DecisionConfig make_config(const RunOptions& o) {
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    double interp = 0.5;
    double integ = 0.5;
    if (o.interpretability && o.integrity) {
        interp = *o.interpretability;
        integ = *o.integrity;
        if (std::abs(interp + integ - 1.0) > 1e-9) {
            throw UsageError("--interpretability and --integrity must sum to 1 (got " + std::to_string(interp) +
                             " + " + std::to_string(integ) + ")");
        }
    } else if (o.interpretability) {
        interp = *o.interpretability;
        integ = 1.0 - interp;
    } else if (o.integrity) {
        integ = *o.integrity;
        interp = 1.0 - integ;
    }
    if (!in_unit(interp) || !in_unit(integ)) throw UsageError("preferences must lie in [0, 1]");
    if (!(o.target_resolution > 0.0 && o.target_resolution <= 1.0)) {
        throw UsageError("--target-resolution must lie in (0, 1]");
    }
    check_k_range(o.common);

    DecisionConfig config;
    config.interpretability_oriented = interp;
    config.integrity_oriented = integ;
    config.target_resolution = o.target_resolution;
    config.k_min = o.common.k_min;
    config.k_max = o.common.k_max;
    config.seed = o.common.seed;
    config.restarts = o.common.restarts;
    config.threads = o.common.threads;
    return config;
}

int cmd_run(const RunOptions& o, std::ostream& out, std::ostream& err) {
    const auto config = make_config(o);
    const Dataset data = load_csv(o.common.input);
    const fs::path dir = o.common.out_dir;
    ensure_dir(dir);

    const auto result = run_pipeline(data, config);
    const auto& report = result.report;

    write_text_file(dir / "report.json", report_to_json(report));
    write_with(dir / "frsd_weights.csv", [&](std::ostream& s) { write_weights_csv(s, report.frsd_weights); });
    write_with(dir / "pca_weights.csv", [&](std::ostream& s) { write_weights_csv(s, report.pca_weights); });
    if (o.common.scores) {
        write_with(dir / "subset_scores.csv", [&](std::ostream& s) { write_subset_scores_csv(s, result.subset_scores); });
    }

    if (!o.no_figures) {
        const auto& branch = result.chosen();
        const auto& clustering = branch.best.clustering;
        render_silhouette_plot(clustering, dir / ("silhouette_" + o.case_name + ".svg"));
        if (branch.axis_labels.size() >= 3) {
            for (int c = 0; c < clustering.k; ++c) {
                const auto series = make_radar_series(branch.reduced, clustering.labels, branch.axis_labels, c);
                render_stacked_radar(series, dir / ("radar_" + o.case_name + "_" + cluster_name(c) + ".svg"));
            }
        } else {
            err << "note: radar charts skipped (" << branch.axis_labels.size() << " axes, need at least 3)\n";
        }
    }

    for (const auto& w : result.normalized.warnings) err << "warning: " << w << '\n';
    out << "subsets evaluated: " << result.subset_scores.size() / static_cast<std::size_t>(config.k_max - config.k_min + 1)
        << " x " << (config.k_max - config.k_min + 1) << " k values\n";
    out << format_report_text(report);
    return kExitOk;
}

int cmd_rank(const CommonOptions& o, std::ostream& out, std::ostream&) {
    check_k_range(o);
    const Dataset data = load_csv(o.input);
    const fs::path dir = o.out_dir;
    ensure_dir(dir);

    const auto norm = minmax_normalize(data);
    FrsdOptions options;
    options.kmeans.restarts = o.restarts;
    options.threads = o.threads;
    const auto frsd = frsd_rank(norm.data, o.k_min, o.k_max, o.seed, options);
    const auto pca_weights = pca_importance(pca_fit(norm.data.values()));

    write_with(dir / "frsd_weights.csv", [&](std::ostream& s) { write_weights_csv(s, frsd.weights); });
    write_with(dir / "pca_weights.csv", [&](std::ostream& s) { write_weights_csv(s, pca_weights); });
    if (o.scores) {
        write_with(dir / "subset_scores.csv", [&](std::ostream& s) { write_subset_scores_csv(s, frsd.scores); });
    }

    for (const auto* w : {&frsd.weights, &pca_weights}) {
        out << to_string(w->source()) << " weights\n";
        int rank = 1;
        for (const auto& e : w->entries()) {
            out << "  " << rank++ << ". " << e.name << "  " << format_fixed(e.weight, 4) << '\n';
        }
    }
    return kExitOk;
}

int cmd_validate(const ValidateOptions& o, std::ostream& out, std::ostream& err) {
    if (o.cases < 1) throw UsageError("--cases must be at least 1");
    const fs::path dir = o.common.out_dir;

    std::optional<FeatureWeights> fs_weights;
    std::optional<FeatureWeights> fe_weights;
    if (!o.common.input.empty()) {
        check_k_range(o.common);
        const auto norm = minmax_normalize(load_csv(o.common.input));
        FrsdOptions options;
        options.kmeans.restarts = o.common.restarts;
        options.threads = o.common.threads;
        fs_weights = frsd_rank(norm.data, o.common.k_min, o.common.k_max, o.common.seed, options).weights;
        fe_weights = pca_importance(pca_fit(norm.data.values()));
    } else {
        fs_weights = reference_frsd_weights();
        fe_weights = reference_pca_weights();
    }

    ensure_dir(dir);
    const auto cases = generate_cases(o.cases, o.common.seed);
    const auto rows = resolution_sweep(*fs_weights, *fe_weights, default_sweep_targets());
    write_with(dir / "cases.csv", [&](std::ostream& s) { write_cases_csv(s, cases); });
    write_with(dir / "scatter.csv", [&](std::ostream& s) { write_scatter_csv(s, cases); });
    write_with(dir / "sweep.csv", [&](std::ostream& s) { write_sweep_csv(s, rows); });

    const int wrong = count_misclassified(cases);
    out << "misclassified: " << wrong << "/" << cases.size() << '\n';
    out << "target  m_fs  res_fs  m_fe  res_fe  delta\n";
    for (const auto& r : rows) {
        out << format_fixed(r.target, 1) << "     " << r.m_fs << "  " << format_fixed(r.achieved_fs * 100.0, 1)
            << "%  " << r.m_fe << "  " << format_fixed(r.achieved_fe * 100.0, 1) << "%  "
            << (r.delta ? format_fixed(*r.delta * 100.0, 2) + "pp" : std::string("-")) << '\n';
    }
    for (const auto& v : delta_violations(rows)) {
        err << "note: at target " << format_fixed(v.target, 1) << " extraction retains less than selection\n";
    }
    return wrong == 0 ? kExitOk : kExitFailure;
}

int cmd_synth(const SynthOptions& o, std::ostream& out) {
    Dataset data = o.kind == "blobs" ? synthetic::blobs_with_noise(o.rows / 3, 3, 2, o.seed)
                                     : synthetic::london_style(o.rows, o.seed);
    if (o.output.empty()) {
        write_csv(out, data);
    } else {
        write_with(o.output, [&](std::ostream& s) { write_csv(s, data); });
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Choose between feature selection and feature extraction before k-means clustering", "dimred"};
    app.require_subcommand(1);

    RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "Rank, decide, reduce, cluster, and write the report and figures");
    run_cmd->add_option("--input", run.common.input, "Input CSV (id column + numeric features)")->required();
    run_cmd->add_option("--out", run.common.out_dir, "Output directory")->capture_default_str();
    run.common.out_dir = "out";
    run_cmd->add_option("--interpretability", run.interpretability, "Interpretability preference in [0, 1]");
    run_cmd->add_option("--integrity", run.integrity, "Integrity preference in [0, 1]");
    run_cmd->add_option("--target-resolution", run.target_resolution, "Minimum cumulative weight to keep")
        ->capture_default_str();
    add_k_flags(run_cmd, run.common);
    run_cmd->add_flag("--scores", run.common.scores, "Also write subset_scores.csv");
    run_cmd->add_flag("--no-figures", run.no_figures, "Skip SVG output");
    run_cmd->add_option("--case", run.case_name, "Name used in figure file names")->capture_default_str();

    ValidateOptions validate;
    validate.common.seed = 7;
    validate.common.out_dir = "validation";
    auto* validate_cmd = app.add_subcommand("validate", "Random decision cases and resolution sweep");
    validate_cmd->add_option("--cases", validate.cases, "Number of random cases")->capture_default_str();
    validate_cmd->add_option("--out", validate.common.out_dir, "Output directory")->capture_default_str();
    validate_cmd->add_option("--input", validate.common.input,
                             "Dataset for the sweep weights (default: reference ward-level weights)");
    add_k_flags(validate_cmd, validate.common);

    CommonOptions rank;
    rank.out_dir = "out";
    auto* rank_cmd = app.add_subcommand("rank", "FRSD and PCA importance weights only");
    rank_cmd->add_option("--input", rank.input, "Input CSV")->required();
    rank_cmd->add_option("--out", rank.out_dir, "Output directory")->capture_default_str();
    add_k_flags(rank_cmd, rank);
    rank_cmd->add_flag("--scores", rank.scores, "Also write subset_scores.csv");

    SynthOptions synth;
    auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic dataset as CSV");
    synth_cmd->add_option("--kind", synth.kind, "london or blobs")->check(CLI::IsMember({"london", "blobs"}))->capture_default_str();
    synth_cmd->add_option("--rows", synth.rows, "Row count")->check(CLI::Range(9, 1000000))->capture_default_str();
    synth_cmd->add_option("--seed", synth.seed, "Random seed")->capture_default_str();
    synth_cmd->add_option("--output", synth.output, "Output file (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*run_cmd) return cmd_run(run, out, err);
        if (*validate_cmd) return cmd_validate(validate, out, err);
        if (*rank_cmd) return cmd_rank(rank, out, err);
        if (*synth_cmd) return cmd_synth(synth, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n";
        for (auto* cmd : {run_cmd, validate_cmd, rank_cmd, synth_cmd}) {
            if (*cmd) err << cmd->help();
        }
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace dimred::cli
