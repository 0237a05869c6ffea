#include "dimred/figures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "dimred/dataset.hpp"
#include "dimred/error.hpp"
#include "dimred/format.hpp"

namespace dimred {

namespace {

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};
constexpr const char* kFillOpacity = "0.35";

const char* color_for(int cluster_id) {
    return kPalette[static_cast<std::size_t>(cluster_id) % kPalette.size()];
}

std::string num(double v) { return format_fixed(v, 2); }

std::string xml_escape(const std::string& text) {
    std::string out;
    for (const char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

void open_svg(std::ostringstream& svg) {
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\" font-family=\"sans-serif\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";
}

void write_file(const std::string& content, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

std::string cluster_name(int cluster_id) {
    if (cluster_id >= 0 && cluster_id < 26) return std::string(1, static_cast<char>('A' + cluster_id));
    return std::to_string(cluster_id + 1);
}

std::string silhouette_svg(const ClusteringResult& result) {
    const auto n = result.sample_silhouettes.size();
    if (n == 0 || result.labels.size() != n) {
        throw ParameterError("clustering result has no silhouettes or mismatched labels");
    }
    const int k = std::max(result.k, *std::max_element(result.labels.begin(), result.labels.end()) + 1);

    // plot area
    constexpr double left = 80.0, right = 760.0, top = 50.0, bottom = 540.0;
    auto x_of = [&](double s) { return left + (std::clamp(s, -1.0, 1.0) + 1.0) / 2.0 * (right - left); };

    std::vector<std::vector<double>> groups(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < n; ++i) groups[static_cast<std::size_t>(result.labels[i])].push_back(result.sample_silhouettes[i]);
    for (auto& g : groups) std::sort(g.begin(), g.end(), std::greater<>());

    constexpr double gap_slots = 2.0;
    const double slots = static_cast<double>(n) + gap_slots * static_cast<double>(k - 1);
    const double bar_h = (bottom - top) / slots;

    std::ostringstream svg;
    open_svg(svg);
    svg << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">Silhouette (k=" << result.k
        << ", mean=" << format_fixed(result.mean_silhouette, 4) << ")</text>\n";

    double y = top;
    for (int c = 0; c < k; ++c) {
        const auto& g = groups[static_cast<std::size_t>(c)];
        const double band_top = y;
        svg << "<g fill=\"" << color_for(c) << "\">\n";
        for (const double s : g) {
            const double x0 = x_of(0.0);
            const double xs = x_of(s);
            svg << "<rect x=\"" << num(std::min(x0, xs)) << "\" y=\"" << num(y) << "\" width=\""
                << num(std::abs(xs - x0)) << "\" height=\"" << num(bar_h) << "\"/>\n";
            y += bar_h;
        }
        svg << "</g>\n";
        if (!g.empty()) {
            svg << "<text x=\"" << num(left - 12.0) << "\" y=\"" << num((band_top + y) / 2.0 + 5.0)
                << "\" text-anchor=\"end\" font-size=\"14\">" << cluster_name(c) << "</text>\n";
        }
        y += gap_slots * bar_h;
    }

    svg << "<line x1=\"" << num(left) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(right) << "\" y2=\""
        << num(bottom) << "\" stroke=\"#000000\"/>\n";
    svg << "<line x1=\"" << num(x_of(0.0)) << "\" y1=\"" << num(top) << "\" x2=\"" << num(x_of(0.0))
        << "\" y2=\"" << num(bottom) << "\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n";
    for (int t = -4; t <= 4; ++t) {
        const double v = t / 4.0;
        const double x = x_of(v);
        svg << "<line x1=\"" << num(x) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(x) << "\" y2=\""
            << num(bottom + 5.0) << "\" stroke=\"#000000\"/>\n";
        svg << "<text x=\"" << num(x) << "\" y=\"" << num(bottom + 20.0)
            << "\" text-anchor=\"middle\" font-size=\"11\">" << format_fixed(v, 2) << "</text>\n";
    }
    svg << "<text x=\"400\" y=\"585\" text-anchor=\"middle\" font-size=\"13\">silhouette value</text>\n";

    const double xm = x_of(result.mean_silhouette);
    svg << "<line x1=\"" << num(xm) << "\" y1=\"" << num(top) << "\" x2=\"" << num(xm) << "\" y2=\"" << num(bottom)
        << "\" stroke=\"#ff0000\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

void render_silhouette_plot(const ClusteringResult& result, const std::filesystem::path& path) {
    write_file(silhouette_svg(result), path);
}

std::string stacked_radar_svg(const RadarSeries& series) {
    const auto m = series.axis_labels.size();
    if (m < 3) throw ParameterError("a radar chart needs at least 3 axes, got " + std::to_string(m));
    if (series.rows.empty()) throw ParameterError("a radar chart needs at least one row");
    for (const auto& row : series.rows) {
        if (row.size() != m) throw ParameterError("radar row length does not match the axis count");
        for (const double v : row) {
            if (!(v >= 0.0 && v <= 1.0)) throw ParameterError("radar values must lie in [0, 1]");
        }
    }

    constexpr double cx = 400.0, cy = 315.0, radius = 220.0;
    auto point = [&](std::size_t axis, double r) {
        const double angle = -std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * static_cast<double>(axis) / static_cast<double>(m);
        return std::pair{cx + r * radius * std::cos(angle), cy + r * radius * std::sin(angle)};
    };
    auto polygon_points = [&](const std::vector<double>& values) {
        std::string pts;
        for (std::size_t a = 0; a < m; ++a) {
            const auto [x, y] = point(a, values[a]);
            if (a) pts += ' ';
            pts += num(x) + "," + num(y);
        }
        return pts;
    };

    std::ostringstream svg;
    open_svg(svg);
    svg << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">Cluster "
        << cluster_name(series.cluster_id) << " (" << series.rows.size() << " samples)</text>\n";

    svg << "<g fill=\"none\" stroke=\"#bbbbbb\">\n";
    for (int ring = 1; ring <= 4; ++ring) {
        svg << "<polygon points=\"" << polygon_points(std::vector<double>(m, ring / 4.0)) << "\"/>\n";
    }
    for (std::size_t a = 0; a < m; ++a) {
        const auto [x, y] = point(a, 1.0);
        svg << "<line x1=\"" << num(cx) << "\" y1=\"" << num(cy) << "\" x2=\"" << num(x) << "\" y2=\"" << num(y)
            << "\"/>\n";
    }
    svg << "</g>\n";

    const char* color = color_for(series.cluster_id);
    svg << "<g fill=\"" << color << "\" fill-opacity=\"" << kFillOpacity << "\" stroke=\"" << color
        << "\" stroke-width=\"0.5\">\n";
    for (const auto& row : series.rows) {
        svg << "<polygon points=\"" << polygon_points(row) << "\"/>\n";
    }
    svg << "</g>\n";

    for (std::size_t a = 0; a < m; ++a) {
        const auto [x, y] = point(a, 1.0 + 18.0 / radius);
        const double dx = x - cx;
        const char* anchor = std::abs(dx) < 1.0 ? "middle" : (dx > 0 ? "start" : "end");
        svg << "<text x=\"" << num(x) << "\" y=\"" << num(y + 4.0) << "\" text-anchor=\"" << anchor
            << "\" font-size=\"12\">" << xml_escape(series.axis_labels[a]) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void render_stacked_radar(const RadarSeries& series, const std::filesystem::path& path) {
    write_file(stacked_radar_svg(series), path);
}

RadarSeries make_radar_series(const Matrix& reduced, const std::vector<int>& labels,
                              std::vector<std::string> axis_labels, int cluster_id) {
    if (static_cast<Eigen::Index>(labels.size()) != reduced.rows()) {
        throw ParameterError("label count does not match row count");
    }
    if (static_cast<Eigen::Index>(axis_labels.size()) != reduced.cols()) {
        throw ParameterError("axis label count does not match column count");
    }
    const Matrix scaled = minmax_columns(reduced);
    RadarSeries series{std::move(axis_labels), {}, cluster_id};
    for (Eigen::Index i = 0; i < scaled.rows(); ++i) {
        if (labels[static_cast<std::size_t>(i)] != cluster_id) continue;
        series.rows.emplace_back(scaled.row(i).begin(), scaled.row(i).end());
    }
    return series;
}

}  // namespace dimred
