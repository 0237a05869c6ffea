#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dimred/kmeans.hpp"
#include "dimred/matrix.hpp"

namespace dimred {

/// Axes are shared by every row; each row is one sample's values in [0, 1].
struct RadarSeries {
    std::vector<std::string> axis_labels;
    std::vector<std::vector<double>> rows;
    int cluster_id = 0;
};

/// "A", "B", ... for the first 26 clusters, then the 1-based number.
std::string cluster_name(int cluster_id);

/**
 * Silhouette chart: one horizontal bar per sample on a [-1, 1] axis, grouped
 * by cluster and sorted descending within each group, plus a dashed line at
 * the mean. 800x600 viewBox.
 */
std::string silhouette_svg(const ClusteringResult& result);
void render_silhouette_plot(const ClusteringResult& result, const std::filesystem::path& path);

/// Stacked radar chart, one translucent polygon per row. Needs >= 3 axes.
std::string stacked_radar_svg(const RadarSeries& series);
void render_stacked_radar(const RadarSeries& series, const std::filesystem::path& path);

/**
 * Rows of one cluster with every column MinMax-normalized over all samples,
 * ready for a radar chart.
 */
RadarSeries make_radar_series(const Matrix& reduced, const std::vector<int>& labels,
                              std::vector<std::string> axis_labels, int cluster_id);

}  // namespace dimred
