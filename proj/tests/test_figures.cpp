#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

#include "dimred/error.hpp"
#include "dimred/figures.hpp"

using namespace dimred;

namespace {

ClusteringResult small_result() {
    ClusteringResult r;
    r.k = 3;
    r.labels = {0, 1, 2, 0, 1, 2, 0};
    r.sample_silhouettes = {0.5, 0.2, -0.3, 0.8, 0.1, 0.4, 0.0};
    double sum = 0.0;
    for (double s : r.sample_silhouettes) sum += s;
    r.mean_silhouette = sum / 7.0;
    return r;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Every x/y-like attribute and every point pair lies in [0, 800] x [0, 600].
void check_inside_viewbox(const std::string& svg) {
    const std::regex attr(R"re(\b(x|x1|x2|cx)="(-?[0-9.]+)"|\b(y|y1|y2|cy)="(-?[0-9.]+)")re");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), attr); it != std::sregex_iterator(); ++it) {
        if ((*it)[2].matched) {
            const double v = std::stod((*it)[2]);
            CHECK(v >= 0.0);
            CHECK(v <= 800.0);
        } else {
            const double v = std::stod((*it)[4]);
            CHECK(v >= 0.0);
            CHECK(v <= 600.0);
        }
    }
    const std::regex pair(R"re((-?[0-9.]+),(-?[0-9.]+))re");
    const std::regex points(R"re(points="([^"]*)")re");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), points); it != std::sregex_iterator(); ++it) {
        const std::string pts = (*it)[1];
        for (auto p = std::sregex_iterator(pts.begin(), pts.end(), pair); p != std::sregex_iterator(); ++p) {
            CHECK(std::stod((*p)[1]) >= 0.0);
            CHECK(std::stod((*p)[1]) <= 800.0);
            CHECK(std::stod((*p)[2]) >= 0.0);
            CHECK(std::stod((*p)[2]) <= 600.0);
        }
    }
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("silhouette plot structure") {
    const auto svg = silhouette_svg(small_result());
    CHECK(svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);
    CHECK(count(svg, "<g fill=") == 3);
    CHECK(count(svg, "stroke-dasharray") == 1);
    // 7 bars + background
    CHECK(count(svg, "<rect") == 8);
    // the negative bar (-0.3) ends at the zero line (x = 420) and starts left of it
    const double zero_x = 420.0;
    const double neg_x = zero_x - 0.3 / 2.0 * 680.0;
    std::ostringstream expect;
    expect << "x=\"" << std::fixed << std::setprecision(2) << neg_x << "\"";
    CHECK(svg.find(expect.str()) != std::string::npos);
    check_inside_viewbox(svg);
    CHECK(svg == silhouette_svg(small_result()));
}

TEST_CASE("silhouette plot of singletons") {
    ClusteringResult r;
    r.k = 3;
    r.labels = {0, 1, 2};
    r.sample_silhouettes = {0, 0, 0};
    const auto svg = silhouette_svg(r);
    CHECK(count(svg, "width=\"0.00\"") == 3);
    CHECK(svg.find("x1=\"420.00\" y1=\"50.00\" x2=\"420.00\" y2=\"540.00\" stroke=\"#ff0000\"") != std::string::npos);
}

TEST_CASE("radar: full-value row is a regular polygon at full radius") {
    RadarSeries s{{"a", "b", "c", "d", "e", "f", "g", "h"}, {std::vector<double>(8, 1.0)}, 0};
    const auto svg = stacked_radar_svg(s);
    // the data polygon coincides with the outer ring
    const std::string outer = "<polygon points=\"400.00,95.00 ";
    CHECK(count(svg, outer) == 2);
    check_inside_viewbox(svg);
    for (const auto& label : s.axis_labels) CHECK(svg.find(">" + label + "</text>") != std::string::npos);
}

TEST_CASE("radar: identical rows give coincident polygons") {
    RadarSeries s{{"x", "y", "z"}, {{0.2, 0.5, 0.9}, {0.2, 0.5, 0.9}}, 1};
    const auto svg = stacked_radar_svg(s);
    const auto first = svg.find("fill-opacity=\"0.35\"");
    REQUIRE(first != std::string::npos);
    const auto body = svg.substr(first);
    const auto p1 = body.find("<polygon");
    const auto p2 = body.find("<polygon", p1 + 1);
    const auto line = [&](std::size_t pos) { return body.substr(pos, body.find('\n', pos) - pos); };
    CHECK(line(p1) == line(p2));
}

TEST_CASE("radar errors") {
    CHECK_THROWS_AS(stacked_radar_svg(RadarSeries{{"a", "b"}, {{0.1, 0.2}}, 0}), ParameterError);
    CHECK_THROWS_AS(stacked_radar_svg(RadarSeries{{"a", "b", "c"}, {}, 0}), ParameterError);
    CHECK_THROWS_AS(stacked_radar_svg(RadarSeries{{"a", "b", "c"}, {{0.1, 1.2, 0.0}}, 0}), ParameterError);
    CHECK_THROWS_AS(render_stacked_radar(RadarSeries{{"a", "b", "c"}, {{0.1, 0.2, 0.3}}, 0}, "/nonexistent/dir/r.svg"),
                    IoError);
    CHECK_THROWS_AS(render_silhouette_plot(small_result(), "/nonexistent/dir/s.svg"), IoError);
}

TEST_CASE("radar series rescales columns over all samples") {
    Matrix reduced(4, 3);
    reduced << 0, 10, -1, 5, 20, 0, 10, 30, 1, 2, 10, 1;
    const auto s = make_radar_series(reduced, {0, 1, 1, 0}, {"p", "q", "r"}, 1);
    REQUIRE(s.rows.size() == 2);
    CHECK(s.rows[0] == std::vector<double>{0.5, 0.5, 0.5});
    CHECK(s.rows[1] == std::vector<double>{1.0, 1.0, 1.0});
}

// Set DIMRED_UPDATE_GOLDEN=1 to rewrite the expected files after an intended change.
TEST_CASE("golden files") {
    const std::filesystem::path dir = DIMRED_GOLDEN_DIR;
    const bool update = std::getenv("DIMRED_UPDATE_GOLDEN") != nullptr;
    RadarSeries s{{"Income", "Employment", "Crime", "Health & Care"}, {{0.1, 0.8, 0.5, 0.3}, {1.0, 0.0, 0.25, 0.75}}, 2};
    const std::pair<std::string, std::string> cases[] = {
        {"silhouette_small.svg", silhouette_svg(small_result())},
        {"radar_small.svg", stacked_radar_svg(s)},
    };
    for (const auto& [name, svg] : cases) {
        if (update) std::ofstream(dir / name, std::ios::binary) << svg;
        CHECK_MESSAGE(svg == read_file(dir / name), name);
    }
}

TEST_CASE("cluster names") {
    CHECK(cluster_name(0) == "A");
    CHECK(cluster_name(25) == "Z");
    CHECK(cluster_name(26) == "27");
}
