#include "dimred/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dimred/error.hpp"
#include "dimred/rng.hpp"

namespace dimred {

namespace {

double squared_distance(const Matrix& a, Eigen::Index i, const Matrix& b, Eigen::Index j) {
    return (a.row(i) - b.row(j)).squaredNorm();
}

Eigen::Index count_distinct_rows(const Matrix& data, Eigen::Index stop_at) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(data.rows()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    auto row_less = [&](Eigen::Index x, Eigen::Index y) {
        for (Eigen::Index c = 0; c < data.cols(); ++c) {
            if (data(x, c) != data(y, c)) return data(x, c) < data(y, c);
        }
        return false;
    };
    std::sort(order.begin(), order.end(), row_less);
    Eigen::Index distinct = order.empty() ? 0 : 1;
    for (std::size_t i = 1; i < order.size() && distinct < stop_at; ++i) {
        if (row_less(order[i - 1], order[i])) ++distinct;
    }
    return distinct;
}

Matrix seed_plus_plus(const Matrix& data, int k, Rng& rng) {
    const Eigen::Index n = data.rows();
    Matrix centroids(k, data.cols());
    centroids.row(0) = data.row(static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(n))));

    std::vector<double> closest(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) closest[i] = squared_distance(data, i, centroids, 0);

    for (int c = 1; c < k; ++c) {
        const double total = std::accumulate(closest.begin(), closest.end(), 0.0);
        Eigen::Index pick = n - 1;
        if (total > 0.0) {
            double target = rng.uniform() * total;
            for (Eigen::Index i = 0; i < n; ++i) {
                target -= closest[i];
                if (target < 0.0 && closest[i] > 0.0) {
                    pick = i;
                    break;
                }
            }
            // rounding can leave target slightly positive; take the last candidate
            while (closest[pick] == 0.0 && pick > 0) --pick;
        }
        centroids.row(c) = data.row(pick);
        for (Eigen::Index i = 0; i < n; ++i) {
            closest[i] = std::min(closest[i], squared_distance(data, i, centroids, c));
        }
    }
    return centroids;
}

struct Run {
    std::vector<int> labels;
    Matrix centroids;
    double inertia = 0.0;
    int iterations = 0;
};

Run lloyd(const Matrix& data, Matrix centroids, const KMeansOptions& options) {
    const Eigen::Index n = data.rows();
    const auto k = static_cast<int>(centroids.rows());
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::vector<double> dist(static_cast<std::size_t>(n), 0.0);
    std::vector<Eigen::Index> counts(static_cast<std::size_t>(k));

    int iter = 0;
    while (iter < options.max_iter) {
        ++iter;
        std::fill(counts.begin(), counts.end(), 0);
        for (Eigen::Index i = 0; i < n; ++i) {
            int best = 0;
            double best_d = squared_distance(data, i, centroids, 0);
            for (int c = 1; c < k; ++c) {
                const double d = squared_distance(data, i, centroids, c);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            labels[i] = best;
            dist[i] = best_d;
            ++counts[best];
        }

        for (int c = 0; c < k; ++c) {
            if (counts[c] > 0) continue;
            Eigen::Index far = -1;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (counts[labels[i]] > 1 && (far < 0 || dist[i] > dist[far])) far = i;
            }
            --counts[labels[far]];
            labels[far] = c;
            dist[far] = 0.0;
            counts[c] = 1;
        }

        Matrix updated = Matrix::Zero(k, data.cols());
        for (Eigen::Index i = 0; i < n; ++i) updated.row(labels[i]) += data.row(i);
        for (int c = 0; c < k; ++c) updated.row(c) /= static_cast<double>(counts[c]);

        double shift = 0.0;
        for (int c = 0; c < k; ++c) shift = std::max(shift, (updated.row(c) - centroids.row(c)).norm());
        centroids = std::move(updated);
        if (shift < options.tol) break;
    }

    Run run;
    run.inertia = inertia(data, labels, centroids);
    run.labels = std::move(labels);
    run.centroids = std::move(centroids);
    run.iterations = iter;
    return run;
}

}  // namespace

double inertia(const Matrix& data, std::span<const int> labels, const Matrix& centroids) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < data.rows(); ++i) {
        total += squared_distance(data, i, centroids, labels[static_cast<std::size_t>(i)]);
    }
    return total;
}

ClusteringResult kmeans_fit(const Matrix& data, int k, std::uint64_t seed, const KMeansOptions& options) {
    if (k < 2) throw ParameterError("k must be at least 2, got " + std::to_string(k));
    if (k > data.rows()) {
        throw ParameterError("k = " + std::to_string(k) + " exceeds the number of samples (" +
                             std::to_string(data.rows()) + ")");
    }
    if (options.restarts < 1) throw ParameterError("restarts must be at least 1");
    if (options.max_iter < 1) throw ParameterError("max_iter must be at least 1");
    if (data.cols() < 1) throw ParameterError("data has no columns");
    if (!data.allFinite()) throw ParameterError("data contains non-finite values");
    if (count_distinct_rows(data, k) < k) {
        throw ParameterError("fewer than k = " + std::to_string(k) + " distinct points");
    }

    Run best;
    bool have_best = false;
    for (int r = 0; r < options.restarts; ++r) {
        Rng rng(hash_combine64(seed, static_cast<std::uint64_t>(r)));
        Run run = lloyd(data, seed_plus_plus(data, k, rng), options);
        if (!have_best || run.inertia < best.inertia) {
            best = std::move(run);
            have_best = true;
        }
    }

    ClusteringResult result;
    auto sil = silhouette(data, best.labels);
    result.labels = std::move(best.labels);
    result.centroids = std::move(best.centroids);
    result.inertia = best.inertia;
    result.sample_silhouettes = std::move(sil.samples);
    result.mean_silhouette = sil.mean;
    result.k = k;
    result.seed = seed;
    result.iterations = best.iterations;
    return result;
}

SilhouetteResult silhouette(const Matrix& data, std::span<const int> labels) {
    const Eigen::Index n = data.rows();
    if (static_cast<Eigen::Index>(labels.size()) != n) {
        throw ParameterError("label count " + std::to_string(labels.size()) + " does not match sample count " +
                             std::to_string(n));
    }
    int max_label = -1;
    for (const int l : labels) {
        if (l < 0) throw ParameterError("negative cluster label " + std::to_string(l));
        max_label = std::max(max_label, l);
    }
    const auto n_ids = static_cast<std::size_t>(max_label + 1);
    std::vector<Eigen::Index> counts(n_ids, 0);
    for (const int l : labels) ++counts[static_cast<std::size_t>(l)];
    const auto present = std::count_if(counts.begin(), counts.end(), [](Eigen::Index c) { return c > 0; });
    if (present < 2) {
        throw MetricError("silhouette is undefined for fewer than 2 clusters");
    }

    // sums(i, c) = total distance from sample i to all samples in cluster c
    Matrix sums = Matrix::Zero(n, static_cast<Eigen::Index>(n_ids));
    for (Eigen::Index i = 0; i < n; ++i) {
        const int li = labels[static_cast<std::size_t>(i)];
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double d = (data.row(i) - data.row(j)).norm();
            sums(i, labels[static_cast<std::size_t>(j)]) += d;
            sums(j, li) += d;
        }
    }

    SilhouetteResult out;
    out.samples.resize(static_cast<std::size_t>(n));
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto own = static_cast<std::size_t>(labels[static_cast<std::size_t>(i)]);
        double s = 0.0;
        if (counts[own] > 1) {
            const double a = sums(i, static_cast<Eigen::Index>(own)) / static_cast<double>(counts[own] - 1);
            double b = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < n_ids; ++c) {
                if (c == own || counts[c] == 0) continue;
                b = std::min(b, sums(i, static_cast<Eigen::Index>(c)) / static_cast<double>(counts[c]));
            }
            const double denom = std::max(a, b);
            s = denom > 0.0 ? (b - a) / denom : 0.0;
        }
        out.samples[static_cast<std::size_t>(i)] = s;
        total += s;
    }
    out.mean = total / static_cast<double>(n);
    return out;
}

}  // namespace dimred
