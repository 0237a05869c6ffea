#include "dimred/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dimred/error.hpp"

namespace dimred {

SymmetricEigen jacobi_eigen(const Matrix& symmetric) {
    if (symmetric.rows() != symmetric.cols()) throw ParameterError("jacobi_eigen needs a square matrix");
    if (!symmetric.allFinite()) throw ParameterError("jacobi_eigen input is not finite");
    const Eigen::Index d = symmetric.rows();
    const double scale = std::max(1.0, symmetric.norm());
    if ((symmetric - symmetric.transpose()).norm() > 1e-12 * scale) {
        throw ParameterError("jacobi_eigen needs a symmetric matrix");
    }

    Matrix a = symmetric;
    Matrix v = Matrix::Identity(d, d);
    const double threshold = 1e-10 * scale;
    constexpr int kMaxSweeps = 100;

    auto off_norm = [&] {
        double s = 0.0;
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j)
                if (i != j) s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    int sweep = 0;
    while (off_norm() >= threshold && sweep < kMaxSweeps) {
        ++sweep;
        for (Eigen::Index p = 0; p < d - 1; ++p) {
            for (Eigen::Index q = p + 1; q < d; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index k = 0; k < d; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < d; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (Eigen::Index k = 0; k < d; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) { return a(x, x) > a(y, y); });

    SymmetricEigen out;
    out.values.resize(d);
    out.vectors.resize(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        out.values(j) = a(order[j], order[j]);
        out.vectors.col(j) = v.col(order[j]);
    }
    out.sweeps = sweep;
    return out;
}

Matrix covariance(const Matrix& data) {
    const Eigen::RowVectorXd mean = data.colwise().mean();
    const Matrix centered = data.rowwise() - mean;
    return (centered.transpose() * centered) / static_cast<double>(data.rows() - 1);
}

PcaModel pca_fit(const Matrix& data) {
    if (data.rows() <= 1) throw ParameterError("PCA needs at least 2 samples, got " + std::to_string(data.rows()));
    if (data.cols() < 1) throw ParameterError("PCA needs at least 1 column");
    if (!data.allFinite()) throw ParameterError("PCA input contains non-finite values");

    const auto eig = jacobi_eigen(covariance(data));
    const Eigen::Index d = data.cols();

    PcaModel model;
    model.mean = data.colwise().mean().transpose();
    model.components.resize(d, d);
    model.explained_variance.resize(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        Eigen::RowVectorXd dir = eig.vectors.col(j).transpose();
        Eigen::Index arg = 0;
        for (Eigen::Index i = 1; i < d; ++i) {
            if (std::abs(dir(i)) > std::abs(dir(arg))) arg = i;
        }
        if (dir(arg) < 0.0) dir = -dir;
        model.components.row(j) = dir;
        model.explained_variance(j) = std::max(0.0, eig.values(j));
    }
    const double total = model.explained_variance.sum();
    if (!(total > 0.0)) throw ParameterError("PCA input has zero total variance");
    model.explained_variance_ratio = model.explained_variance / total;
    return model;
}

FeatureWeights pca_importance(const PcaModel& model) {
    const auto d = static_cast<std::size_t>(model.explained_variance_ratio.size());
    std::vector<std::string> names;
    std::vector<double> ratios;
    for (std::size_t j = 0; j < d; ++j) {
        names.push_back("PC" + std::to_string(j + 1));
        ratios.push_back(model.explained_variance_ratio(static_cast<Eigen::Index>(j)));
    }
    return FeatureWeights(std::move(names), ratios, WeightSource::PCA);
}

Matrix pca_project(const PcaModel& model, const Matrix& data, int m) {
    const Eigen::Index d = model.components.rows();
    if (m < 1 || m > d) {
        throw ParameterError("number of components must be in [1, " + std::to_string(d) + "], got " +
                             std::to_string(m));
    }
    if (data.cols() != d) throw ParameterError("data width does not match the PCA model");
    const Matrix centered = data.rowwise() - model.mean.transpose();
    return centered * model.components.topRows(m).transpose();
}

}  // namespace dimred
