#pragma once

#include "dimred/feature_weights.hpp"
#include "dimred/matrix.hpp"

namespace dimred {

/// Eigen-decomposition of a symmetric matrix, eigenvalues descending.
struct SymmetricEigen {
    Vector values;
    /// Column j is the unit eigenvector for values(j).
    Matrix vectors;
    int sweeps = 0;
};

/**
 * Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
 * 1e-10 * max(1, ||A||_F). Throws ParameterError for non-square or
 * non-symmetric input.
 */
SymmetricEigen jacobi_eigen(const Matrix& symmetric);

struct PcaModel {
    Vector mean;
    /// Row j is principal direction j (unit norm), by descending eigenvalue.
    Matrix components;
    Vector explained_variance;
    Vector explained_variance_ratio;
};

/**
 * @brief Fit PCA from the sample covariance (divisor n - 1).
 *
 * Negative eigenvalues from round-off are clamped to zero. Each component is
 * sign-flipped so that its largest-magnitude entry is nonnegative.
 * Throws ParameterError for fewer than two samples, non-finite values, or
 * zero total variance.
 */
PcaModel pca_fit(const Matrix& data);

/// Explained-variance ratios as weights named PC1..PCd.
FeatureWeights pca_importance(const PcaModel& model);

/// Project centered data onto the first m components; result is n x m.
Matrix pca_project(const PcaModel& model, const Matrix& data, int m);

/// Sample covariance with divisor n - 1.
Matrix covariance(const Matrix& data);

}  // namespace dimred
