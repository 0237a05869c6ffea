#pragma once

#include <Eigen/Dense>

namespace dimred {

/// Row-major dense matrix; one sample per row.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

}  // namespace dimred
