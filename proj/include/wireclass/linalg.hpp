#pragma once

#include <Eigen/Dense>

namespace wireclass {

// Instances are rows, so the feature matrix is stored row-major; kernel
// evaluations and the solver hand out row views of it.
using FeatureMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using IntVector = Eigen::VectorXi;
using Index = Eigen::Index;

}  // namespace wireclass
