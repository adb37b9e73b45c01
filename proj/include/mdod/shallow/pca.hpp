#pragma once

#include <Eigen/Dense>

namespace mdod::pca {

struct PcaModel {
    Eigen::VectorXd mean;               // length D
    Eigen::MatrixXd components;         // n_components x D, orthonormal rows
    Eigen::VectorXd explained_variance; // per retained component, non-increasing
    double total_variance = 0.0;
    int n_components = 0;
};

// Centered PCA of the rows of X (n x D). n_components == 0 keeps the smallest
// count whose cumulative explained variance reaches `variance_target`.
// Uses the Gram matrix when n <= D, the covariance otherwise.
PcaModel pca_fit(const Eigen::MatrixXd& x, int n_components, double variance_target = 0.95);

Eigen::VectorXd pca_transform(const PcaModel& model, const Eigen::VectorXd& x);

// Norm of (x - mean) minus its projection on the retained components.
double residual_norm(const PcaModel& model, const Eigen::VectorXd& x);

}  // namespace mdod::pca
