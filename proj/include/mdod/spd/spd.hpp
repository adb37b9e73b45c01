#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "mdod/errors.hpp"

namespace mdod::spd {

// Symmetric positive-definite matrix with validated invariants:
// ||M - M^T||_inf < 1e-9 * ||M||_inf and all eigenvalues > 0.
class SpdMatrix {
public:
    explicit SpdMatrix(Eigen::MatrixXd m);

    const Eigen::MatrixXd& mat() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }

private:
    Eigen::MatrixXd m_;
};

// Matrix log/exp through the eigendecomposition. Eigenvalues are floored at
// 1e-12 before the log to absorb roundoff.
Eigen::MatrixXd spd_log(const SpdMatrix& m);
SpdMatrix spd_exp(const Eigen::MatrixXd& sym);

// Log-Euclidean Frechet mean: exp(mean_i log(M_i)).
SpdMatrix frechet_mean(std::span<const SpdMatrix> set);

// Isometric vectorization of a symmetric d x d matrix: upper triangle with
// off-diagonal entries scaled by sqrt(2), so ||vec(S)||_2 == ||S||_F.
Eigen::VectorXd sym_to_vec(const Eigen::MatrixXd& s);
Eigen::MatrixXd vec_to_sym(const Eigen::VectorXd& v);

struct TpcaModel {
    Eigen::MatrixXd frechet_mean;       // d x d SPD
    Eigen::VectorXd log_mean_vec;       // isometric coords of log(mean)
    Eigen::MatrixXd components;         // n_components x D, orthonormal rows
    Eigen::VectorXd explained_variance; // per retained component, non-increasing
    double total_variance = 0.0;        // across all tangent directions
    int n_components = 0;
};

// Tangent PCA at the log-Euclidean Frechet mean. n_components == 0 selects
// the smallest count reaching `variance_target` of the tangent variance.
TpcaModel tpca_fit(std::span<const SpdMatrix> set, int n_components,
                   double variance_target = 0.95);

// Same fit from precomputed isometric log coordinates (one row per matrix).
TpcaModel tpca_fit_from_logs(const Eigen::MatrixXd& log_vecs, int n_components,
                             double variance_target = 0.95);

Eigen::VectorXd tpca_transform(const TpcaModel& model, const SpdMatrix& m);
Eigen::VectorXd tpca_transform_logvec(const TpcaModel& model, const Eigen::VectorXd& log_vec);

// Norm of the tangent-space residual after projection on the retained
// components (negated-PCA scoring for SPD inputs).
double tpca_residual_norm(const TpcaModel& model, const Eigen::VectorXd& log_vec);

}  // namespace mdod::spd
