#include "mdod/shallow/pca.hpp"

#include <algorithm>

#include "mdod/errors.hpp"

namespace mdod::pca {

namespace {
constexpr double kRankEps = 1e-10;
}

PcaModel pca_fit(const Eigen::MatrixXd& x, int n_components, double variance_target) {
    const auto n = x.rows();
    const auto d = x.cols();
    if (n < 2) throw EmptySet("pca_fit needs at least two rows");

    PcaModel model;
    model.mean = x.colwise().mean();
    Eigen::MatrixXd centered = x.rowwise() - model.mean.transpose();
    const double denom = static_cast<double>(n - 1);

    Eigen::VectorXd variances;   // descending
    Eigen::MatrixXd basis;       // columns are directions in R^D

    if (n <= d) {
        // Gram trick: eigenvectors of (1/(n-1)) C C^T map to right singular vectors.
        Eigen::MatrixXd gram = centered * centered.transpose();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
        const auto& evals = es.eigenvalues();  // ascending
        const auto& evecs = es.eigenvectors();
        std::vector<int> keep;
        for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
            if (evals(i) > kRankEps * std::max(1.0, evals(n - 1))) keep.push_back(i);
        }
        variances.resize(static_cast<int>(keep.size()));
        basis.resize(d, static_cast<int>(keep.size()));
        for (size_t j = 0; j < keep.size(); ++j) {
            const int i = keep[j];
            variances(static_cast<int>(j)) = evals(i) / denom;
            basis.col(static_cast<int>(j)) = centered.transpose() * evecs.col(i) / std::sqrt(evals(i));
        }
    } else {
        Eigen::MatrixXd cov = centered.transpose() * centered / denom;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
        const auto& evals = es.eigenvalues();
        const auto& evecs = es.eigenvectors();
        std::vector<int> keep;
        for (int i = static_cast<int>(d) - 1; i >= 0; --i) {
            if (evals(i) > kRankEps * std::max(1.0, evals(d - 1))) keep.push_back(i);
        }
        variances.resize(static_cast<int>(keep.size()));
        basis.resize(d, static_cast<int>(keep.size()));
        for (size_t j = 0; j < keep.size(); ++j) {
            variances(static_cast<int>(j)) = evals(keep[j]);
            basis.col(static_cast<int>(j)) = evecs.col(keep[j]);
        }
    }

    model.total_variance = variances.sum();
    const int rank = static_cast<int>(variances.size());
    int k = n_components;
    if (k == 0) {
        double cum = 0.0;
        k = rank;
        for (int i = 0; i < rank; ++i) {
            cum += variances(i);
            if (cum >= variance_target * model.total_variance) {
                k = i + 1;
                break;
            }
        }
    }
    if (k > rank) throw RankDeficient("requested components exceed data rank");
    model.n_components = k;
    model.components = basis.leftCols(k).transpose();
    model.explained_variance = variances.head(k);
    return model;
}

Eigen::VectorXd pca_transform(const PcaModel& model, const Eigen::VectorXd& x) {
    return model.components * (x - model.mean);
}

double residual_norm(const PcaModel& model, const Eigen::VectorXd& x) {
    Eigen::VectorXd centered = x - model.mean;
    Eigen::VectorXd coords = model.components * centered;
    Eigen::VectorXd residual = centered - model.components.transpose() * coords;
    return residual.norm();
}

}  // namespace mdod::pca
