#include "mdod/spd/spd.hpp"

#include <cmath>

#include "mdod/shallow/pca.hpp"

namespace mdod::spd {

namespace {
constexpr double kEigFloor = 1e-12;

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& m) { return 0.5 * (m + m.transpose()); }
}  // namespace

SpdMatrix::SpdMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) throw NotSpd("SpdMatrix must be square");
    const double scale = m_.cwiseAbs().maxCoeff();
    const double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
    if (asym >= 1e-9 * std::max(scale, 1e-300)) throw NotSpd("SpdMatrix not symmetric");
    m_ = symmetrize(m_);
    Eigen::LLT<Eigen::MatrixXd> llt(m_);
    if (llt.info() != Eigen::Success) throw NotPd("SpdMatrix not positive definite");
}

Eigen::MatrixXd spd_log(const SpdMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.mat());
    if (es.info() != Eigen::Success) throw NotSpd("eigendecomposition failed");
    Eigen::VectorXd evals = es.eigenvalues();
    for (int i = 0; i < evals.size(); ++i) {
        if (evals(i) <= 0.0 && evals(i) < -1e-9 * std::abs(evals(evals.size() - 1)))
            throw NotSpd("spd_log of non-PD matrix");
        evals(i) = std::log(std::max(evals(i), kEigFloor));
    }
    return symmetrize(es.eigenvectors() * evals.asDiagonal() * es.eigenvectors().transpose());
}

SpdMatrix spd_exp(const Eigen::MatrixXd& sym) {
    Eigen::MatrixXd s = symmetrize(sym);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
    Eigen::VectorXd evals = es.eigenvalues().array().exp();
    return SpdMatrix(
        symmetrize(es.eigenvectors() * evals.asDiagonal() * es.eigenvectors().transpose()));
}

SpdMatrix frechet_mean(std::span<const SpdMatrix> set) {
    if (set.empty()) throw EmptySet("frechet_mean of empty set");
    Eigen::MatrixXd acc = spd_log(set[0]);
    for (size_t i = 1; i < set.size(); ++i) {
        if (set[i].dim() != set[0].dim()) throw ShapeMismatch("frechet_mean dimension mismatch");
        acc += spd_log(set[i]);
    }
    acc /= static_cast<double>(set.size());
    return spd_exp(acc);
}

Eigen::VectorXd sym_to_vec(const Eigen::MatrixXd& s) {
    const int d = static_cast<int>(s.rows());
    Eigen::VectorXd v(d * (d + 1) / 2);
    const double sqrt2 = std::sqrt(2.0);
    int idx = 0;
    for (int i = 0; i < d; ++i) {
        v(idx++) = s(i, i);
        for (int j = i + 1; j < d; ++j) v(idx++) = sqrt2 * s(i, j);
    }
    return v;
}

Eigen::MatrixXd vec_to_sym(const Eigen::VectorXd& v) {
    const int d = static_cast<int>((std::sqrt(8.0 * static_cast<double>(v.size()) + 1.0) - 1.0) / 2.0 + 0.5);
    if (d * (d + 1) / 2 != v.size()) throw ShapeMismatch("vec_to_sym: length is not d(d+1)/2");
    Eigen::MatrixXd s(d, d);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    int idx = 0;
    for (int i = 0; i < d; ++i) {
        s(i, i) = v(idx++);
        for (int j = i + 1; j < d; ++j) {
            s(i, j) = s(j, i) = inv_sqrt2 * v(idx++);
        }
    }
    return s;
}

TpcaModel tpca_fit_from_logs(const Eigen::MatrixXd& log_vecs, int n_components,
                             double variance_target) {
    if (log_vecs.rows() < 2) throw EmptySet("tpca_fit needs at least two matrices");
    if (n_components > 0 && log_vecs.rows() <= n_components)
        throw RankDeficient("tpca_fit: |set| must exceed n_components");
    pca::PcaModel p = pca::pca_fit(log_vecs, n_components, variance_target);
    TpcaModel model;
    model.log_mean_vec = p.mean;
    model.frechet_mean = spd_exp(vec_to_sym(p.mean)).mat();
    model.components = std::move(p.components);
    model.explained_variance = std::move(p.explained_variance);
    model.total_variance = p.total_variance;
    model.n_components = p.n_components;
    return model;
}

TpcaModel tpca_fit(std::span<const SpdMatrix> set, int n_components, double variance_target) {
    if (set.empty()) throw EmptySet("tpca_fit of empty set");
    const int dd = set[0].dim() * (set[0].dim() + 1) / 2;
    Eigen::MatrixXd logs(static_cast<int>(set.size()), dd);
    for (size_t i = 0; i < set.size(); ++i) logs.row(static_cast<int>(i)) = sym_to_vec(spd_log(set[i]));
    return tpca_fit_from_logs(logs, n_components, variance_target);
}

Eigen::VectorXd tpca_transform_logvec(const TpcaModel& model, const Eigen::VectorXd& log_vec) {
    return model.components * (log_vec - model.log_mean_vec);
}

Eigen::VectorXd tpca_transform(const TpcaModel& model, const SpdMatrix& m) {
    return tpca_transform_logvec(model, sym_to_vec(spd_log(m)));
}

double tpca_residual_norm(const TpcaModel& model, const Eigen::VectorXd& log_vec) {
    Eigen::VectorXd centered = log_vec - model.log_mean_vec;
    Eigen::VectorXd coords = model.components * centered;
    return (centered - model.components.transpose() * coords).norm();
}

}  // namespace mdod::spd
