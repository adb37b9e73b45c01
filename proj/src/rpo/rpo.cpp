#include "mdod/rpo/rpo.hpp"

namespace mdod::rpo {

double mahalanobis(const Eigen::VectorXd& x, const Eigen::VectorXd& mean,
                   const spd::SpdMatrix& cov) {
    if (x.size() != mean.size() || x.size() != cov.dim())
        throw ShapeMismatch("mahalanobis dimension mismatch");
    Eigen::LLT<Eigen::MatrixXd> llt(cov.mat());
    if (llt.info() != Eigen::Success) throw NotPd("mahalanobis: covariance not PD");
    const Eigen::VectorXd diff = x - mean;
    const Eigen::VectorXd solved = llt.solve(diff);
    return std::sqrt(std::max(diff.dot(solved), 0.0));
}

double rpo_score_nonrobust(const Eigen::VectorXd& x, const Eigen::MatrixXd& train_rows,
                           const ProjectionSet<double>& u, Agg agg, double var_floor) {
    const int d = static_cast<int>(x.size());
    const int n = static_cast<int>(train_rows.rows());
    if (train_rows.cols() != d || u.dim != d) throw ShapeMismatch("rpo_score_nonrobust dims");
    if (n < 2) throw TooFewSamples("rpo_score_nonrobust needs n >= 2");

    double acc = agg == Agg::Max ? 0.0 : 0.0;
    std::vector<double> proj(n);
    for (int i = 0; i < u.count; ++i) {
        Eigen::Map<const Eigen::VectorXd> ui(u.row(i), d);
        double mean = 0.0;
        for (int s = 0; s < n; ++s) {
            proj[s] = train_rows.row(s).dot(ui);
            mean += proj[s];
        }
        mean /= n;
        double var = 0.0;
        for (int s = 0; s < n; ++s) {
            const double dv = proj[s] - mean;
            var += dv * dv;
        }
        var = std::max(var / n, var_floor);  // clamp degenerate projections
        const double num = ui.dot(x) - mean;
        const double r = num * num / var;
        acc = agg == Agg::Max ? std::max(acc, r) : acc + r;
    }
    return agg == Agg::Mean ? acc / u.count : acc;
}

}  // namespace mdod::rpo
