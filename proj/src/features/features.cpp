#include "mdod/features/features.hpp"

#include <algorithm>
#include <cmath>

#include "mdod/mathutil.hpp"

namespace mdod::feat {

Eigen::MatrixXd log_scale(const radar::SignatureSample& sig, const radar::RadarParams& radar,
                          double eps) {
    const int rows = radar.bursts;
    const int cols = radar.pulses_per_burst;
    Eigen::MatrixXd out(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            out(r, c) = 20.0 * std::log10(static_cast<double>(sig.spectrogram[static_cast<size_t>(r) * cols + c]) + eps);
    return out;
}

RoiSignature roi_threshold(const Eigen::MatrixXd& logsig, double keep_fraction) {
    if (keep_fraction <= 0.0 || keep_fraction >= 1.0)
        throw InvalidConfig("keep_fraction must be in (0,1)");
    const int rows = static_cast<int>(logsig.rows());
    const int cols = static_cast<int>(logsig.cols());

    std::vector<double> all(logsig.data(), logsig.data() + logsig.size());
    const double tau = quantile_nearest_rank(std::span<const double>(all), 1.0 - keep_fraction);

    RoiSignature roi;
    roi.rows = rows;
    roi.cols = cols;
    roi.matrix.assign(static_cast<size_t>(rows) * cols, 0.0f);
    roi.kept_columns.assign(cols, 0);

    int kept = 0;
    double kmin = std::numeric_limits<double>::infinity();
    double kmax = -std::numeric_limits<double>::infinity();
    for (int c = 0; c < cols; ++c) {
        const double colmax = logsig.col(c).maxCoeff();
        if (colmax >= tau) {
            roi.kept_columns[c] = 1;
            ++kept;
            kmin = std::min(kmin, logsig.col(c).minCoeff());
            kmax = std::max(kmax, colmax);
        }
    }
    if (kept < 1) throw DegenerateSignature("roi_threshold kept no columns");

    const double span = kmax - kmin;
    for (int c = 0; c < cols; ++c) {
        if (!roi.kept_columns[c]) continue;
        for (int r = 0; r < rows; ++r) {
            const double v = span > 0.0 ? (logsig(r, c) - kmin) / span : 0.0;
            roi.matrix[static_cast<size_t>(r) * cols + c] = static_cast<float>(v);
        }
    }
    return roi;
}

spd::SpdMatrix covariance_feature(const Eigen::MatrixXd& logsig, double ridge) {
    if (!logsig.allFinite()) throw InvalidConfig("covariance_feature input must be finite");
    const auto b = static_cast<double>(logsig.rows());
    Eigen::MatrixXd c = logsig.transpose() * logsig / b;
    const double mean_diag = c.diagonal().mean();
    c += (ridge * mean_diag) * Eigen::MatrixXd::Identity(c.rows(), c.cols());
    return spd::SpdMatrix(std::move(c));  // throws NotPd if the ridge was insufficient
}

Eigen::MatrixXd minmax_normalize(const Eigen::MatrixXd& m) {
    const double lo = m.minCoeff();
    const double hi = m.maxCoeff();
    if (hi <= lo) return Eigen::MatrixXd::Zero(m.rows(), m.cols());
    return (m.array() - lo) / (hi - lo);
}

Eigen::VectorXd upper_tri_vec(const Eigen::MatrixXd& sym) {
    const int d = static_cast<int>(sym.rows());
    if (sym.cols() != d) throw ShapeMismatch("upper_tri_vec needs a square matrix");
    Eigen::VectorXd v(d * (d + 1) / 2);
    int idx = 0;
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) v(idx++) = sym(i, j);
    return v;
}

Eigen::MatrixXd upper_tri_unvec(const Eigen::VectorXd& v) {
    const int d = static_cast<int>((std::sqrt(8.0 * static_cast<double>(v.size()) + 1.0) - 1.0) / 2.0 + 0.5);
    if (d * (d + 1) / 2 != v.size()) throw ShapeMismatch("upper_tri_unvec: bad length");
    Eigen::MatrixXd s(d, d);
    int idx = 0;
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) s(i, j) = s(j, i) = v(idx++);
    return s;
}

}  // namespace mdod::feat
