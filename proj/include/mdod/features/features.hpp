#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mdod/radar/radar_sim.hpp"
#include "mdod/spd/spd.hpp"

namespace mdod::feat {

struct FeatureParams {
    double log_eps = 1e-12;        // 20*log10(x + eps)
    double roi_keep_fraction = 0.15;
    double cov_ridge = 1e-6;       // times mean diagonal
};

// Thresholded min-max-normalized spectral ROI. Non-kept columns are exactly
// zero; the kept region is normalized to [0,1] with its own min/max.
struct RoiSignature {
    int rows = 0, cols = 0;
    std::vector<float> matrix;        // rows*cols, values in [0,1]
    std::vector<uint8_t> kept_columns;  // length cols
};

// 20*log10(in + eps) over the magnitude spectrogram.
Eigen::MatrixXd log_scale(const radar::SignatureSample& sig, const radar::RadarParams& radar,
                          double eps = 1e-12);

// Threshold at the (1 - keep_fraction) global quantile of all entries; a
// column is kept iff its max reaches the threshold. Kept region is min-max
// normalized (constant region maps to zero).
RoiSignature roi_threshold(const Eigen::MatrixXd& logsig, double keep_fraction = 0.15);

// Uncentered second moment over burst rows plus ridge*mean(diag)*I.
spd::SpdMatrix covariance_feature(const Eigen::MatrixXd& logsig, double ridge = 1e-6);

// (m - min) / (max - min); a constant matrix maps to all zeros.
Eigen::MatrixXd minmax_normalize(const Eigen::MatrixXd& m);

// Row-major upper triangle including the diagonal, length d(d+1)/2.
Eigen::VectorXd upper_tri_vec(const Eigen::MatrixXd& sym);

// Inverse of upper_tri_vec (test support for the reconstruction identity).
Eigen::MatrixXd upper_tri_unvec(const Eigen::VectorXd& v);

}  // namespace mdod::feat
