#pragma once

#include <Eigen/Dense>
#include <vector>

namespace mdod::shallow {

// Local outlier factor with brute-force exact kNN (training sets here stay
// well below 10^4 points). Ties in distance are broken by point index; all
// distances are floored at 1e-12 so duplicates cannot collapse densities.
struct LofModel {
    Eigen::MatrixXd train;  // n x d
    int k = 20;
    std::vector<double> kdist;               // per training point
    std::vector<double> lrd;                 // per training point
    std::vector<std::vector<int>> neighbors; // per training point, k indices
};

LofModel lof_fit(const Eigen::MatrixXd& train, int k = 20);
double lof_score(const LofModel& model, const Eigen::VectorXd& x);

}  // namespace mdod::shallow
