#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "mdod/errors.hpp"
#include "mdod/kernels/kernels.hpp"
#include "mdod/mathutil.hpp"
#include "mdod/rng.hpp"
#include "mdod/spd/spd.hpp"

namespace mdod::rpo {

enum class Agg { Max, Mean };

// p unit-norm projection vectors in R^d, row-major.
template <typename T>
struct ProjectionSet {
    int dim = 0;
    int count = 0;
    uint64_t seed = 0;
    std::vector<T> u;  // count x dim

    const T* row(int i) const { return u.data() + static_cast<size_t>(i) * dim; }
};

// Gaussian-then-normalize sphere sampling; deterministic by seed.
template <typename T>
ProjectionSet<T> sample_unit_projections(int d, int p, uint64_t seed) {
    if (d < 1 || p < 1) throw InvalidConfig("sample_unit_projections needs d >= 1, p >= 1");
    ProjectionSet<T> set;
    set.dim = d;
    set.count = p;
    set.seed = seed;
    set.u.resize(static_cast<size_t>(p) * d);
    Rng rng(seed);
    for (int i = 0; i < p; ++i) {
        T* row = set.u.data() + static_cast<size_t>(i) * d;
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (int j = 0; j < d; ++j) {
                const double g = rng.normal();
                row[j] = static_cast<T>(g);
                norm2 += g * g;
            }
        } while (norm2 == 0.0);
        const T inv = static_cast<T>(1.0 / std::sqrt(norm2));
        for (int j = 0; j < d; ++j) row[j] *= inv;
    }
    return set;
}

// Frozen per-projection median and MAD of the projected training data.
template <typename T>
struct RpoEstimator {
    ProjectionSet<T> projections;
    std::vector<T> med;  // per projection
    std::vector<T> mad;  // per projection, >= mad_floor
    T mad_floor = static_cast<T>(1e-6);
};

// One projected coordinate set at a time: med = median(u^T X),
// mad = median(|u^T X - med|) clamped to mad_floor.
template <typename T>
RpoEstimator<T> fit_rpo(const T* x, int n, int d, ProjectionSet<T> projections,
                        T mad_floor = static_cast<T>(1e-6)) {
    if (n < 2) throw TooFewSamples("fit_rpo needs n >= 2");
    if (projections.dim != d) throw ShapeMismatch("fit_rpo projection dimension mismatch");
    RpoEstimator<T> est;
    est.mad_floor = mad_floor;
    est.med.resize(projections.count);
    est.mad.resize(projections.count);
    std::vector<T> proj(n);
    for (int i = 0; i < projections.count; ++i) {
        const T* u = projections.row(i);
        for (int s = 0; s < n; ++s) {
            const T* xs = x + static_cast<size_t>(s) * d;
            T acc = 0;
            for (int j = 0; j < d; ++j) acc += u[j] * xs[j];
            proj[s] = acc;
        }
        const T med = median(std::span<const T>(proj));
        est.med[i] = med;
        est.mad[i] = std::max(median_absolute_deviation(std::span<const T>(proj), med), mad_floor);
    }
    est.projections = std::move(projections);
    return est;
}

template <typename T>
RpoEstimator<T> fit_rpo(std::span<const T> x, int n, int d, ProjectionSet<T> projections,
                        T mad_floor = static_cast<T>(1e-6)) {
    return fit_rpo(x.data(), n, d, std::move(projections), mad_floor);
}

// agg over projections of |u^T x - med_u| / mad_u.
template <typename T>
T rpo_score(const RpoEstimator<T>& est, const T* x, Agg agg) {
    const int d = est.projections.dim;
    const int p = est.projections.count;
    double acc = agg == Agg::Max ? -1.0 : 0.0;
    for (int i = 0; i < p; ++i) {
        const T* u = est.projections.row(i);
        T dot = 0;
        for (int j = 0; j < d; ++j) dot += u[j] * x[j];
        const double r = std::abs(static_cast<double>(dot - est.med[i])) /
                         static_cast<double>(est.mad[i]);
        if (agg == Agg::Max)
            acc = std::max(acc, r);
        else
            acc += r;
    }
    if (agg == Agg::Mean) acc /= p;
    return static_cast<T>(std::max(acc, 0.0));
}

// Batch scoring through the GEMM kernels: proj = X U^T, then per-row
// aggregation. Identical math to rpo_score.
inline void rpo_score_batch(const RpoEstimator<float>& est, const float* x, int n, Agg agg,
                            float* out) {
    const int d = est.projections.dim;
    const int p = est.projections.count;
    std::vector<float> proj(static_cast<size_t>(n) * p);
    kern::sgemm(false, true, n, p, d, 1.0f, x, d, est.projections.u.data(), d, 0.0f, proj.data(), p);
    for (int s = 0; s < n; ++s) {
        const float* row = proj.data() + static_cast<size_t>(s) * p;
        double acc = agg == Agg::Max ? -1.0 : 0.0;
        for (int i = 0; i < p; ++i) {
            const double r = std::abs(static_cast<double>(row[i] - est.med[i])) / est.mad[i];
            acc = agg == Agg::Max ? std::max(acc, r) : acc + r;
        }
        out[s] = static_cast<float>(agg == Agg::Mean ? acc / p : std::max(acc, 0.0));
    }
}

// sqrt((x - mean)^T cov^{-1} (x - mean)) via Cholesky solve.
double mahalanobis(const Eigen::VectorXd& x, const Eigen::VectorXd& mean,
                   const spd::SpdMatrix& cov);

// phi(u) = (A^T u) / ||A^T u|| per projection row. Throws Singular when A is
// not invertible.
template <typename T>
ProjectionSet<T> transport_projections(const ProjectionSet<T>& set, const Eigen::MatrixXd& a) {
    const int d = set.dim;
    if (a.rows() != d || a.cols() != d) throw ShapeMismatch("transport_projections: A must be d x d");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible()) throw Singular("transport_projections: A is singular");
    ProjectionSet<T> out = set;
    for (int i = 0; i < set.count; ++i) {
        Eigen::VectorXd u(d);
        for (int j = 0; j < d; ++j) u(j) = static_cast<double>(set.row(i)[j]);
        Eigen::VectorXd v = a.transpose() * u;
        v /= v.norm();
        T* dst = out.u.data() + static_cast<size_t>(i) * d;
        for (int j = 0; j < d; ++j) dst[j] = static_cast<T>(v(j));
    }
    return out;
}

// Non-robust squared variant (projected mean/variance instead of MED/MAD),
// the finite-sample form of the Mahalanobis maximization identity.
double rpo_score_nonrobust(const Eigen::VectorXd& x, const Eigen::MatrixXd& train_rows,
                           const ProjectionSet<double>& u, Agg agg,
                           double var_floor = 1e-12);

}  // namespace mdod::rpo
