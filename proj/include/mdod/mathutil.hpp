#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string_view>
#include <thread>
#include <vector>

#include "mdod/errors.hpp"

namespace mdod {

// Median of a copy; does not modify the input view.
template <typename T>
T median(std::span<const T> v) {
    if (v.empty()) throw EmptySet("median of empty set");
    std::vector<T> w(v.begin(), v.end());
    const size_t n = w.size();
    const size_t mid = n / 2;
    std::nth_element(w.begin(), w.begin() + mid, w.end());
    if (n % 2 == 1) return w[mid];
    T hi = w[mid];
    T lo = *std::max_element(w.begin(), w.begin() + mid);
    return (lo + hi) / T(2);
}

template <typename T>
T median_absolute_deviation(std::span<const T> v, T med) {
    std::vector<T> dev(v.size());
    for (size_t i = 0; i < v.size(); ++i) dev[i] = std::abs(v[i] - med);
    return median(std::span<const T>(dev));
}

// Empirical quantile, nearest-rank on the sorted sample:
// q(f) = sorted[min(n-1, floor(f * n))].
template <typename T>
T quantile_nearest_rank(std::span<const T> v, double f) {
    if (v.empty()) throw EmptySet("quantile of empty set");
    std::vector<T> w(v.begin(), v.end());
    size_t idx = static_cast<size_t>(std::floor(f * static_cast<double>(w.size())));
    idx = std::min(idx, w.size() - 1);
    std::nth_element(w.begin(), w.begin() + idx, w.end());
    return w[idx];
}

template <typename T>
double mean_of(std::span<const T> v) {
    if (v.empty()) throw EmptySet("mean of empty set");
    double s = 0.0;
    for (auto x : v) s += static_cast<double>(x);
    return s / static_cast<double>(v.size());
}

template <typename T>
double stddev_of(std::span<const T> v) {
    if (v.size() < 2) return 0.0;
    const double m = mean_of(v);
    double s = 0.0;
    for (auto x : v) {
        const double d = static_cast<double>(x) - m;
        s += d * d;
    }
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

// Spearman rank correlation with midrank ties.
double spearman(std::span<const double> a, std::span<const double> b);

// FNV-1a over raw bytes; used for dataset checksums and config hashes.
inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xcbf29ce484222325ULL) {
    return fnv1a64(s.data(), s.size(), h);
}

// Static-partition parallel map over [0, n). Each index is processed exactly
// once and writes only to its own outputs, so results do not depend on the
// worker count.
void parallel_for(size_t n, unsigned jobs, const std::function<void(size_t)>& fn);

}  // namespace mdod
