// Elementwise and reduction kernels shared across ISA translation units.
// Plain loops: each TU's arch flags decide the vector width the compiler
// emits, which keeps one source of truth for the arithmetic.

#include <cmath>
#include <cstddef>

namespace {

float ew_reduce_sum(const float* x, size_t n) {
    float s0 = 0.0f, s1 = 0.0f, s2 = 0.0f, s3 = 0.0f;
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += x[i];
        s1 += x[i + 1];
        s2 += x[i + 2];
        s3 += x[i + 3];
    }
    for (; i < n; ++i) s0 += x[i];
    return (s0 + s1) + (s2 + s3);
}

float ew_reduce_max(const float* x, size_t n) {
    if (n == 0) return -INFINITY;
    float m = x[0];
    for (size_t i = 1; i < n; ++i) m = x[i] > m ? x[i] : m;
    return m;
}

void ew_axpy(size_t n, float a, const float* x, float* y) {
    for (size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void ew_scale(size_t n, float a, float* x) {
    for (size_t i = 0; i < n; ++i) x[i] *= a;
}

void ew_leaky_relu(size_t n, float slope, const float* x, float* y) {
    for (size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0f ? x[i] : slope * x[i];
}

void ew_leaky_relu_grad(size_t n, float slope, const float* out, const float* dy, float* dx) {
    for (size_t i = 0; i < n; ++i) dx[i] = out[i] > 0.0f ? dy[i] : slope * dy[i];
}

void ew_adam_step(size_t n, float lr, float beta1, float beta2, float eps, float decay,
                  float inv_bias1, float inv_bias2, float* w, float* m, float* v, const float* g) {
    const float one_m_b1 = 1.0f - beta1;
    const float one_m_b2 = 1.0f - beta2;
    const float shrink = 1.0f - lr * decay;
    for (size_t i = 0; i < n; ++i) {
        const float gi = g[i];
        const float mi = beta1 * m[i] + one_m_b1 * gi;
        const float vi = beta2 * v[i] + one_m_b2 * gi * gi;
        m[i] = mi;
        v[i] = vi;
        const float mhat = mi * inv_bias1;
        const float vhat = vi * inv_bias2;
        w[i] = shrink * w[i] - lr * mhat / (std::sqrt(vhat) + eps);
    }
}

void ew_pairwise_sqdist(const float* a, size_t na, const float* b, size_t nb, size_t d,
                        float* out) {
    for (size_t i = 0; i < na; ++i) {
        const float* ai = a + i * d;
        for (size_t j = 0; j < nb; ++j) {
            const float* bj = b + j * d;
            float s = 0.0f;
            for (size_t t = 0; t < d; ++t) {
                const float diff = ai[t] - bj[t];
                s += diff * diff;
            }
            out[i * nb + j] = s;
        }
    }
}

}  // namespace
