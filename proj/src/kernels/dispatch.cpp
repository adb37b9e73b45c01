#include "mdod/kernels/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <string>

#include "mdod/errors.hpp"
#include "table.hpp"

namespace mdod::kern {

namespace {

std::atomic<const detail::KernelTable*> g_table{nullptr};
std::atomic<int> g_isa{0};
std::once_flag g_init_once;

bool cpu_has(Isa isa) {
#if defined(__x86_64__) || defined(_M_X64)
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
        case Isa::Avx512:
            return __builtin_cpu_supports("avx512f");
    }
    return false;
#else
    return isa == Isa::Scalar;
#endif
}

void set_active(Isa isa) {
    g_table.store(&detail::table_for(isa), std::memory_order_release);
    g_isa.store(static_cast<int>(isa), std::memory_order_release);
}

void init_once() {
    std::call_once(g_init_once, [] {
        Isa isa = best_supported();
        if (const char* env = std::getenv("MDOD_KERNEL_ISA")) {
            std::string want(env);
            Isa forced = isa;
            if (want == "scalar") forced = Isa::Scalar;
            else if (want == "avx2") forced = Isa::Avx2;
            else if (want == "avx512") forced = Isa::Avx512;
            if (cpu_has(forced)) isa = forced;
        }
        set_active(isa);
    });
}

const detail::KernelTable& active_table() {
    init_once();
    return *g_table.load(std::memory_order_acquire);
}

}  // namespace

namespace detail {
const KernelTable& table_for(Isa isa) {
    switch (isa) {
        case Isa::Avx512:
            return avx512_table();
        case Isa::Avx2:
            return avx2_table();
        default:
            return scalar_table();
    }
}
}  // namespace detail

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::Avx512:
            return "avx512";
        case Isa::Avx2:
            return "avx2";
        default:
            return "scalar";
    }
}

bool supported(Isa isa) { return cpu_has(isa); }

Isa best_supported() {
    if (cpu_has(Isa::Avx512)) return Isa::Avx512;
    if (cpu_has(Isa::Avx2)) return Isa::Avx2;
    return Isa::Scalar;
}

Isa active() {
    init_once();
    return static_cast<Isa>(g_isa.load(std::memory_order_acquire));
}

void select(Isa isa) {
    init_once();
    if (!cpu_has(isa)) throw InvalidConfig(std::string("kernel ISA not supported on this CPU: ") + isa_name(isa));
    set_active(isa);
}

void sgemm(bool ta, bool tb, int m, int n, int k, float alpha, const float* a, int lda,
           const float* b, int ldb, float beta, float* c, int ldc) {
    active_table().sgemm(ta, tb, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

void dgemm_ref(bool ta, bool tb, int m, int n, int k, double alpha, const double* a, int lda,
               const double* b, int ldb, double beta, double* c, int ldc) {
    for (int i = 0; i < m; ++i) {
        double* crow = c + static_cast<size_t>(i) * ldc;
        for (int j = 0; j < n; ++j) crow[j] = (beta == 0.0) ? 0.0 : crow[j] * beta;
    }
    if (k <= 0 || alpha == 0.0) return;
    for (int i = 0; i < m; ++i) {
        double* crow = c + static_cast<size_t>(i) * ldc;
        for (int p = 0; p < k; ++p) {
            const double av = alpha * (ta ? a[static_cast<size_t>(p) * lda + i]
                                          : a[static_cast<size_t>(i) * lda + p]);
            if (av == 0.0) continue;
            if (!tb) {
                const double* brow = b + static_cast<size_t>(p) * ldb;
                for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
            } else {
                for (int j = 0; j < n; ++j) crow[j] += av * b[static_cast<size_t>(j) * ldb + p];
            }
        }
    }
}

float reduce_sum(const float* x, size_t n) { return active_table().reduce_sum(x, n); }
float reduce_max(const float* x, size_t n) { return active_table().reduce_max(x, n); }

double reduce_sum_f64(const double* x, size_t n) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

void axpy(size_t n, float a, const float* x, float* y) { active_table().axpy(n, a, x, y); }
void scale_inplace(size_t n, float a, float* x) { active_table().scale_inplace(n, a, x); }

void leaky_relu(size_t n, float slope, const float* x, float* y) {
    active_table().leaky_relu(n, slope, x, y);
}

void leaky_relu_grad(size_t n, float slope, const float* out, const float* dy, float* dx) {
    active_table().leaky_relu_grad(n, slope, out, dy, dx);
}

void adam_step(size_t n, float lr, float beta1, float beta2, float eps, float decay,
               float inv_bias1, float inv_bias2, float* w, float* m, float* v, const float* g) {
    active_table().adam_step(n, lr, beta1, beta2, eps, decay, inv_bias1, inv_bias2, w, m, v, g);
}

void pairwise_sqdist(const float* a, size_t na, const float* b, size_t nb, size_t d, float* out) {
    active_table().pairwise_sqdist(a, na, b, nb, d, out);
}

}  // namespace mdod::kern
