// AVX2+FMA kernels. Hand-written 6x16 GEMM microkernel; elementwise loops
// are compiled from the shared source under this TU's arch flags.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "table.hpp"

#include "gemm_driver.inl"
#include "elementwise.inl"

namespace mdod::kern::detail {

namespace {

struct MicroAvx2 {
    static constexpr int MR = 6;
    static constexpr int NR = 16;
    static void run(int kc, const float* ap, const float* bp, float* acc) {
        __m256 c00 = _mm256_setzero_ps(), c01 = _mm256_setzero_ps();
        __m256 c10 = _mm256_setzero_ps(), c11 = _mm256_setzero_ps();
        __m256 c20 = _mm256_setzero_ps(), c21 = _mm256_setzero_ps();
        __m256 c30 = _mm256_setzero_ps(), c31 = _mm256_setzero_ps();
        __m256 c40 = _mm256_setzero_ps(), c41 = _mm256_setzero_ps();
        __m256 c50 = _mm256_setzero_ps(), c51 = _mm256_setzero_ps();
        for (int p = 0; p < kc; ++p) {
            const float* arow = ap + p * MR;
            const float* brow = bp + p * NR;
            const __m256 b0 = _mm256_loadu_ps(brow);
            const __m256 b1 = _mm256_loadu_ps(brow + 8);
            __m256 av;
            av = _mm256_set1_ps(arow[0]);
            c00 = _mm256_fmadd_ps(av, b0, c00);
            c01 = _mm256_fmadd_ps(av, b1, c01);
            av = _mm256_set1_ps(arow[1]);
            c10 = _mm256_fmadd_ps(av, b0, c10);
            c11 = _mm256_fmadd_ps(av, b1, c11);
            av = _mm256_set1_ps(arow[2]);
            c20 = _mm256_fmadd_ps(av, b0, c20);
            c21 = _mm256_fmadd_ps(av, b1, c21);
            av = _mm256_set1_ps(arow[3]);
            c30 = _mm256_fmadd_ps(av, b0, c30);
            c31 = _mm256_fmadd_ps(av, b1, c31);
            av = _mm256_set1_ps(arow[4]);
            c40 = _mm256_fmadd_ps(av, b0, c40);
            c41 = _mm256_fmadd_ps(av, b1, c41);
            av = _mm256_set1_ps(arow[5]);
            c50 = _mm256_fmadd_ps(av, b0, c50);
            c51 = _mm256_fmadd_ps(av, b1, c51);
        }
        _mm256_storeu_ps(acc + 0 * NR, c00);
        _mm256_storeu_ps(acc + 0 * NR + 8, c01);
        _mm256_storeu_ps(acc + 1 * NR, c10);
        _mm256_storeu_ps(acc + 1 * NR + 8, c11);
        _mm256_storeu_ps(acc + 2 * NR, c20);
        _mm256_storeu_ps(acc + 2 * NR + 8, c21);
        _mm256_storeu_ps(acc + 3 * NR, c30);
        _mm256_storeu_ps(acc + 3 * NR + 8, c31);
        _mm256_storeu_ps(acc + 4 * NR, c40);
        _mm256_storeu_ps(acc + 4 * NR + 8, c41);
        _mm256_storeu_ps(acc + 5 * NR, c50);
        _mm256_storeu_ps(acc + 5 * NR + 8, c51);
    }
};

void sgemm_avx2(bool ta, bool tb, int m, int n, int k, float alpha, const float* a, int lda,
                const float* b, int ldb, float beta, float* c, int ldc) {
    gemm_blocked<MicroAvx2>(ta, tb, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable t = [] {
        KernelTable kt;
        kt.sgemm = &sgemm_avx2;
        kt.reduce_sum = &ew_reduce_sum;
        kt.reduce_max = &ew_reduce_max;
        kt.axpy = &ew_axpy;
        kt.scale_inplace = &ew_scale;
        kt.leaky_relu = &ew_leaky_relu;
        kt.leaky_relu_grad = &ew_leaky_relu_grad;
        kt.adam_step = &ew_adam_step;
        kt.pairwise_sqdist = &ew_pairwise_sqdist;
        return kt;
    }();
    return t;
}

}  // namespace mdod::kern::detail

#else

#include "table.hpp"

namespace mdod::kern::detail {
const KernelTable& avx2_table() { return scalar_table(); }
}  // namespace mdod::kern::detail

#endif
