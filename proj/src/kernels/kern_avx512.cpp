// AVX-512F kernels. 8x48 GEMM microkernel (24 zmm accumulators); elementwise
// loops compiled from the shared source under this TU's arch flags.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "table.hpp"

#include "gemm_driver.inl"
#include "elementwise.inl"

namespace mdod::kern::detail {

namespace {

struct MicroAvx512 {
    static constexpr int MR = 8;
    static constexpr int NR = 48;
    static void run(int kc, const float* ap, const float* bp, float* acc) {
        __m512 c0[3], c1[3], c2[3], c3[3], c4[3], c5[3], c6[3], c7[3];
        for (int q = 0; q < 3; ++q) {
            c0[q] = _mm512_setzero_ps();
            c1[q] = _mm512_setzero_ps();
            c2[q] = _mm512_setzero_ps();
            c3[q] = _mm512_setzero_ps();
            c4[q] = _mm512_setzero_ps();
            c5[q] = _mm512_setzero_ps();
            c6[q] = _mm512_setzero_ps();
            c7[q] = _mm512_setzero_ps();
        }
        for (int p = 0; p < kc; ++p) {
            const float* arow = ap + p * MR;
            const float* brow = bp + p * NR;
            const __m512 b0 = _mm512_loadu_ps(brow);
            const __m512 b1 = _mm512_loadu_ps(brow + 16);
            const __m512 b2 = _mm512_loadu_ps(brow + 32);
            __m512 av;
#define MDOD_K512_ROW(idx, creg)                      \
    av = _mm512_set1_ps(arow[idx]);                   \
    creg[0] = _mm512_fmadd_ps(av, b0, creg[0]);       \
    creg[1] = _mm512_fmadd_ps(av, b1, creg[1]);       \
    creg[2] = _mm512_fmadd_ps(av, b2, creg[2])
            MDOD_K512_ROW(0, c0);
            MDOD_K512_ROW(1, c1);
            MDOD_K512_ROW(2, c2);
            MDOD_K512_ROW(3, c3);
            MDOD_K512_ROW(4, c4);
            MDOD_K512_ROW(5, c5);
            MDOD_K512_ROW(6, c6);
            MDOD_K512_ROW(7, c7);
#undef MDOD_K512_ROW
        }
        __m512* rows[MR] = {c0, c1, c2, c3, c4, c5, c6, c7};
        for (int r = 0; r < MR; ++r) {
            _mm512_storeu_ps(acc + r * NR, rows[r][0]);
            _mm512_storeu_ps(acc + r * NR + 16, rows[r][1]);
            _mm512_storeu_ps(acc + r * NR + 32, rows[r][2]);
        }
    }
};

void sgemm_avx512(bool ta, bool tb, int m, int n, int k, float alpha, const float* a, int lda,
                  const float* b, int ldb, float beta, float* c, int ldc) {
    gemm_blocked<MicroAvx512>(ta, tb, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

}  // namespace

const KernelTable& avx512_table() {
    static const KernelTable t = [] {
        KernelTable kt;
        kt.sgemm = &sgemm_avx512;
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
const KernelTable& avx512_table() { return scalar_table(); }
}  // namespace mdod::kern::detail

#endif
