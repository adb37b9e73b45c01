// Scalar reference kernels. Baseline ISA; the ground truth the vector
// variants are tested against.

#include "table.hpp"

#include "gemm_driver.inl"
#include "elementwise.inl"

namespace mdod::kern::detail {

namespace {

struct MicroScalar {
    static constexpr int MR = 4;
    static constexpr int NR = 8;
    static void run(int kc, const float* ap, const float* bp, float* acc) {
        for (int i = 0; i < MR * NR; ++i) acc[i] = 0.0f;
        for (int p = 0; p < kc; ++p) {
            const float* arow = ap + p * MR;
            const float* brow = bp + p * NR;
            for (int r = 0; r < MR; ++r) {
                const float av = arow[r];
                float* dst = acc + r * NR;
                for (int q = 0; q < NR; ++q) dst[q] += av * brow[q];
            }
        }
    }
};

void sgemm_scalar(bool ta, bool tb, int m, int n, int k, float alpha, const float* a, int lda,
                  const float* b, int ldb, float beta, float* c, int ldc) {
    gemm_blocked<MicroScalar>(ta, tb, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable t = [] {
        KernelTable kt;
        kt.sgemm = &sgemm_scalar;
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
