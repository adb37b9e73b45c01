#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner kernels behind the numeric stack. Every entry point has
// a scalar reference implementation plus AVX2 and AVX-512 variants; the best
// supported variant is selected once at startup via CPUID and can be forced
// with select() or the MDOD_KERNEL_ISA environment variable
// (scalar | avx2 | avx512). Variant outputs are equivalence-tested against
// the scalar reference; a run records the active ISA in its metadata.

namespace mdod::kern {

enum class Isa : int { Scalar = 0, Avx2 = 1, Avx512 = 2 };

const char* isa_name(Isa isa);
Isa best_supported();
Isa active();
bool supported(Isa isa);
void select(Isa isa);  // throws InvalidConfig if the ISA is unsupported here

// C (m x n) = alpha * op(A) * op(B) + beta * C, row-major.
// op(A) is m x k: A is stored m x k when !ta (lda >= k), k x m when ta.
// op(B) is k x n: B is stored k x n when !tb (ldb >= n), n x k when tb.
void sgemm(bool ta, bool tb, int m, int n, int k,
           float alpha, const float* a, int lda,
           const float* b, int ldb,
           float beta, float* c, int ldc);

// Scalar double GEMM; reference path for float64 gradcheck models and the
// oracle the float variants are tested against.
void dgemm_ref(bool ta, bool tb, int m, int n, int k,
               double alpha, const double* a, int lda,
               const double* b, int ldb,
               double beta, double* c, int ldc);

float reduce_sum(const float* x, size_t n);
float reduce_max(const float* x, size_t n);
double reduce_sum_f64(const double* x, size_t n);

// y += a * x
void axpy(size_t n, float a, const float* x, float* y);
void scale_inplace(size_t n, float a, float* x);

void leaky_relu(size_t n, float slope, const float* x, float* y);
// dx = dy * (out > 0 ? 1 : slope); valid because slope > 0 keeps sign(out) == sign(in).
void leaky_relu_grad(size_t n, float slope, const float* out, const float* dy, float* dx);

// One Adam step over a parameter buffer with decoupled weight decay.
// inv_bias1 = 1/(1-beta1^t), inv_bias2 = 1/(1-beta2^t).
void adam_step(size_t n, float lr, float beta1, float beta2, float eps, float decay,
               float inv_bias1, float inv_bias2,
               float* w, float* m, float* v, const float* g);

// Squared Euclidean distances: out[i*nb + j] = ||a_i - b_j||^2 for row sets
// a (na x d) and b (nb x d).
void pairwise_sqdist(const float* a, size_t na, const float* b, size_t nb, size_t d, float* out);

namespace detail {
struct KernelTable;
const KernelTable& table_for(Isa isa);
}  // namespace detail

}  // namespace mdod::kern
