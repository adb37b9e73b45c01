// Blocked GEMM driver shared by every ISA translation unit. The TU supplies a
// Micro policy (register-tile microkernel); this file owns packing, cache
// blocking and the alpha/beta merge. Panels are zero-padded to full MR x NR
// tiles so the microkernel never sees an edge.

#include <algorithm>
#include <cstring>
#include <vector>

namespace {

constexpr int kKC = 256;  // K panel (packed A stays L1/L2 resident)
constexpr int kMC = 120;  // multiple of every MR in use (4, 6, 8)
constexpr int kNC = 960;  // multiple of every NR in use (8, 16, 48)

inline float load_a(bool ta, const float* a, int lda, int row, int kk) {
    return ta ? a[static_cast<size_t>(kk) * lda + row] : a[static_cast<size_t>(row) * lda + kk];
}

inline float load_b(bool tb, const float* b, int ldb, int kk, int col) {
    return tb ? b[static_cast<size_t>(col) * ldb + kk] : b[static_cast<size_t>(kk) * ldb + col];
}

template <int MR>
void pack_a_block(bool ta, const float* a, int lda, int row0, int k0, int mc, int kc, float* ap) {
    for (int ir = 0; ir < mc; ir += MR) {
        const int mr = std::min(MR, mc - ir);
        float* dst = ap + static_cast<size_t>(ir / MR) * kc * MR;
        for (int p = 0; p < kc; ++p) {
            for (int r = 0; r < MR; ++r) {
                dst[p * MR + r] =
                    (r < mr) ? load_a(ta, a, lda, row0 + ir + r, k0 + p) : 0.0f;
            }
        }
    }
}

template <int NR>
void pack_b_block(bool tb, const float* b, int ldb, int k0, int col0, int kc, int nc, float* bp) {
    for (int jr = 0; jr < nc; jr += NR) {
        const int nr = std::min(NR, nc - jr);
        float* dst = bp + static_cast<size_t>(jr / NR) * kc * NR;
        for (int p = 0; p < kc; ++p) {
            for (int c = 0; c < NR; ++c) {
                dst[p * NR + c] =
                    (c < nr) ? load_b(tb, b, ldb, k0 + p, col0 + jr + c) : 0.0f;
            }
        }
    }
}

template <class Micro>
void gemm_blocked(bool ta, bool tb, int m, int n, int k, float alpha, const float* a, int lda,
                  const float* b, int ldb, float beta, float* c, int ldc) {
    constexpr int MR = Micro::MR;
    constexpr int NR = Micro::NR;
    if (m <= 0 || n <= 0) return;
    if (k <= 0 || alpha == 0.0f) {
        for (int i = 0; i < m; ++i) {
            float* row = c + static_cast<size_t>(i) * ldc;
            if (beta == 0.0f) {
                std::memset(row, 0, sizeof(float) * static_cast<size_t>(n));
            } else if (beta != 1.0f) {
                for (int j = 0; j < n; ++j) row[j] *= beta;
            }
        }
        return;
    }

    thread_local std::vector<float> ap_buf;
    thread_local std::vector<float> bp_buf;
    ap_buf.resize(static_cast<size_t>((kMC / MR + 1) * MR) * kKC);
    bp_buf.resize(static_cast<size_t>((kNC / NR + 1) * NR) * kKC);
    alignas(64) float acc[MR * NR];

    for (int pc = 0; pc < k; pc += kKC) {
        const int kc = std::min(kKC, k - pc);
        const bool first = (pc == 0);
        for (int jc = 0; jc < n; jc += kNC) {
            const int nc = std::min(kNC, n - jc);
            pack_b_block<NR>(tb, b, ldb, pc, jc, kc, nc, bp_buf.data());
            for (int ic = 0; ic < m; ic += kMC) {
                const int mc = std::min(kMC, m - ic);
                pack_a_block<MR>(ta, a, lda, ic, pc, mc, kc, ap_buf.data());
                for (int jr = 0; jr < nc; jr += NR) {
                    const int nr = std::min(NR, nc - jr);
                    const float* bp = bp_buf.data() + static_cast<size_t>(jr / NR) * kc * NR;
                    for (int ir = 0; ir < mc; ir += MR) {
                        const int mr = std::min(MR, mc - ir);
                        const float* ap = ap_buf.data() + static_cast<size_t>(ir / MR) * kc * MR;
                        Micro::run(kc, ap, bp, acc);
                        for (int r = 0; r < mr; ++r) {
                            float* crow = c + static_cast<size_t>(ic + ir + r) * ldc + jc + jr;
                            const float* arow = acc + r * NR;
                            if (first) {
                                if (beta == 0.0f) {
                                    for (int q = 0; q < nr; ++q) crow[q] = alpha * arow[q];
                                } else {
                                    for (int q = 0; q < nr; ++q)
                                        crow[q] = beta * crow[q] + alpha * arow[q];
                                }
                            } else {
                                for (int q = 0; q < nr; ++q) crow[q] += alpha * arow[q];
                            }
                        }
                    }
                }
            }
        }
    }
}

}  // namespace
