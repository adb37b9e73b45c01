#pragma once

#include <cstddef>

// Internal dispatch table. Each ISA translation unit fills one instance; the
// dispatcher picks the active one at startup.

namespace mdod::kern::detail {

struct KernelTable {
    void (*sgemm)(bool, bool, int, int, int, float, const float*, int, const float*, int,
                  float, float*, int) = nullptr;
    float (*reduce_sum)(const float*, size_t) = nullptr;
    float (*reduce_max)(const float*, size_t) = nullptr;
    void (*axpy)(size_t, float, const float*, float*) = nullptr;
    void (*scale_inplace)(size_t, float, float*) = nullptr;
    void (*leaky_relu)(size_t, float, const float*, float*) = nullptr;
    void (*leaky_relu_grad)(size_t, float, const float*, const float*, float*) = nullptr;
    void (*adam_step)(size_t, float, float, float, float, float, float, float,
                      float*, float*, float*, const float*) = nullptr;
    void (*pairwise_sqdist)(const float*, size_t, const float*, size_t, size_t, float*) = nullptr;
};

const KernelTable& scalar_table();
const KernelTable& avx2_table();
const KernelTable& avx512_table();

}  // namespace mdod::kern::detail
