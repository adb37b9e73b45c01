#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "mdod/kernels/kernels.hpp"
#include "mdod/rng.hpp"

using namespace mdod;
using kern::Isa;

namespace {

std::vector<float> random_vec(size_t n, Rng& rng) {
    std::vector<float> v(n);
    for (auto& x : v) x = static_cast<float>(rng.normal());
    return v;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> isas = {Isa::Scalar};
    if (kern::supported(Isa::Avx2)) isas.push_back(Isa::Avx2);
    if (kern::supported(Isa::Avx512)) isas.push_back(Isa::Avx512);
    return isas;
}

struct IsaGuard {
    Isa saved;
    IsaGuard() : saved(kern::active()) {}
    ~IsaGuard() { kern::select(saved); }
};

// f64 reference for one GEMM case.
std::vector<float> gemm_oracle(bool ta, bool tb, int m, int n, int k, float alpha,
                               const std::vector<float>& a, int lda, const std::vector<float>& b,
                               int ldb, float beta, const std::vector<float>& c0, int ldc) {
    std::vector<double> ad(a.begin(), a.end()), bd(b.begin(), b.end());
    std::vector<double> cd(c0.begin(), c0.end());
    kern::dgemm_ref(ta, tb, m, n, k, alpha, ad.data(), lda, bd.data(), ldb, beta, cd.data(), ldc);
    std::vector<float> out(cd.size());
    for (size_t i = 0; i < cd.size(); ++i) out[i] = static_cast<float>(cd[i]);
    return out;
}

}  // namespace

TEST_CASE("sgemm matches f64 oracle across ISAs, shapes and transposes") {
    IsaGuard guard;
    Rng rng(7);
    struct Shape {
        int m, n, k;
        bool ta, tb;
    };
    const Shape shapes[] = {
        {1, 1, 1, false, false},   {3, 5, 2, false, false},  {8, 48, 256, false, false},
        {17, 33, 70, false, false}, {6, 16, 25, false, false}, {32, 1024, 400, false, false},
        {13, 7, 9, true, false},   {13, 7, 9, false, true},  {13, 7, 9, true, true},
        {129, 130, 131, false, false}, {64, 64, 1, false, false}, {2, 300, 8192 % 600 + 3, false, true},
    };
    for (const auto& s : shapes) {
        const int lda = s.ta ? s.m : s.k;
        const int ldb = s.tb ? s.k : s.n;
        const int ldc = s.n;
        auto a = random_vec(static_cast<size_t>(s.ta ? s.k : s.m) * lda, rng);
        auto b = random_vec(static_cast<size_t>(s.tb ? s.n : s.k) * ldb, rng);
        auto c0 = random_vec(static_cast<size_t>(s.m) * ldc, rng);
        for (float alpha : {1.0f, 0.5f}) {
            for (float beta : {0.0f, 1.0f}) {
                auto want = gemm_oracle(s.ta, s.tb, s.m, s.n, s.k, alpha, a, lda, b, ldb, beta,
                                        c0, ldc);
                for (Isa isa : available_isas()) {
                    kern::select(isa);
                    auto c = c0;
                    kern::sgemm(s.ta, s.tb, s.m, s.n, s.k, alpha, a.data(), lda, b.data(), ldb,
                                beta, c.data(), ldc);
                    double max_err = 0.0, scale = 1.0;
                    for (size_t i = 0; i < c.size(); ++i) {
                        max_err = std::max(max_err, std::abs(double(c[i]) - double(want[i])));
                        scale = std::max(scale, std::abs(double(want[i])));
                    }
                    INFO("isa=", kern::isa_name(isa), " m=", s.m, " n=", s.n, " k=", s.k,
                         " ta=", s.ta, " tb=", s.tb);
                    CHECK(max_err / scale < 2e-5);
                }
            }
        }
    }
}

TEST_CASE("vector variants agree with scalar reference on elementwise kernels") {
    IsaGuard guard;
    Rng rng(11);
    const size_t n = 1237;
    auto x = random_vec(n, rng);
    auto y0 = random_vec(n, rng);

    for (Isa isa : available_isas()) {
        kern::select(isa);
        CAPTURE(kern::isa_name(isa));

        CHECK(kern::reduce_sum(x.data(), n) ==
              doctest::Approx([&] {
                  kern::select(Isa::Scalar);
                  return kern::reduce_sum(x.data(), n);
              }()).epsilon(1e-4));
        kern::select(isa);
        CHECK(kern::reduce_max(x.data(), n) == [&] {
            kern::select(Isa::Scalar);
            return kern::reduce_max(x.data(), n);
        }());

        kern::select(isa);
        auto y = y0;
        kern::axpy(n, 0.37f, x.data(), y.data());
        kern::select(Isa::Scalar);
        auto yref = y0;
        kern::axpy(n, 0.37f, x.data(), yref.data());
        for (size_t i = 0; i < n; ++i) CHECK(y[i] == doctest::Approx(yref[i]).epsilon(1e-6));

        kern::select(isa);
        std::vector<float> lr(n), lrg(n);
        kern::leaky_relu(n, 0.1f, x.data(), lr.data());
        kern::leaky_relu_grad(n, 0.1f, lr.data(), y0.data(), lrg.data());
        for (size_t i = 0; i < n; ++i) {
            CHECK(lr[i] == (x[i] > 0 ? x[i] : 0.1f * x[i]));
            CHECK(lrg[i] == (lr[i] > 0 ? y0[i] : 0.1f * y0[i]));
        }
    }
}

TEST_CASE("adam kernel: zero grads with zero decay leave params unchanged") {
    Rng rng(3);
    const size_t n = 257;
    auto w0 = random_vec(n, rng);
    auto w = w0;
    std::vector<float> m(n, 0.0f), v(n, 0.0f), g(n, 0.0f);
    kern::adam_step(n, 1e-3f, 0.9f, 0.999f, 1e-8f, 0.0f, 10.0f, 1000.0f, w.data(), m.data(),
                    v.data(), g.data());
    for (size_t i = 0; i < n; ++i) CHECK(w[i] == w0[i]);
}

TEST_CASE("adam kernel: zero grads with decay shrink by lr*decay") {
    std::vector<float> w{2.0f}, m{0.0f}, v{0.0f}, g{0.0f};
    kern::adam_step(1, 0.1f, 0.9f, 0.999f, 1e-8f, 0.5f, 10.0f, 1000.0f, w.data(), m.data(),
                    v.data(), g.data());
    CHECK(w[0] == doctest::Approx(2.0f * (1.0f - 0.1f * 0.5f)));
}

TEST_CASE("pairwise_sqdist agrees across ISAs") {
    IsaGuard guard;
    Rng rng(5);
    const size_t na = 19, nb = 23, d = 37;
    auto a = random_vec(na * d, rng);
    auto b = random_vec(nb * d, rng);
    kern::select(Isa::Scalar);
    std::vector<float> ref(na * nb);
    kern::pairwise_sqdist(a.data(), na, b.data(), nb, d, ref.data());
    for (Isa isa : available_isas()) {
        kern::select(isa);
        std::vector<float> out(na * nb);
        kern::pairwise_sqdist(a.data(), na, b.data(), nb, d, out.data());
        for (size_t i = 0; i < out.size(); ++i)
            CHECK(out[i] == doctest::Approx(ref[i]).epsilon(1e-5));
    }
}
