#include "mdod/radar/radar_sim.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "mdod/mathutil.hpp"

namespace mdod::radar {

namespace {

constexpr int kScatterersPerBlade = 32;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// In-place iterative radix-2 DIT FFT, X_k = sum_m x_m exp(-j 2 pi k m / n).
void fft_radix2(std::vector<std::complex<double>>& x) {
    const size_t n = x.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = -kTwoPi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t j = 0; j < len / 2; ++j) {
                const auto u = x[i + j];
                const auto v = x[i + j + len / 2] * w;
                x[i + j] = u + v;
                x[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

void dft(std::vector<std::complex<double>>& x) {
    const size_t n = x.size();
    if (std::has_single_bit(n)) {
        fft_radix2(x);
        return;
    }
    std::vector<std::complex<double>> out(n);
    for (size_t k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (size_t m = 0; m < n; ++m) {
            const double ang = -kTwoPi * static_cast<double>(k * m) / static_cast<double>(n);
            acc += x[m] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    x = std::move(out);
}

}  // namespace

void RadarParams::validate() const {
    if (carrier_freq <= 0.0) throw InvalidConfig("carrier_freq must be > 0");
    if (prf <= 0.0) throw InvalidConfig("prf must be > 0");
    if (pulses_per_burst <= 0 || bursts <= 0) throw InvalidConfig("burst geometry must be positive");
    if (pulses_per_burst != bursts)
        throw InvalidConfig("pulses_per_burst must equal bursts (square covariance feature)");
}

double max_doppler_hz(const RadarParams& radar, double rpm, double blade_len, double bulk_speed) {
    const double lambda = radar.wavelength();
    const double omega = kTwoPi * rpm / 60.0;
    return 2.0 * omega * blade_len / lambda + 2.0 * std::abs(bulk_speed) / lambda;
}

void ClassSpec::validate(const RadarParams& radar) const {
    static constexpr int kBladeMap[4] = {1, 2, 4, 6};
    if (class_id < 1 || class_id > 4) throw InvalidConfig("class_id must be in 1..4");
    if (blade_count != kBladeMap[class_id - 1])
        throw InvalidConfig("class_id/blade_count mapping must be 1->1, 2->2, 3->4, 4->6");
    if (blade_len_range[0] > blade_len_range[1] || rpm_range[0] > rpm_range[1] ||
        bulk_speed_range[0] > bulk_speed_range[1])
        throw InvalidConfig("parameter ranges must be non-empty");
    const double worst = max_doppler_hz(
        radar, rpm_range[1], blade_len_range[1],
        std::max(std::abs(bulk_speed_range[0]), std::abs(bulk_speed_range[1])));
    if (worst >= radar.prf / 2.0)
        throw AmbiguousDoppler("class parameter ranges exceed the unambiguous Doppler span");
}

std::array<ClassSpec, 4> default_classes() {
    std::array<ClassSpec, 4> classes;
    static constexpr int kBladeMap[4] = {1, 2, 4, 6};
    for (int i = 0; i < 4; ++i) {
        classes[i].class_id = i + 1;
        classes[i].blade_count = kBladeMap[i];
    }
    return classes;
}

TargetParams sample_target_params(const ClassSpec& spec, Rng& rng) {
    TargetParams t;
    t.blade_count = spec.blade_count;
    t.blade_len = rng.uniform(spec.blade_len_range[0], spec.blade_len_range[1]);
    t.rpm = rng.uniform(spec.rpm_range[0], spec.rpm_range[1]);
    t.bulk_speed = rng.uniform(spec.bulk_speed_range[0], spec.bulk_speed_range[1]);
    t.initial_phase = rng.uniform(0.0, kTwoPi);
    return t;
}

IqSeries synth_iq(const RadarParams& radar, const TargetParams& target, Rng& rng) {
    radar.validate();
    if (max_doppler_hz(radar, target.rpm, target.blade_len, target.bulk_speed) >= radar.prf / 2.0)
        throw AmbiguousDoppler("target Doppler exceeds prf/2");

    const size_t n_samples = static_cast<size_t>(radar.bursts) * radar.pulses_per_burst;
    const double lambda = radar.wavelength();
    const double f_bulk = 2.0 * target.bulk_speed / lambda;
    const double omega = kTwoPi * target.rpm / 60.0;
    const int n_blades = target.blade_count;
    const int p_scat = kScatterersPerBlade;
    const double phase_scale = 2.0 * kTwoPi / lambda;  // 4 pi / lambda

    IqSeries iq;
    iq.samples.resize(n_samples);
    const bool noiseless = std::isinf(radar.snr_db);
    const double noise_sigma2 = noiseless ? 0.0 : std::pow(10.0, -radar.snr_db / 10.0);
    const double noise_amp = std::sqrt(noise_sigma2 / 2.0);

    for (size_t m = 0; m < n_samples; ++m) {
        const double t = static_cast<double>(m) / radar.prf;
        std::complex<double> blades(0.0, 0.0);
        for (int n = 1; n <= n_blades; ++n) {
            const double blade_angle = omega * t + kTwoPi * n / n_blades + target.initial_phase;
            const double cos_angle = std::cos(blade_angle);
            for (int p = 1; p <= p_scat; ++p) {
                const double radius = static_cast<double>(p) * target.blade_len / p_scat;
                blades += std::polar(1.0 / p_scat, phase_scale * radius * cos_angle);
            }
        }
        const std::complex<double> carrier = std::polar(1.0, kTwoPi * f_bulk * t);
        std::complex<double> s = carrier * (1.0 + blades);
        if (!noiseless) s += std::complex<double>(noise_amp * rng.normal(), noise_amp * rng.normal());
        iq.samples[m] = s;
    }
    return iq;
}

SignatureSample iq_to_signature(const IqSeries& iq, const RadarParams& radar) {
    radar.validate();
    const size_t expected = static_cast<size_t>(radar.bursts) * radar.pulses_per_burst;
    if (iq.samples.size() != expected)
        throw LengthMismatch("IQ length does not match burst geometry");

    const int nb = radar.bursts;
    const int np = radar.pulses_per_burst;
    SignatureSample out;
    out.spectrogram.resize(expected);
    std::vector<std::complex<double>> row(np);
    for (int b = 0; b < nb; ++b) {
        for (int p = 0; p < np; ++p) row[p] = iq.samples[static_cast<size_t>(b) * np + p];
        dft(row);
        // fftshift: display column c holds frequency bin (c + np/2) mod np.
        for (int c = 0; c < np; ++c) {
            const int k = (c + np / 2) % np;
            out.spectrogram[static_cast<size_t>(b) * np + c] = static_cast<float>(std::abs(row[k]));
        }
    }
    return out;
}

std::vector<SignatureSample> generate_dataset(const RadarParams& radar,
                                              std::span<const ClassSpec> classes, int per_class,
                                              uint64_t seed, unsigned jobs) {
    radar.validate();
    for (const auto& spec : classes) spec.validate(radar);
    if (per_class < 1) throw InvalidConfig("per_class must be >= 1");

    const size_t total = classes.size() * static_cast<size_t>(per_class);
    std::vector<SignatureSample> samples(total);
    parallel_for(total, jobs, [&](size_t idx) {
        const size_t ci = idx / static_cast<size_t>(per_class);
        const ClassSpec& spec = classes[ci];
        Rng param_rng(derive_seed(seed, "target", idx));
        TargetParams target = sample_target_params(spec, param_rng);
        target.noise_seed = derive_seed(seed, "noise", idx);
        Rng noise_rng(target.noise_seed);
        SignatureSample sig = iq_to_signature(synth_iq(radar, target, noise_rng), radar);
        sig.meta.target = target;
        sig.meta.class_id = spec.class_id;
        sig.meta.sample_id = idx;
        samples[idx] = std::move(sig);
    });
    return samples;
}

}  // namespace mdod::radar
