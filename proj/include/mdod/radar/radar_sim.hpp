#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "mdod/errors.hpp"
#include "mdod/rng.hpp"

namespace mdod::radar {

inline constexpr double kSpeedOfLight = 299'792'458.0;

struct RadarParams {
    double carrier_freq = 5e9;  // Hz
    double prf = 50e3;          // Hz
    int pulses_per_burst = 64;
    int bursts = 64;
    double snr_db = 20.0;  // per-pulse SNR relative to the unit body return

    double wavelength() const { return kSpeedOfLight / carrier_freq; }
    double bin_width_hz() const { return prf / pulses_per_burst; }
    void validate() const;
};

struct ClassSpec {
    int class_id = 1;     // 1..4
    int blade_count = 1;  // fixed mapping: 1->1, 2->2, 3->4, 4->6
    std::array<double, 2> blade_len_range{4.5, 7.0};     // meters
    std::array<double, 2> rpm_range{450.0, 650.0};
    std::array<double, 2> bulk_speed_range{-100.0, 100.0};  // m/s

    void validate(const RadarParams& radar) const;
};

std::array<ClassSpec, 4> default_classes();

struct TargetParams {
    int blade_count = 0;
    double blade_len = 0.0;      // meters
    double rpm = 0.0;
    double bulk_speed = 0.0;     // m/s
    double initial_phase = 0.0;  // radians
    uint64_t noise_seed = 0;
};

struct IqSeries {
    std::vector<std::complex<double>> samples;  // bursts * pulses_per_burst, slow-time order
};

struct SampleMeta {
    TargetParams target;
    int class_id = 0;
    uint64_t sample_id = 0;
};

struct SignatureSample {
    // bursts x pulses_per_burst magnitudes, row r = periodogram of burst r,
    // zero Doppler centered at column pulses_per_burst/2.
    std::vector<float> spectrogram;
    SampleMeta meta;
};

// Uniform draws over the spec ranges; deterministic for a given rng state.
TargetParams sample_target_params(const ClassSpec& spec, Rng& rng);

// Rotating point-scatterer blade model over a unit-amplitude body return:
//   s(t_m) = exp(j 2 pi f_b t_m) * [1 + sum_{n=1..N} sum_{p=1..P} (1/P) *
//            exp(j (4 pi / lambda) r_p cos(Omega t_m + 2 pi n / N + phi0))] + w(t_m)
// with P = 32 scatterers per blade at radii r_p = p L / P, f_b = 2 v / lambda,
// Omega = 2 pi rpm / 60, and w complex white Gaussian sized by snr_db
// (snr_db = +inf disables noise). Throws AmbiguousDoppler when the tip
// Doppler plus bulk Doppler reaches prf/2.
IqSeries synth_iq(const RadarParams& radar, const TargetParams& target, Rng& rng);

// Reshape to bursts x pulses, per-burst DFT, zero-Doppler centering, magnitude.
// No window, magnitude (not power).
SignatureSample iq_to_signature(const IqSeries& iq, const RadarParams& radar);

// per_class samples for each class, unique sample ids, per-sample derived
// seeds; byte-identical output for identical (radar, classes, seed).
std::vector<SignatureSample> generate_dataset(const RadarParams& radar,
                                              std::span<const ClassSpec> classes, int per_class,
                                              uint64_t seed, unsigned jobs = 0);

// Tip Doppler + bulk Doppler (Hz) for ambiguity checks.
double max_doppler_hz(const RadarParams& radar, double rpm, double blade_len, double bulk_speed);

}  // namespace mdod::radar
