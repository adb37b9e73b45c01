#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mdod/radar/radar_sim.hpp"

namespace mdod::radar {

// On-disk dataset container, format "MDSIG1":
//   <dir>/manifest.json    radar params, class specs, per-sample metadata,
//                          global seed, format version
//   <dir>/signatures.f32   little-endian float32, row-major,
//                          shape [n_samples, bursts, pulses_per_burst],
//                          order matching the manifest sample list
struct Dataset {
    RadarParams radar;
    std::vector<ClassSpec> classes;
    uint64_t seed = 0;
    std::vector<SignatureSample> samples;
};

void write_dataset(const std::filesystem::path& dir, const Dataset& ds);
Dataset read_dataset(const std::filesystem::path& dir);

// FNV-1a over the signature blob bytes, as written to disk.
uint64_t dataset_checksum(const Dataset& ds);
std::string checksum_hex(uint64_t checksum);

}  // namespace mdod::radar
