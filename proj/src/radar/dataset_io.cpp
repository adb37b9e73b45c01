#include "mdod/radar/dataset_io.hpp"

#include <bit>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "mdod/mathutil.hpp"

static_assert(std::endian::native == std::endian::little,
              "MDSIG1 container is little-endian; big-endian hosts are unsupported");

namespace mdod::radar {

using nlohmann::json;

namespace {

json radar_to_json(const RadarParams& r) {
    return json{{"carrier_freq_hz", r.carrier_freq},
                {"prf_hz", r.prf},
                {"pulses_per_burst", r.pulses_per_burst},
                {"bursts", r.bursts},
                {"snr_db", r.snr_db}};
}

RadarParams radar_from_json(const json& j) {
    RadarParams r;
    r.carrier_freq = j.at("carrier_freq_hz").get<double>();
    r.prf = j.at("prf_hz").get<double>();
    r.pulses_per_burst = j.at("pulses_per_burst").get<int>();
    r.bursts = j.at("bursts").get<int>();
    r.snr_db = j.at("snr_db").get<double>();
    return r;
}

json class_to_json(const ClassSpec& c) {
    return json{{"class_id", c.class_id},
                {"blade_count", c.blade_count},
                {"blade_len_m", {c.blade_len_range[0], c.blade_len_range[1]}},
                {"rpm", {c.rpm_range[0], c.rpm_range[1]}},
                {"bulk_speed_mps", {c.bulk_speed_range[0], c.bulk_speed_range[1]}}};
}

ClassSpec class_from_json(const json& j) {
    ClassSpec c;
    c.class_id = j.at("class_id").get<int>();
    c.blade_count = j.at("blade_count").get<int>();
    c.blade_len_range = {j.at("blade_len_m")[0].get<double>(), j.at("blade_len_m")[1].get<double>()};
    c.rpm_range = {j.at("rpm")[0].get<double>(), j.at("rpm")[1].get<double>()};
    c.bulk_speed_range = {j.at("bulk_speed_mps")[0].get<double>(),
                          j.at("bulk_speed_mps")[1].get<double>()};
    return c;
}

}  // namespace

void write_dataset(const std::filesystem::path& dir, const Dataset& ds) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create dataset directory: " + dir.string());

    json manifest;
    manifest["format"] = "MDSIG1";
    manifest["seed"] = ds.seed;
    manifest["radar"] = radar_to_json(ds.radar);
    manifest["classes"] = json::array();
    for (const auto& c : ds.classes) manifest["classes"].push_back(class_to_json(c));
    manifest["samples"] = json::array();
    for (const auto& s : ds.samples) {
        manifest["samples"].push_back(json{{"sample_id", s.meta.sample_id},
                                           {"class_id", s.meta.class_id},
                                           {"blade_count", s.meta.target.blade_count},
                                           {"blade_len", s.meta.target.blade_len},
                                           {"rpm", s.meta.target.rpm},
                                           {"bulk_speed", s.meta.target.bulk_speed},
                                           {"initial_phase", s.meta.target.initial_phase},
                                           {"noise_seed", s.meta.target.noise_seed}});
    }

    {
        std::ofstream f(dir / "manifest.json");
        if (!f) throw IoError("cannot write manifest.json");
        f << manifest.dump(2) << "\n";
    }
    {
        std::ofstream f(dir / "signatures.f32", std::ios::binary);
        if (!f) throw IoError("cannot write signatures.f32");
        for (const auto& s : ds.samples) {
            f.write(reinterpret_cast<const char*>(s.spectrogram.data()),
                    static_cast<std::streamsize>(s.spectrogram.size() * sizeof(float)));
        }
        if (!f) throw IoError("short write to signatures.f32");
    }
}

Dataset read_dataset(const std::filesystem::path& dir) {
    std::ifstream mf(dir / "manifest.json");
    if (!mf) throw IoError("cannot open manifest.json in " + dir.string());
    json manifest;
    mf >> manifest;
    if (manifest.at("format").get<std::string>() != "MDSIG1")
        throw IoError("unsupported dataset format version");

    Dataset ds;
    ds.seed = manifest.at("seed").get<uint64_t>();
    ds.radar = radar_from_json(manifest.at("radar"));
    for (const auto& cj : manifest.at("classes")) ds.classes.push_back(class_from_json(cj));

    const size_t plane = static_cast<size_t>(ds.radar.bursts) * ds.radar.pulses_per_burst;
    const auto& samples_meta = manifest.at("samples");
    ds.samples.resize(samples_meta.size());

    std::ifstream bf(dir / "signatures.f32", std::ios::binary);
    if (!bf) throw IoError("cannot open signatures.f32");
    for (size_t i = 0; i < ds.samples.size(); ++i) {
        const auto& sj = samples_meta[i];
        auto& s = ds.samples[i];
        s.meta.sample_id = sj.at("sample_id").get<uint64_t>();
        s.meta.class_id = sj.at("class_id").get<int>();
        s.meta.target.blade_count = sj.at("blade_count").get<int>();
        s.meta.target.blade_len = sj.at("blade_len").get<double>();
        s.meta.target.rpm = sj.at("rpm").get<double>();
        s.meta.target.bulk_speed = sj.at("bulk_speed").get<double>();
        s.meta.target.initial_phase = sj.at("initial_phase").get<double>();
        s.meta.target.noise_seed = sj.at("noise_seed").get<uint64_t>();
        s.spectrogram.resize(plane);
        bf.read(reinterpret_cast<char*>(s.spectrogram.data()),
                static_cast<std::streamsize>(plane * sizeof(float)));
        if (!bf) throw IoError("signatures.f32 truncated");
    }
    return ds;
}

uint64_t dataset_checksum(const Dataset& ds) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& s : ds.samples)
        h = fnv1a64(s.spectrogram.data(), s.spectrogram.size() * sizeof(float), h);
    return h;
}

std::string checksum_hex(uint64_t checksum) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(checksum));
    return std::string(buf);
}

}  // namespace mdod::radar
