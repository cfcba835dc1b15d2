#include "omnivr/dataset.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "omnivr/errors.hpp"
#include "omnivr/metrics.hpp"
#include "omnivr/pipeline.hpp"
#include "omnivr/png_io.hpp"

namespace omnivr {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

std::string record_id(std::size_t index)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04zu", index);
    return buf;
}

} // namespace

std::string_view to_string(DatasetMode mode)
{
    return mode == DatasetMode::train_random ? "train-random" : "eval-fixed";
}

DatasetMode parse_dataset_mode(std::string_view name)
{
    if (name == "train-random")
        return DatasetMode::train_random;
    if (name == "eval-fixed")
        return DatasetMode::eval_fixed;
    throw ConfigError("dataset mode must be train-random or eval-fixed (got " + std::string(name) + ")");
}

UserCommand sample_command(std::mt19937_64& rng)
{
    UserCommand cmd;
    cmd.beta = kTwoPi * unit_uniform(rng);
    cmd.gamma = -kHalfPi + kPi * unit_uniform(rng);
    cmd.zoom = kZoomMin + (kZoomMax - kZoomMin) * unit_uniform(rng);
    return cmd;
}

CommandSchedule::CommandSchedule(std::uint64_t seed, DatasetMode mode) : seed_(seed), mode_(mode), rng_(seed) {}

UserCommand CommandSchedule::next(std::size_t index)
{
    if (mode_ == DatasetMode::train_random)
        return sample_command(rng_);
    const auto idx = static_cast<std::uint64_t>(index);
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
    std::mt19937_64 rng(seq);
    return sample_command(rng);
}

DatasetSample build_sample(const Image& hr, const UserCommand& cmd, int scale)
{
    require_erp(hr, "dataset HR image");
    if (!is_supported_factor(scale))
        throw ConfigError("dataset scale must be one of 1, 2, 4, 8, 16 (got " + std::to_string(scale) + ")");
    const MobiusMatrix m = from_command(cmd);
    DatasetSample sample;
    sample.lr = quantize_8bit(downsample_bicubic(hr, scale));
    sample.ground_truth = quantize_8bit(transform_image(hr, m, 1, Interpolator::slerp));
    const Image baseline = transform_image(sample.lr, m, scale, Interpolator::slerp);
    sample.baseline_ws_psnr = ws_psnr(sample.ground_truth, baseline);
    sample.baseline_ws_ssim = ws_ssim(sample.ground_truth, baseline);
    return sample;
}

json DatasetManifest::to_json() const
{
    json recs = json::array();
    for (const DatasetRecord& r : records) {
        recs.push_back({
            {"id", r.id},
            {"source", r.source},
            {"lr_path", r.lr_path},
            {"hr_transformed_path", r.hr_transformed_path},
            {"command", {{"beta", r.command.beta}, {"gamma", r.command.gamma}, {"zoom", r.command.zoom}}},
            {"matrix",
             {{"a", complex_json(r.matrix.a)},
              {"b", complex_json(r.matrix.b)},
              {"c", complex_json(r.matrix.c)},
              {"d", complex_json(r.matrix.d)}}},
            {"scale", r.scale},
            {"baseline", {{"interp", "slerp"}, {"ws_psnr", r.baseline_ws_psnr}, {"ws_ssim", r.baseline_ws_ssim}}},
        });
    }
    return {{"scale", scale}, {"seed", seed}, {"mode", std::string(omnivr::to_string(mode))}, {"records", recs}};
}

DatasetManifest DatasetManifest::from_json(const json& doc)
{
    DatasetManifest manifest;
    manifest.scale = doc.at("scale").get<int>();
    manifest.seed = doc.at("seed").get<std::uint64_t>();
    manifest.mode = parse_dataset_mode(doc.at("mode").get<std::string>());
    for (const json& r : doc.at("records")) {
        DatasetRecord rec;
        rec.id = r.at("id").get<std::string>();
        rec.source = r.at("source").get<std::string>();
        rec.lr_path = r.at("lr_path").get<std::string>();
        rec.hr_transformed_path = r.at("hr_transformed_path").get<std::string>();
        const json& c = r.at("command");
        rec.command = {c.at("beta").get<double>(), c.at("gamma").get<double>(), c.at("zoom").get<double>()};
        const json& m = r.at("matrix");
        rec.matrix = {complex_from(m.at("a")), complex_from(m.at("b")), complex_from(m.at("c")),
                      complex_from(m.at("d"))};
        rec.scale = r.at("scale").get<int>();
        rec.baseline_ws_psnr = r.at("baseline").at("ws_psnr").get<double>();
        rec.baseline_ws_ssim = r.at("baseline").at("ws_ssim").get<double>();
        if (!equal_up_to_scale(rec.matrix, from_command(rec.command)))
            throw InvalidInput("manifest record " + rec.id + ": matrix does not match its command");
        manifest.records.push_back(std::move(rec));
    }
    return manifest;
}

DatasetManifest generate_dataset(const std::vector<fs::path>& hr_images, const fs::path& out_dir, int scale,
                                 std::uint64_t seed, DatasetMode mode)
{
    if (!is_supported_factor(scale))
        throw ConfigError("dataset scale must be one of 1, 2, 4, 8, 16 (got " + std::to_string(scale) + ")");

    std::ostringstream bad;
    for (const fs::path& p : hr_images) {
        const auto [h, w] = png_dimensions(p);
        const auto s = static_cast<std::size_t>(scale);
        if (w != 2 * h || h % s != 0 || h / s < 2)
            bad << "\n  " << p.string() << " (" << h << "x" << w << ")";
    }
    if (!bad.str().empty())
        throw DimensionError("HR images must satisfy W = 2H with H divisible by " + std::to_string(scale) + ":" +
                             bad.str());

    fs::create_directories(out_dir / "lr");
    fs::create_directories(out_dir / "hr_t");

    DatasetManifest manifest;
    manifest.scale = scale;
    manifest.seed = seed;
    manifest.mode = mode;
    CommandSchedule schedule(seed, mode);
    for (std::size_t i = 0; i < hr_images.size(); ++i) {
        const Image hr = read_png(hr_images[i]);
        DatasetRecord rec;
        rec.id = record_id(i);
        rec.source = hr_images[i].filename().string();
        rec.lr_path = "lr/" + rec.id + ".png";
        rec.hr_transformed_path = "hr_t/" + rec.id + ".png";
        rec.command = schedule.next(i);
        rec.matrix = from_command(rec.command);
        rec.scale = scale;
        const DatasetSample sample = build_sample(hr, rec.command, scale);
        write_png(out_dir / rec.lr_path, sample.lr);
        write_png(out_dir / rec.hr_transformed_path, sample.ground_truth);
        rec.baseline_ws_psnr = sample.baseline_ws_psnr;
        rec.baseline_ws_ssim = sample.baseline_ws_ssim;
        manifest.records.push_back(std::move(rec));
    }

    std::ofstream out(out_dir / "manifest.json", std::ios::trunc);
    if (!out)
        throw IoError("cannot write " + (out_dir / "manifest.json").string());
    out << manifest.to_json().dump(2) << '\n';
    return manifest;
}

DatasetManifest load_manifest(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path.string());
    return DatasetManifest::from_json(json::parse(in));
}

} // namespace omnivr
