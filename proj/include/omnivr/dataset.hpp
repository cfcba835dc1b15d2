#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "omnivr/image.hpp"
#include "omnivr/mobius.hpp"

namespace omnivr {

enum class DatasetMode { train_random, eval_fixed };

std::string_view to_string(DatasetMode mode);
DatasetMode parse_dataset_mode(std::string_view name);

// beta ~ U[0, 2pi), gamma ~ U[-pi/2, pi/2], s ~ U[0.5, 2].
inline constexpr double kZoomMin = 0.5;
inline constexpr double kZoomMax = 2.0;

/// Draws one command. Uses the engine's raw 64-bit output so the sequence is
/// identical on every standard library.
UserCommand sample_command(std::mt19937_64& rng);

struct DatasetRecord {
    std::string id;
    std::string source;               // file name of the HR input
    std::string lr_path;              // relative to the dataset root
    std::string hr_transformed_path;  // relative to the dataset root
    UserCommand command;
    MobiusMatrix matrix;
    int scale = 1;
    // Bicubic-upsampled LR transformed with the same command, scored against
    // the ground truth.
    double baseline_ws_psnr = 0.0;
    double baseline_ws_ssim = 0.0;
};

struct DatasetManifest {
    int scale = 1;
    std::uint64_t seed = 0;
    DatasetMode mode = DatasetMode::train_random;
    std::vector<DatasetRecord> records;

    nlohmann::json to_json() const;
    /// Throws InvalidInput when a record's matrix does not reproduce its
    /// command up to complex scale.
    static DatasetManifest from_json(const nlohmann::json& doc);
};

struct DatasetSample {
    Image lr;            // quantized to 8 bits
    Image ground_truth;  // quantized to 8 bits
    double baseline_ws_psnr = 0.0;
    double baseline_ws_ssim = 0.0;
};

/// LR = bicubic downsample of hr; ground truth = slerp transform of hr at
/// full resolution; baseline = slerp transform of the upsampled LR.
DatasetSample build_sample(const Image& hr, const UserCommand& cmd, int scale);

/// Command for image `index`: train mode draws sequentially from one engine
/// seeded with `seed`; eval mode seeds a fresh engine from (seed, index).
class CommandSchedule {
public:
    CommandSchedule(std::uint64_t seed, DatasetMode mode);
    UserCommand next(std::size_t index);

private:
    std::uint64_t seed_;
    DatasetMode mode_;
    std::mt19937_64 rng_;
};

/// Writes out/{lr,hr_t}/NNNN.png and out/manifest.json. Inputs are processed
/// in the given order. Throws DimensionError naming every input that is not
/// W = 2H or not divisible by scale.
DatasetManifest generate_dataset(const std::vector<std::filesystem::path>& hr_images,
                                 const std::filesystem::path& out_dir, int scale, std::uint64_t seed,
                                 DatasetMode mode);

DatasetManifest load_manifest(const std::filesystem::path& path);

} // namespace omnivr
