#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace eada::data {

constexpr int kImageSize = 32;
constexpr int kClasses = 10;
constexpr int kPatch = 5;
constexpr int kImageBytes = 3 * kImageSize * kImageSize;
/// shortcut_id sentinel for test samples, whose bias is the class average.
constexpr int kAverageShortcut = -1;

/// Training class colors plus the class-averaged test color. colors holds
/// exact bytes; mean_color is the real-valued channel mean (sums/n exposed so
/// downstream quantization can stay in integer arithmetic).
struct ColorPalette {
    std::vector<std::array<int, 3>> colors;
    std::array<double, 3> mean_color{};
    std::array<int64_t, 3> channel_sums{};

    int n() const { return static_cast<int>(colors.size()); }
};

/// Evenly spaced HSV hues at full saturation and value: hue_k = k*360/n.
ColorPalette make_palette(int n_classes);

enum class Benchmark { colored_mnist, colored_patch_cifar10, located_patch_cifar10 };

const char* benchmark_name(Benchmark b);
Benchmark benchmark_from_name(const std::string& name);

struct DatasetSpec {
    Benchmark benchmark = Benchmark::colored_mnist;
    double counter_example_rate = 0.0;
    double label_noise_rate = 0.0;
    uint64_t seed = 0;
    std::string source_root;
};

enum class Split { train, val, test };
const char* split_name(Split s);

struct BiasedSample {
    std::array<uint8_t, kImageBytes> image;  // channel-planar (CHW) bytes
    int16_t label = 0;                       // possibly noise-corrupted
    int16_t original_label = 0;              // label before noise
    int16_t shortcut_id = 0;                 // class whose bias was applied; -1 on test
    bool is_counter_example = false;
    bool is_noisy = false;
};

/// val and test are built from the same base test images: val biased like the
/// training distribution, test with the class-averaged bias.
struct BiasedDataset {
    DatasetSpec spec;
    ColorPalette palette;
    std::vector<std::array<int, 2>> positions;  // per-class patch position (patch benchmarks)
    std::vector<BiasedSample> train, val, test;

    const std::vector<BiasedSample>& split(Split s) const;
    std::vector<BiasedSample>& split(Split s);
};

// Bias primitives (exposed for tests; all quantization is exact integer
// arithmetic with round-half-up).

/// round(gray * (num/den) / 255): colorize one channel by a rational color value.
uint8_t colorize_byte(int gray, int64_t num, int64_t den);
/// Per-channel intensity-scaled chroma; gray is a 32x32 plane.
std::array<uint8_t, kImageBytes> colorize_image(const uint8_t* gray32,
                                                const std::array<int64_t, 3>& num, int64_t den);
/// Opaque kPatch x kPatch overwrite with round(num/den) per channel.
void apply_patch(std::array<uint8_t, kImageBytes>& image, const std::array<int64_t, 3>& num,
                 int64_t den, int row, int col);
/// Pixel-wise mean of the n single-position patch overlays (weight 1/n each).
void apply_average_patch(std::array<uint8_t, kImageBytes>& image,
                         const std::array<int, 3>& color,
                         const std::vector<std::array<int, 2>>& positions);
/// Zero-pad a 28x28 grayscale image to 32x32, centered.
std::array<uint8_t, kImageSize * kImageSize> pad_mnist(const uint8_t* gray28);
/// Fixed class -> patch position table for the located benchmark.
const std::vector<std::array<int, 2>>& located_positions();

/// Deterministic construction from (spec, base data); randomness is keyed per
/// (split, sample) so results are schedule-independent.
BiasedDataset generate_dataset(const DatasetSpec& spec);

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string to_string() const;
};

/// Structural audit: exact bias content per sample, counter-example and noise
/// statistics, test-split class independence. When the base data under
/// spec.source_root is readable every image is reconstructed and compared
/// byte-exactly; otherwise transform-consistency checks run on the images
/// alone and base-dependent checks are marked skipped.
VerificationReport verify_dataset(const BiasedDataset& ds);

/// PNG-per-sample layout `<root>/<split>/<index>.png` plus manifest.json.
void export_dataset(const BiasedDataset& ds, const std::string& root);
BiasedDataset import_dataset(const std::string& root);

/// Generic labeled-image ingestion for external data: `<root>/<class>/<file>.png`
/// (optionally nested under `train/`, `val/`, `test/` split directories).
/// Labels follow the sorted class-directory names of the train split; images of
/// any size are nearest-resized to 32x32. Bias metadata is neutral — such
/// datasets carry no synthesized shortcut and skip verification.
BiasedDataset import_image_folder(const std::string& root);

/// [0,1] floats from pixel bytes (CHW order preserved).
void image_to_float(const std::array<uint8_t, kImageBytes>& image, float* out);

}  // namespace eada::data
