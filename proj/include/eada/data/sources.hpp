#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace eada::data {

/// MNIST in its published IDX layout: 28x28 grayscale bytes, row-major.
struct MnistData {
    std::vector<std::array<uint8_t, 28 * 28>> train_images, test_images;
    std::vector<uint8_t> train_labels, test_labels;
};

/// CIFAR-10 in its published binary layout: 32x32 RGB, channel-planar bytes.
struct Cifar10Data {
    std::vector<std::array<uint8_t, 3 * 32 * 32>> train_images, test_images;
    std::vector<uint8_t> train_labels, test_labels;
};

/// Reads train/t10k IDX files from `<root>/mnist/`. Throws on missing or
/// malformed files (magic and dimension headers are validated).
MnistData load_mnist(const std::string& root);

/// Reads data_batch_{1..5}.bin and test_batch.bin from
/// `<root>/cifar10/cifar-10-batches-bin/`.
Cifar10Data load_cifar10(const std::string& root);

}  // namespace eada::data
