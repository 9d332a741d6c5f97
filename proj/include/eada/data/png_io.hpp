#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eada::data {

/// Writes an 8-bit RGB PNG (no alpha, no interlacing) from channel-planar
/// (CHW) pixel bytes.
void write_png_rgb(const std::string& path, const uint8_t* chw, int height, int width);

/// Reads an 8-bit RGB PNG into channel-planar bytes; rejects any other format.
std::vector<uint8_t> read_png_rgb(const std::string& path, int expect_height, int expect_width);

/// Same, but accepts any image size and reports it back.
std::vector<uint8_t> read_png_rgb_any(const std::string& path, int& height, int& width);

}  // namespace eada::data
