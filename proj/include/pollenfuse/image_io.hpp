#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace pollenfuse {

/// 8-bit RGB image, interleaved row-major.
struct ImageU8 {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> data;  // height * width * 3

  std::uint8_t& at(int y, int x, int c) { return data[(y * width + x) * 3 + c]; }
  std::uint8_t at(int y, int x, int c) const { return data[(y * width + x) * 3 + c]; }
};

/// Decodes a PNG or JPEG file (detected by magic bytes) to RGB.
/// Grayscale and alpha inputs are converted. Throws on unreadable or
/// unsupported files.
ImageU8 decode_image(const std::filesystem::path& path);

void write_png(const std::filesystem::path& path, const ImageU8& image);

}  // namespace pollenfuse
