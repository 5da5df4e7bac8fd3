#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "dcsign/jpeg/types.hpp"

namespace dcsign {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

// Binary PGM (P5) / PPM (P6) with maxval 255. Throws UnsupportedFormat for
// other PNM variants and CorruptStream for malformed headers or short rasters.
jpeg::PixelImage parse_pnm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> format_pnm(const jpeg::PixelImage& img);

inline jpeg::PixelImage read_pnm(const std::filesystem::path& path) { return parse_pnm(read_file(path)); }
inline void write_pnm(const std::filesystem::path& path, const jpeg::PixelImage& img) {
  write_file(path, format_pnm(img));
}

}  // namespace dcsign
