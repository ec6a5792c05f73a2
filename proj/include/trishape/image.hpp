#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace trishape {

/// 8-bit grayscale raster, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width && y < height; }
};

/// Foreground/background raster, row-major.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    BinaryMask() = default;
    BinaryMask(int w, int h);

    bool at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool on = true) { bits[static_cast<std::size_t>(y) * width + x] = on ? 1 : 0; }
    std::size_t count() const;
};

/// Parses binary (P5) and ASCII (P2) PGM with maxval <= 255.
GrayImage parse_pgm(std::string_view bytes);
GrayImage load_pgm(const std::filesystem::path& path);

/// Nonzero pixels are foreground.
BinaryMask mask_from_image(const GrayImage& image);
BinaryMask load_mask(const std::filesystem::path& path);

/// Writes binary P5.
void save_pgm(const GrayImage& image, const std::filesystem::path& path);
std::string encode_pgm(const GrayImage& image);

}  // namespace trishape
