#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace traysight {

/// Axis-aligned pixel rectangle. `x`,`y` is the top-left corner.
struct Rect {
    int x = 0;
    int y = 0;
    int w = 1;
    int h = 1;

    bool operator==(const Rect&) const = default;
};

/// Throws InvalidArgument unless x,y >= 0 and w,h >= 1.
void validate(const Rect& r);
std::string to_string(const Rect& r);

/// 8-bit single-channel raster, row-major. Immutable after construction.
class GrayImage {
public:
    GrayImage(int width, int height, std::vector<std::uint8_t> pixels);
    /// Uniform image.
    GrayImage(int width, int height, std::uint8_t fill);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return pixels_.size(); }

    std::uint8_t at(int x, int y) const {
        return pixels_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
                       static_cast<std::size_t>(x)];
    }
    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
    std::span<const std::uint8_t> row(int y) const;

    bool contains(const Rect& r) const noexcept;

    bool operator==(const GrayImage&) const = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> pixels_;
};

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Rgb&) const = default;
};

/// Mutable 8-bit RGB raster, used for rendered output (tray maps).
class RgbImage {
public:
    RgbImage(int width, int height, Rgb fill = {});

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    Rgb at(int x, int y) const;
    void set(int x, int y, Rgb c);
    /// Fills the part of `r` that lies inside the image.
    void fill(const Rect& r, Rgb c);

    /// Interleaved RGB bytes, row-major.
    std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> bytes_;
};

/// 256-bin intensity histogram; index is the intensity value.
struct Histogram256 {
    std::array<std::uint64_t, 256> bins{};

    std::uint64_t total() const noexcept;
    bool operator==(const Histogram256&) const = default;
};

/// BT.601 luma with integer round-half-up.
std::uint8_t to_gray(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept;

/// Returns the `r.w` x `r.h` sub-image at `r`; throws OutOfBounds if `r`
/// does not lie fully inside `img`.
GrayImage crop(const GrayImage& img, const Rect& r);

Histogram256 histogram(const GrayImage& img);
/// Histogram of the region `r` without materializing the crop.
Histogram256 histogram(const GrayImage& img, const Rect& r);

// Binary PNM (P5 / P6, maxval 255). Header comments are accepted.

/// Decodes a P5 or P6 byte buffer; P6 is converted to gray with to_gray.
GrayImage decode_pnm(std::string_view bytes);
std::string encode_pgm(const GrayImage& img);
std::string encode_ppm(const RgbImage& img);

GrayImage load_gray_image(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const GrayImage& img);
void save_ppm(const std::filesystem::path& path, const RgbImage& img);

}  // namespace traysight
