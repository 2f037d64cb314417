#include "traysight/imaging.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "text.hpp"
#include "traysight/error.hpp"

namespace traysight {

void validate(const Rect& r) {
    if (r.x < 0 || r.y < 0 || r.w < 1 || r.h < 1) {
        throw Error(ErrorCode::InvalidArgument, "rect " + to_string(r) + " needs x,y >= 0 and w,h >= 1");
    }
}

std::string to_string(const Rect& r) {
    return "{" + std::to_string(r.x) + "," + std::to_string(r.y) + "," + std::to_string(r.w) + "," +
           std::to_string(r.h) + "}";
}

namespace {

std::size_t checked_area(int width, int height, std::size_t channels = 1) {
    if (width < 1 || height < 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "image size " + std::to_string(width) + "x" + std::to_string(height));
    }
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * channels;
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (pixels_.size() != checked_area(width, height)) {
        throw Error(ErrorCode::InvalidArgument,
                    "pixel count " + std::to_string(pixels_.size()) + " != " + std::to_string(width) +
                        "x" + std::to_string(height));
    }
}

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height), pixels_(checked_area(width, height), fill) {}

std::span<const std::uint8_t> GrayImage::row(int y) const {
    return std::span<const std::uint8_t>(pixels_).subspan(
        static_cast<std::size_t>(y) * static_cast<std::size_t>(width_), static_cast<std::size_t>(width_));
}

bool GrayImage::contains(const Rect& r) const noexcept {
    return r.x >= 0 && r.y >= 0 && r.w >= 1 && r.h >= 1 &&
           static_cast<long long>(r.x) + r.w <= width_ && static_cast<long long>(r.y) + r.h <= height_;
}

RgbImage::RgbImage(int width, int height, Rgb fill)
    : width_(width), height_(height), bytes_(checked_area(width, height, 3)) {
    for (std::size_t i = 0; i < bytes_.size(); i += 3) {
        bytes_[i] = fill.r;
        bytes_[i + 1] = fill.g;
        bytes_[i + 2] = fill.b;
    }
}

Rgb RgbImage::at(int x, int y) const {
    const auto i = 3 * (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x));
    return {bytes_[i], bytes_[i + 1], bytes_[i + 2]};
}

void RgbImage::set(int x, int y, Rgb c) {
    const auto i = 3 * (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x));
    bytes_[i] = c.r;
    bytes_[i + 1] = c.g;
    bytes_[i + 2] = c.b;
}

void RgbImage::fill(const Rect& r, Rgb c) {
    const int x0 = std::max(r.x, 0);
    const int y0 = std::max(r.y, 0);
    const int x1 = std::min(r.x + r.w, width_);
    const int y1 = std::min(r.y + r.h, height_);
    for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) set(x, y, c);
    }
}

std::uint64_t Histogram256::total() const noexcept {
    std::uint64_t sum = 0;
    for (auto b : bins) sum += b;
    return sum;
}

std::uint8_t to_gray(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept {
    // Exact in integers: weights scaled by 1000, +500 rounds half up.
    const unsigned luma = (299u * r + 587u * g + 114u * b + 500u) / 1000u;
    return static_cast<std::uint8_t>(std::min(luma, 255u));
}

GrayImage crop(const GrayImage& img, const Rect& r) {
    if (!img.contains(r)) {
        throw Error(ErrorCode::OutOfBounds, "rect " + to_string(r) + " outside image " +
                                                std::to_string(img.width()) + "x" +
                                                std::to_string(img.height()));
    }
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(r.w) * static_cast<std::size_t>(r.h));
    for (int y = r.y; y < r.y + r.h; ++y) {
        auto src = img.row(y).subspan(static_cast<std::size_t>(r.x), static_cast<std::size_t>(r.w));
        out.insert(out.end(), src.begin(), src.end());
    }
    return {r.w, r.h, std::move(out)};
}

Histogram256 histogram(const GrayImage& img) {
    Histogram256 h;
    for (auto v : img.pixels()) ++h.bins[v];
    return h;
}

Histogram256 histogram(const GrayImage& img, const Rect& r) {
    if (!img.contains(r)) {
        throw Error(ErrorCode::OutOfBounds, "rect " + to_string(r) + " outside image " +
                                                std::to_string(img.width()) + "x" +
                                                std::to_string(img.height()));
    }
    Histogram256 h;
    for (int y = r.y; y < r.y + r.h; ++y) {
        for (auto v : img.row(y).subspan(static_cast<std::size_t>(r.x), static_cast<std::size_t>(r.w))) {
            ++h.bins[v];
        }
    }
    return h;
}

namespace {

struct PnmHeader {
    char kind = '5';
    int width = 0;
    int height = 0;
    std::size_t data_offset = 0;
};

class HeaderReader {
public:
    explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

    // Skips whitespace and '#' comments, then reads a decimal field.
    long long field(const char* name) {
        for (;;) {
            while (pos_ < bytes_.size() && std::isspace(static_cast<unsigned char>(bytes_[pos_]))) ++pos_;
            if (pos_ < bytes_.size() && bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
                continue;
            }
            break;
        }
        const auto start = pos_;
        long long v = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            v = v * 10 + (bytes_[pos_] - '0');
            if (v > std::numeric_limits<int>::max()) {
                throw Error(ErrorCode::MalformedHeader, std::string(name) + " too large");
            }
            ++pos_;
        }
        if (pos_ == start) throw Error(ErrorCode::MalformedHeader, std::string("expected ") + name);
        return v;
    }

    // Exactly one whitespace byte separates maxval from the raster.
    void raster_separator() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            throw Error(ErrorCode::MalformedHeader, "missing whitespace before raster");
        }
        ++pos_;
    }

    std::size_t pos() const noexcept { return pos_; }
    void skip(std::size_t n) noexcept { pos_ += n; }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

PnmHeader parse_header(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
        throw Error(ErrorCode::MalformedHeader, "expected magic P5 or P6");
    }
    PnmHeader h;
    h.kind = bytes[1];
    HeaderReader rd(bytes);
    rd.skip(2);
    const auto w = rd.field("width");
    const auto hh = rd.field("height");
    const auto maxval = rd.field("maxval");
    if (w < 1 || hh < 1) throw Error(ErrorCode::MalformedHeader, "zero image dimension");
    if (maxval != 255) {
        throw Error(ErrorCode::UnsupportedMaxval, "maxval " + std::to_string(maxval) + " (only 255)");
    }
    rd.raster_separator();
    h.width = static_cast<int>(w);
    h.height = static_cast<int>(hh);
    h.data_offset = rd.pos();
    return h;
}

std::string pnm_header(char kind, int width, int height) {
    return std::string("P") + kind + "\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
}

}  // namespace

GrayImage decode_pnm(std::string_view bytes) {
    const auto h = parse_header(bytes);
    const std::size_t channels = h.kind == '6' ? 3 : 1;
    const auto need = checked_area(h.width, h.height, channels);
    const auto have = bytes.size() - h.data_offset;
    if (have < need) {
        throw Error(ErrorCode::TruncatedData,
                    "expected " + std::to_string(need) + " raster bytes, got " + std::to_string(have));
    }
    auto raster = bytes.substr(h.data_offset, need);
    std::vector<std::uint8_t> px(checked_area(h.width, h.height));
    if (channels == 1) {
        std::transform(raster.begin(), raster.end(), px.begin(),
                       [](char c) { return static_cast<std::uint8_t>(c); });
    } else {
        for (std::size_t i = 0; i < px.size(); ++i) {
            px[i] = to_gray(static_cast<std::uint8_t>(raster[3 * i]), static_cast<std::uint8_t>(raster[3 * i + 1]),
                            static_cast<std::uint8_t>(raster[3 * i + 2]));
        }
    }
    return {h.width, h.height, std::move(px)};
}

std::string encode_pgm(const GrayImage& img) {
    auto out = pnm_header('5', img.width(), img.height());
    const auto px = img.pixels();
    out.append(reinterpret_cast<const char*>(px.data()), px.size());
    return out;
}

std::string encode_ppm(const RgbImage& img) {
    auto out = pnm_header('6', img.width(), img.height());
    const auto b = img.bytes();
    out.append(reinterpret_cast<const char*>(b.data()), b.size());
    return out;
}

GrayImage load_gray_image(const std::filesystem::path& path) {
    auto bytes = detail::read_file(path);
    try {
        return decode_pnm(bytes);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.detail());
    }
}

void save_pgm(const std::filesystem::path& path, const GrayImage& img) {
    detail::write_file(path, encode_pgm(img));
}

void save_ppm(const std::filesystem::path& path, const RgbImage& img) {
    detail::write_file(path, encode_ppm(img));
}

}  // namespace traysight
