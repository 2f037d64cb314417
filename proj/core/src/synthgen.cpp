#include "traysight/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "text.hpp"
#include "traysight/error.hpp"

namespace traysight {

namespace {

void check(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::InvariantViolation, what);
}

bool valid_intensity(double v) noexcept { return std::isfinite(v) && v >= 0.0 && v <= 255.0; }

std::uint8_t quantize(double v) noexcept {
    return static_cast<std::uint8_t>(std::floor(std::clamp(v, 0.0, 255.0) + 0.5));
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

// Draws one pixel per entry of `means`, row-major.
std::vector<std::uint8_t> render(const std::vector<double>& means, double sigma, std::mt19937_64& rng) {
    std::vector<std::uint8_t> px(means.size());
    if (sigma == 0.0) {
        std::transform(means.begin(), means.end(), px.begin(), quantize);
        return px;
    }
    std::normal_distribution<double> noise(0.0, sigma);
    for (std::size_t i = 0; i < means.size(); ++i) px[i] = quantize(means[i] + noise(rng));
    return px;
}

void fill_rect(std::vector<double>& means, int width, const Rect& r, double v) {
    for (int y = r.y; y < r.y + r.h; ++y) {
        auto row = means.begin() + static_cast<std::ptrdiff_t>(y) * width;
        std::fill(row + r.x, row + r.x + r.w, v);
    }
}

}  // namespace

void validate(const SceneSpec& spec, bool require_separable) {
    validate(spec.layout);
    check(spec.occupancy.size() == spec.layout.slot_count(),
          "occupancy has " + std::to_string(spec.occupancy.size()) + " entries, layout has " +
              std::to_string(spec.layout.slot_count()) + " slots");
    check(valid_intensity(spec.mu_with), "mu_with must lie in [0, 255]");
    check(valid_intensity(spec.mu_without), "mu_without must lie in [0, 255]");
    check(valid_intensity(spec.background), "background must lie in [0, 255]");
    check(std::isfinite(spec.sigma) && spec.sigma >= 0.0, "sigma must be >= 0");
    if (require_separable) check(spec.mu_with != spec.mu_without, "mu_with equals mu_without (not separable)");
}

TrayScene generate_tray(const SceneSpec& spec) {
    validate(spec);
    const auto& l = spec.layout;
    const int width = l.origin_x + l.cols * l.pitch_x;
    const int height = l.origin_y + l.rows * l.pitch_y;

    std::vector<double> means(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
                              spec.background);
    for (std::size_t i = 0; i < l.slot_count(); ++i) {
        fill_rect(means, width, slot_rect(l, i), spec.occupancy[i] ? spec.mu_with : spec.mu_without);
    }
    auto rng = make_engine(spec.seed, 0);
    return {GrayImage(width, height, render(means, spec.sigma, rng)), spec.occupancy};
}

void validate(const SocketSeriesSpec& spec) {
    validate(spec.roi);
    check(spec.count >= 1, "count must be >= 1");
    check(valid_intensity(spec.mu), "mu must lie in [0, 255]");
    check(valid_intensity(spec.background), "background must lie in [0, 255]");
    check(std::isfinite(spec.sigma) && spec.sigma >= 0.0, "sigma must be >= 0");
}

std::vector<GrayImage> generate_socket_series(const SocketSeriesSpec& spec) {
    validate(spec);
    const int width = 2 * spec.roi.x + spec.roi.w;
    const int height = 2 * spec.roi.y + spec.roi.h;
    std::vector<double> means(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
                              spec.background);
    fill_rect(means, width, spec.roi, spec.mu);

    std::vector<GrayImage> out;
    out.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) {
        auto rng = make_engine(spec.seed, static_cast<std::uint64_t>(i) + 1);
        out.emplace_back(width, height, render(means, spec.sigma, rng));
    }
    return out;
}

std::vector<LabelRecord> truth_records(std::string_view tray_id, const std::vector<bool>& occupancy) {
    std::vector<LabelRecord> out;
    out.reserve(occupancy.size());
    for (std::size_t i = 0; i < occupancy.size(); ++i) {
        out.push_back({std::string(tray_id) + ":" + std::to_string(i + 1), occupancy[i]});
    }
    return out;
}

namespace {

std::uint64_t require_u64(detail::KeyValueText& kv, std::string_view key) {
    const auto& text = kv.require(key);
    auto v = detail::parse_u64(text);
    if (!v) {
        throw Error(ErrorCode::InvalidValue,
                    "'" + std::string(key) + "' must be an unsigned integer, got '" + text + "'");
    }
    return *v;
}

std::vector<bool> parse_bits(const std::string& text) {
    std::vector<bool> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::InvalidValue, "occupancy must be a string of 0/1, got '" + text + "'");
        }
        bits.push_back(c == '1');
    }
    return bits;
}

}  // namespace

SceneManifest parse_scene_manifest(std::string_view text) {
    detail::KeyValueText kv(text);
    SceneManifest m;
    const auto kind = kv.take("kind").value_or("tray");
    if (auto id = kv.take("id")) {
        if (id->empty() || detail::split_ws(*id).size() != 1) {
            throw Error(ErrorCode::InvalidValue, "'id' must be a single token");
        }
        m.id = *id;
    }
    if (kind == "tray") {
        m.kind = SceneManifest::Kind::Tray;
        auto& s = m.tray;
        auto& l = s.layout;
        l.rows = kv.require_int("rows");
        l.cols = kv.require_int("cols");
        l.origin_x = kv.require_int("origin_x");
        l.origin_y = kv.require_int("origin_y");
        l.pitch_x = kv.require_int("pitch_x");
        l.pitch_y = kv.require_int("pitch_y");
        l.slot_w = kv.require_int("slot_w");
        l.slot_h = kv.require_int("slot_h");
        s.occupancy = parse_bits(kv.require("occupancy"));
        s.mu_with = kv.require_double("mu_with");
        s.mu_without = kv.require_double("mu_without");
        s.sigma = kv.require_double("sigma");
        s.background = kv.require_double("background");
        s.seed = require_u64(kv, "seed");
        kv.reject_unconsumed();
        validate(s);
    } else if (kind == "socket") {
        m.kind = SceneManifest::Kind::Socket;
        auto& s = m.socket;
        s.roi.x = kv.require_int("roi_x");
        s.roi.y = kv.require_int("roi_y");
        s.roi.w = kv.require_int("roi_w");
        s.roi.h = kv.require_int("roi_h");
        s.mu = kv.require_double("mu");
        s.sigma = kv.require_double("sigma");
        s.count = static_cast<std::size_t>(require_u64(kv, "count"));
        s.background = kv.require_double("background");
        s.seed = require_u64(kv, "seed");
        kv.reject_unconsumed();
        validate(s);
    } else {
        throw Error(ErrorCode::InvalidValue, "'kind' must be tray or socket, got '" + kind + "'");
    }
    return m;
}

std::string format_scene_manifest(const SceneManifest& m) {
    using detail::format_decimal;
    std::string out;
    if (m.kind == SceneManifest::Kind::Tray) {
        const auto& s = m.tray;
        std::string bits;
        for (bool b : s.occupancy) bits.push_back(b ? '1' : '0');
        out += "kind = tray\nid = " + m.id + "\n";
        out += format_layout(s.layout);
        out += "occupancy = " + bits + "\n";
        out += "mu_with = " + format_decimal(s.mu_with) + "\n";
        out += "mu_without = " + format_decimal(s.mu_without) + "\n";
        out += "sigma = " + format_decimal(s.sigma) + "\n";
        out += "background = " + format_decimal(s.background) + "\n";
        out += "seed = " + std::to_string(s.seed) + "\n";
    } else {
        const auto& s = m.socket;
        out += "kind = socket\nid = " + m.id + "\n";
        out += "roi_x = " + std::to_string(s.roi.x) + "\nroi_y = " + std::to_string(s.roi.y) +
               "\nroi_w = " + std::to_string(s.roi.w) + "\nroi_h = " + std::to_string(s.roi.h) + "\n";
        out += "mu = " + format_decimal(s.mu) + "\n";
        out += "sigma = " + format_decimal(s.sigma) + "\n";
        out += "count = " + std::to_string(s.count) + "\n";
        out += "background = " + format_decimal(s.background) + "\n";
        out += "seed = " + std::to_string(s.seed) + "\n";
    }
    return out;
}

}  // namespace traysight
