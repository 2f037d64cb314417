#include "traysight/placement.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "text.hpp"
#include "traysight/error.hpp"
#include "traysight/stats.hpp"

namespace traysight {

namespace {

constexpr std::string_view kMagic = "TRAYSIGHT-PLACEMENT";
constexpr std::string_view kVersion = "1";

double roi_mean(const GrayImage& img, const Rect& roi) {
    if (!img.contains(roi)) {
        throw Error(ErrorCode::OutOfBounds, "roi " + to_string(roi) + " outside image " +
                                                std::to_string(img.width()) + "x" +
                                                std::to_string(img.height()));
    }
    return mean_intensity(histogram(img, roi));
}

}  // namespace

double PlacementModel::threshold() const noexcept { return std::max(z * std_value, eps_floor); }

void validate(const PlacementModel& m) {
    validate(m.roi);
    if (m.n < 2) throw Error(ErrorCode::InsufficientSamples, "model n must be >= 2");
    if (!std::isfinite(m.mean_value) || m.mean_value < 0.0 || m.mean_value > 255.0) {
        throw Error(ErrorCode::InvalidValue, "mean outside [0, 255]");
    }
    if (!std::isfinite(m.std_value) || m.std_value < 0.0) throw Error(ErrorCode::InvalidValue, "std must be >= 0");
    if (!std::isfinite(m.z) || m.z <= 0.0) throw Error(ErrorCode::InvalidValue, "z must be > 0");
    if (!std::isfinite(m.eps_floor) || m.eps_floor < 0.0) {
        throw Error(ErrorCode::InvalidValue, "eps_floor must be >= 0");
    }
}

PlacementCalibration calibrate_placement(std::span<const GrayImage> samples, const Rect& roi,
                                         const PlacementOptions& opts) {
    validate(roi);
    if (samples.size() < 2) {
        throw Error(ErrorCode::InsufficientSamples,
                    "placement calibration needs >= 2 samples, got " + std::to_string(samples.size()));
    }
    std::vector<double> values;
    values.reserve(samples.size());
    for (const auto& img : samples) values.push_back(roi_mean(img, roi));
    return calibrate_placement(SampleSet(std::move(values)), roi, opts);
}

PlacementCalibration calibrate_placement(const SampleSet& set, const Rect& roi, const PlacementOptions& opts) {
    validate(roi);
    if (set.size() < 2) {
        throw Error(ErrorCode::InsufficientSamples,
                    "placement calibration needs >= 2 samples, got " + std::to_string(set.size()));
    }
    PlacementCalibration out;
    out.model.roi = roi;
    out.model.n = set.size();
    out.model.mean_value = sample_mean(set);
    out.model.std_value = sample_std(set);
    out.model.z = opts.z;
    out.model.eps_floor = opts.eps_floor;
    validate(out.model);
    if (set.size() < opts.min_n) out.warning = "under-sampled n=" + std::to_string(set.size());
    return out;
}

PlacementVerdict judge_placement(double value, const PlacementModel& model) noexcept {
    PlacementVerdict v;
    v.value = value;
    v.deviation = std::abs(value - model.mean_value);
    v.threshold = model.threshold();
    v.correct = v.deviation <= v.threshold;
    return v;
}

PlacementVerdict verify_placement(const GrayImage& image, const PlacementModel& model) {
    return judge_placement(roi_mean(image, model.roi), model);
}

std::string save_placement_model(const PlacementModel& m) {
    validate(m);
    std::string out;
    out += std::string(kMagic) + " " + std::string(kVersion) + "\n";
    out += "roi " + std::to_string(m.roi.x) + " " + std::to_string(m.roi.y) + " " + std::to_string(m.roi.w) +
           " " + std::to_string(m.roi.h) + "\n";
    out += "n " + std::to_string(m.n) + "\n";
    out += "mean " + detail::format_decimal(m.mean_value) + "\n";
    out += "std " + detail::format_decimal(m.std_value) + "\n";
    out += "z " + detail::format_decimal(m.z) + "\n";
    out += "eps_floor " + detail::format_decimal(m.eps_floor) + "\n";
    return out;
}

PlacementModel load_placement_model(std::string_view text) {
    auto lines = detail::split_lines(text);
    while (!lines.empty() && detail::trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw Error(ErrorCode::MalformedHeader, "empty placement model file");

    const auto head = detail::split_ws(lines[0]);
    if (head.size() != 2 || head[0] != kMagic) {
        throw Error(ErrorCode::MalformedHeader, "expected '" + std::string(kMagic) + " 1'");
    }
    if (head[1] != kVersion) {
        throw Error(ErrorCode::VersionMismatch, "placement model version '" + std::string(head[1]) + "'");
    }
    if (lines.size() != 7) {
        throw Error(ErrorCode::MalformedLine, "placement model needs 7 lines, got " + std::to_string(lines.size()));
    }

    auto fields = [&](std::size_t lineno, std::string_view key, std::size_t count) {
        auto t = detail::split_ws(lines[lineno]);
        if (t.size() != count + 1 || t[0] != key) {
            throw Error(ErrorCode::MalformedLine, "line " + std::to_string(lineno + 1) + ": expected '" +
                                                      std::string(key) + "' with " + std::to_string(count) +
                                                      " value(s)");
        }
        t.erase(t.begin());
        return t;
    };
    auto number = [&](std::size_t lineno, std::string_view key) {
        auto v = detail::parse_double(fields(lineno, key, 1)[0]);
        if (!v) throw Error(ErrorCode::MalformedLine, "line " + std::to_string(lineno + 1) + ": bad decimal");
        return *v;
    };

    PlacementModel m;
    const auto roi = fields(1, "roi", 4);
    int r[4];
    for (std::size_t k = 0; k < 4; ++k) {
        auto v = detail::parse_int(roi[k]);
        if (!v || *v < INT32_MIN || *v > INT32_MAX) {
            throw Error(ErrorCode::MalformedLine, "line 2: non-integer roi field");
        }
        r[k] = static_cast<int>(*v);
    }
    m.roi = {r[0], r[1], r[2], r[3]};
    auto n = detail::parse_u64(fields(2, "n", 1)[0]);
    if (!n) throw Error(ErrorCode::MalformedLine, "line 3: non-integer n");
    m.n = static_cast<std::size_t>(*n);
    m.mean_value = number(3, "mean");
    m.std_value = number(4, "std");
    m.z = number(5, "z");
    m.eps_floor = number(6, "eps_floor");
    validate(m);
    return m;
}

}  // namespace traysight
