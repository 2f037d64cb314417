#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "traysight/imaging.hpp"
#include "traysight/stats.hpp"

namespace traysight {

inline constexpr double kDefaultZ = 1.96;
inline constexpr double kDefaultEpsFloor = 0.5;
inline constexpr std::size_t kDefaultMinSamples = 30;

/// Socket placement model: distribution of the ROI mean intensity over
/// known-good placements.
struct PlacementModel {
    Rect roi;
    std::size_t n = 0;
    double mean_value = 0.0;
    double std_value = 0.0;
    double z = kDefaultZ;
    double eps_floor = kDefaultEpsFloor;

    /// Acceptance half-band: max(z * std_value, eps_floor).
    double threshold() const noexcept;

    bool operator==(const PlacementModel&) const = default;
};

/// Throws InvalidValue/InsufficientSamples on a model that breaks its invariants.
void validate(const PlacementModel& model);

struct PlacementVerdict {
    bool correct = false;
    double value = 0.0;
    double deviation = 0.0;
    double threshold = 0.0;
};

struct PlacementOptions {
    double z = kDefaultZ;
    std::size_t min_n = kDefaultMinSamples;
    double eps_floor = kDefaultEpsFloor;
};

struct PlacementCalibration {
    PlacementModel model;
    /// Set when 2 <= n < min_n.
    std::optional<std::string> warning;
};

/// Fits the model from the ROI means of `samples`. Requires at least two
/// samples; fewer than `opts.min_n` yields a model plus a warning.
PlacementCalibration calibrate_placement(std::span<const GrayImage> samples, const Rect& roi,
                                         const PlacementOptions& opts = {});
/// Same fit from ROI means that were measured elsewhere.
PlacementCalibration calibrate_placement(const SampleSet& values, const Rect& roi,
                                         const PlacementOptions& opts = {});

/// Applies the acceptance rule to an already-measured ROI mean.
PlacementVerdict judge_placement(double value, const PlacementModel& model) noexcept;
PlacementVerdict verify_placement(const GrayImage& image, const PlacementModel& model);

std::string save_placement_model(const PlacementModel& model);
PlacementModel load_placement_model(std::string_view text);

}  // namespace traysight
