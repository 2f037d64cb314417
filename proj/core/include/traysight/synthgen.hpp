#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "traysight/evaluation.hpp"
#include "traysight/imaging.hpp"
#include "traysight/tray_grid.hpp"

namespace traysight {

/// Synthetic feeding-tray scene with planted occupancy.
struct SceneSpec {
    TrayLayout layout;
    std::vector<bool> occupancy;
    double mu_with = 120.0;
    double mu_without = 40.0;
    double sigma = 0.0;
    double background = 90.0;
    std::uint64_t seed = 0;
};

/// Throws InvariantViolation on a malformed spec. With `require_separable`,
/// mu_with == mu_without is also rejected.
void validate(const SceneSpec& spec, bool require_separable = false);

struct TrayScene {
    GrayImage image;
    std::vector<bool> truth;
};

/// Image size is (origin_x + cols * pitch_x) x (origin_y + rows * pitch_y).
/// Slot pixels ~ Normal(mu_with | mu_without, sigma), everything else
/// ~ Normal(background, sigma); clamped to [0, 255] then rounded.
TrayScene generate_tray(const SceneSpec& spec);

struct SocketSeriesSpec {
    Rect roi;
    double mu = 118.0;
    double sigma = 2.0;
    std::size_t count = 30;
    double background = 60.0;
    std::uint64_t seed = 0;
};

void validate(const SocketSeriesSpec& spec);

/// `count` images of size (2*roi.x + roi.w) x (2*roi.y + roi.h). Image i
/// depends only on (seed, i).
std::vector<GrayImage> generate_socket_series(const SocketSeriesSpec& spec);

/// Ground-truth records "<tray_id>:<slot>" with 1-based slot numbers.
std::vector<LabelRecord> truth_records(std::string_view tray_id, const std::vector<bool>& occupancy);

// Scene manifest: the layout key=value dialect extended with scene keys.
//   kind = tray   -> layout keys, occupancy (bitstring), mu_with, mu_without,
//                    sigma, background, seed, id
//   kind = socket -> roi_x, roi_y, roi_w, roi_h, mu, sigma, count,
//                    background, seed, id
struct SceneManifest {
    enum class Kind { Tray, Socket };
    Kind kind = Kind::Tray;
    std::string id = "scene";
    SceneSpec tray;
    SocketSeriesSpec socket;
};

SceneManifest parse_scene_manifest(std::string_view text);
std::string format_scene_manifest(const SceneManifest& manifest);

}  // namespace traysight
