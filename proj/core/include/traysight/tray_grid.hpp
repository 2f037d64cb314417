#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "traysight/imaging.hpp"

namespace traysight {

/// Pocket grid of one feeding tray in image coordinates.
///
/// Slots are indexed row-major from the top-left pocket: left to right
/// within a row, rows top to bottom.
struct TrayLayout {
    int rows = 1;
    int cols = 1;
    int origin_x = 0;
    int origin_y = 0;
    int pitch_x = 1;
    int pitch_y = 1;
    int slot_w = 1;
    int slot_h = 1;

    std::size_t slot_count() const noexcept {
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }
    /// Smallest image width/height that contains every slot.
    int extent_x() const noexcept { return origin_x + (cols - 1) * pitch_x + slot_w; }
    int extent_y() const noexcept { return origin_y + (rows - 1) * pitch_y + slot_h; }

    bool operator==(const TrayLayout&) const = default;
};

/// Throws InvariantViolation naming the first broken constraint.
void validate(const TrayLayout& layout);

/// Parses the eight-key `key = value` layout dialect. '#' starts a comment,
/// LF and CRLF line endings are accepted. Every key is required exactly once.
TrayLayout parse_layout(std::string_view text);
std::string format_layout(const TrayLayout& layout);
TrayLayout load_layout(const std::filesystem::path& path);

Rect slot_rect(const TrayLayout& layout, std::size_t index);

/// Throws OutOfBounds unless every slot of `layout` lies inside `img`.
void require_fits(const TrayLayout& layout, const GrayImage& img);

}  // namespace traysight
