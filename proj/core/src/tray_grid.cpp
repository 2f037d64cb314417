#include "traysight/tray_grid.hpp"

#include "text.hpp"
#include "traysight/error.hpp"

namespace traysight {

namespace {

void check(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::InvariantViolation, what);
}

}  // namespace

void validate(const TrayLayout& l) {
    check(l.rows >= 1, "rows must be >= 1");
    check(l.cols >= 1, "cols must be >= 1");
    check(l.origin_x >= 0, "origin_x must be >= 0");
    check(l.origin_y >= 0, "origin_y must be >= 0");
    check(l.pitch_x >= 1, "pitch_x must be >= 1");
    check(l.pitch_y >= 1, "pitch_y must be >= 1");
    check(l.slot_w >= 1, "slot_w must be >= 1");
    check(l.slot_h >= 1, "slot_h must be >= 1");
    check(l.slot_w <= l.pitch_x, "slots overlap: slot_w " + std::to_string(l.slot_w) + " > pitch_x " +
                                     std::to_string(l.pitch_x));
    check(l.slot_h <= l.pitch_y, "slots overlap: slot_h " + std::to_string(l.slot_h) + " > pitch_y " +
                                     std::to_string(l.pitch_y));
    const long long ex = static_cast<long long>(l.origin_x) + static_cast<long long>(l.cols) * l.pitch_x;
    const long long ey = static_cast<long long>(l.origin_y) + static_cast<long long>(l.rows) * l.pitch_y;
    check(ex <= INT32_MAX && ey <= INT32_MAX, "layout extent overflows");
}

TrayLayout parse_layout(std::string_view text) {
    detail::KeyValueText kv(text);
    TrayLayout l;
    l.rows = kv.require_int("rows");
    l.cols = kv.require_int("cols");
    l.origin_x = kv.require_int("origin_x");
    l.origin_y = kv.require_int("origin_y");
    l.pitch_x = kv.require_int("pitch_x");
    l.pitch_y = kv.require_int("pitch_y");
    l.slot_w = kv.require_int("slot_w");
    l.slot_h = kv.require_int("slot_h");
    kv.reject_unconsumed();
    validate(l);
    return l;
}

std::string format_layout(const TrayLayout& l) {
    return "rows = " + std::to_string(l.rows) + "\ncols = " + std::to_string(l.cols) +
           "\norigin_x = " + std::to_string(l.origin_x) + "\norigin_y = " + std::to_string(l.origin_y) +
           "\npitch_x = " + std::to_string(l.pitch_x) + "\npitch_y = " + std::to_string(l.pitch_y) +
           "\nslot_w = " + std::to_string(l.slot_w) + "\nslot_h = " + std::to_string(l.slot_h) + "\n";
}

TrayLayout load_layout(const std::filesystem::path& path) {
    const auto text = detail::read_file(path);
    try {
        return parse_layout(text);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.detail());
    }
}

Rect slot_rect(const TrayLayout& l, std::size_t index) {
    if (index >= l.slot_count()) {
        throw Error(ErrorCode::OutOfBounds, "slot index " + std::to_string(index) + " not in [0, " +
                                                std::to_string(l.slot_count()) + ")");
    }
    const auto cols = static_cast<std::size_t>(l.cols);
    const int row = static_cast<int>(index / cols);
    const int col = static_cast<int>(index % cols);
    return {l.origin_x + col * l.pitch_x, l.origin_y + row * l.pitch_y, l.slot_w, l.slot_h};
}

void require_fits(const TrayLayout& l, const GrayImage& img) {
    if (l.extent_x() > img.width() || l.extent_y() > img.height()) {
        throw Error(ErrorCode::OutOfBounds, "layout needs " + std::to_string(l.extent_x()) + "x" +
                                                std::to_string(l.extent_y()) + ", image is " +
                                                std::to_string(img.width()) + "x" +
                                                std::to_string(img.height()));
    }
}

}  // namespace traysight
