#include "traysight/presence.hpp"

#include <algorithm>
#include <cmath>

#include "text.hpp"
#include "traysight/error.hpp"
#include "traysight/stats.hpp"

namespace traysight {

namespace {

constexpr std::string_view kMagic = "TRAYSIGHT-PRESENCE";
constexpr std::string_view kVersion = "1";

bool valid_intensity(double v) noexcept { return std::isfinite(v) && v >= 0.0 && v <= 255.0; }

}  // namespace

PresenceReferenceSet::PresenceReferenceSet(TrayLayout layout, std::vector<SlotReference> slots)
    : layout_(layout), slots_(std::move(slots)) {
    validate(layout_);
    if (slots_.size() != layout_.slot_count()) {
        throw Error(ErrorCode::SlotCountMismatch, "layout has " + std::to_string(layout_.slot_count()) +
                                                      " slots, got " + std::to_string(slots_.size()) +
                                                      " references");
    }
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        const auto& s = slots_[i];
        if (!valid_intensity(s.value_with) || !valid_intensity(s.value_without)) {
            throw Error(ErrorCode::InvalidValue, "slot " + std::to_string(i) + " reference outside [0, 255]");
        }
        if (s.value_with == s.value_without) {
            throw Error(ErrorCode::DegenerateCalibration,
                        "slot " + std::to_string(i) + " has identical with/without references (" +
                            std::to_string(s.value_with) + ")");
        }
    }
}

std::string OccupancyResult::bitstring() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

double slot_value(const GrayImage& img, const TrayLayout& layout, std::size_t index) {
    return mean_intensity(histogram(img, slot_rect(layout, index)));
}

PresenceReferenceSet calibrate_presence(const GrayImage& with_image, const GrayImage& without_image,
                                        const TrayLayout& layout) {
    validate(layout);
    require_fits(layout, with_image);
    require_fits(layout, without_image);
    std::vector<SlotReference> refs(layout.slot_count());
    for (std::size_t i = 0; i < refs.size(); ++i) {
        refs[i].value_with = slot_value(with_image, layout, i);
        refs[i].value_without = slot_value(without_image, layout, i);
    }
    return {layout, std::move(refs)};
}

bool classify_slot(double value_unknown, double value_with, double value_without) noexcept {
    return std::abs(value_unknown - value_with) < std::abs(value_unknown - value_without);
}

OccupancyResult inspect_tray(const GrayImage& image, const TrayLayout& layout,
                             const PresenceReferenceSet& refs, double outlier_k) {
    if (!std::isfinite(outlier_k) || outlier_k <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "outlier_k must be > 0");
    }
    if (refs.layout() != layout) {
        throw Error(ErrorCode::FingerprintMismatch,
                    "references were calibrated against a different tray layout");
    }
    require_fits(layout, image);

    const auto n = layout.slot_count();
    OccupancyResult out;
    out.bits.resize(n);
    out.warnings.resize(n);
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& ref = refs.slot(i);
        const double u = slot_value(image, layout, i);
        const double d_with = std::abs(u - ref.value_with);
        const double d_without = std::abs(u - ref.value_without);
        out.values[i] = u;
        out.bits[i] = classify_slot(u, ref.value_with, ref.value_without) ? 1 : 0;
        out.warnings[i] =
            std::min(d_with, d_without) > outlier_k * std::abs(ref.value_with - ref.value_without) ? 1 : 0;
    }
    return out;
}

std::string save_presence_refs(const PresenceReferenceSet& refs) {
    const auto& l = refs.layout();
    std::string out;
    out += std::string(kMagic) + " " + std::string(kVersion) + "\n";
    out += "layout " + std::to_string(l.rows) + " " + std::to_string(l.cols) + " " +
           std::to_string(l.origin_x) + " " + std::to_string(l.origin_y) + " " + std::to_string(l.pitch_x) +
           " " + std::to_string(l.pitch_y) + " " + std::to_string(l.slot_w) + " " +
           std::to_string(l.slot_h) + "\n";
    for (std::size_t i = 0; i < refs.slots().size(); ++i) {
        const auto& s = refs.slots()[i];
        out += "slot " + std::to_string(i) + " with " + detail::format_decimal(s.value_with) + " without " +
               detail::format_decimal(s.value_without) + "\n";
    }
    return out;
}

PresenceReferenceSet load_presence_refs(std::string_view text) {
    auto lines = detail::split_lines(text);
    while (!lines.empty() && detail::trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw Error(ErrorCode::MalformedHeader, "empty presence reference file");

    const auto head = detail::split_ws(lines[0]);
    if (head.size() != 2 || head[0] != kMagic) {
        throw Error(ErrorCode::MalformedHeader, "expected '" + std::string(kMagic) + " 1'");
    }
    if (head[1] != kVersion) {
        throw Error(ErrorCode::VersionMismatch, "presence reference version '" + std::string(head[1]) + "'");
    }

    auto bad_line = [](std::size_t lineno, const std::string& why) {
        return Error(ErrorCode::MalformedLine, "line " + std::to_string(lineno + 1) + ": " + why);
    };

    if (lines.size() < 2) throw bad_line(1, "missing layout line");
    const auto lt = detail::split_ws(lines[1]);
    if (lt.size() != 9 || lt[0] != "layout") throw bad_line(1, "expected 'layout' with 8 integers");
    int f[8];
    for (int k = 0; k < 8; ++k) {
        auto v = detail::parse_int(lt[static_cast<std::size_t>(k) + 1]);
        if (!v || *v < INT32_MIN || *v > INT32_MAX) throw bad_line(1, "non-integer layout field");
        f[k] = static_cast<int>(*v);
    }
    const TrayLayout layout{f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7]};
    validate(layout);

    const std::size_t declared = layout.slot_count();
    const std::size_t present = lines.size() - 2;
    if (present != declared) {
        throw Error(ErrorCode::SlotCountMismatch, "layout declares " + std::to_string(declared) +
                                                      " slots, file has " + std::to_string(present) +
                                                      " slot lines");
    }

    std::vector<SlotReference> slots(declared);
    for (std::size_t i = 0; i < declared; ++i) {
        const std::size_t lineno = i + 2;
        const auto t = detail::split_ws(lines[lineno]);
        if (t.size() != 6 || t[0] != "slot" || t[2] != "with" || t[4] != "without") {
            throw bad_line(lineno, "expected 'slot <index> with <value> without <value>'");
        }
        auto idx = detail::parse_u64(t[1]);
        if (!idx || *idx != i) throw bad_line(lineno, "expected slot index " + std::to_string(i));
        auto w = detail::parse_double(t[3]);
        auto o = detail::parse_double(t[5]);
        if (!w || !o) throw bad_line(lineno, "non-numeric reference value");
        slots[i] = {*w, *o};
    }
    return {layout, std::move(slots)};
}

}  // namespace traysight
